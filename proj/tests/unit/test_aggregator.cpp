/*
Copyright 2026 The ssgm Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "border_check.hpp"
#include "ssgm/aggregator.hpp"
#include "ssgm/error.hpp"
#include "ssgm/oracle.hpp"
#include "test_support.hpp"

namespace ssgm {
namespace {

int scalar_smoothing(const std::vector<int>& n, int d, int p1, int p2) {
  const int mn = *std::min_element(n.begin(), n.end());
  int best = n[d];
  if (d > 0) best = std::min(best, n[d - 1] + p1);
  if (d + 1 < static_cast<int>(n.size())) best = std::min(best, n[d + 1] + p1);
  best = std::min(best, mn + p2);
  return best - mn;
}

TEST(SmoothingTerm, HandExamples) {
  const std::vector<std::uint8_t> n{5, 3, 8, 20};
  const PenaltyParams pen{2, 10, 255};
  EXPECT_EQ(smoothing_term(n, 3, 0, pen), 2);
  EXPECT_EQ(smoothing_term(n, 3, 1, pen), 0);
  EXPECT_EQ(smoothing_term(n, 3, 2, pen), 2);
  EXPECT_EQ(smoothing_term(n, 3, 3, pen), 7);
}

TEST(SmoothingTerm, ConstantNeighbourContributesNothing) {
  const PenaltyParams pen{10, 120, 255};
  for (int v : {0, 17, 255}) {
    const std::vector<std::uint8_t> n(16, static_cast<std::uint8_t>(v));
    for (int d = 0; d < 16; ++d) {
      EXPECT_EQ(smoothing_term(n, static_cast<std::uint8_t>(v), d, pen), 0);
    }
  }
}

TEST(SmoothingTerm, AgreesWithScalarFormulaAndStaysBounded) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> val(0, 255);
  std::uniform_int_distribution<int> len(1, 40);
  for (int trial = 0; trial < 2000; ++trial) {
    const int D = len(rng);
    const int p1 = std::uniform_int_distribution<int>(0, 100)(rng);
    const int p2 = std::uniform_int_distribution<int>(p1 + 1, 255)(rng);
    std::vector<int> wide(D);
    std::vector<std::uint8_t> n(D);
    for (int d = 0; d < D; ++d) {
      wide[d] = val(rng);
      n[d] = static_cast<std::uint8_t>(wide[d]);
    }
    const auto mn = *std::min_element(n.begin(), n.end());
    for (int d = 0; d < D; ++d) {
      const int s = smoothing_term(n, mn, d, {p1, p2, 255});
      EXPECT_EQ(s, scalar_smoothing(wide, d, p1, p2));
      EXPECT_GE(s, 0);
      EXPECT_LE(s, p2);
    }
  }
}

TEST(AggState, StorageIsOneRowOfVectors) {
  const AggState s(640, 92, 255);
  EXPECT_EQ(s.row_cost_bytes(), 640u * 92u);
  EXPECT_EQ(s.cost_bytes(), 640u * 92u + 92u);
}

TEST(AggState, InitialisedToCap) {
  const AggState s(10, 4, 255);
  for (int c = 0; c < 10; ++c) {
    EXPECT_EQ(s.row_min(c), 255);
    for (auto v : s.row_costs(c)) EXPECT_EQ(v, 255);
  }
  EXPECT_EQ(s.left_min(), 255);
}

TEST(AggState, UpdateRollsLeftIntoRow) {
  AggState s(6, 3, 255);
  const std::vector<std::uint8_t> a{1, 2, 3};
  const std::vector<std::uint8_t> b{7, 8, 9};
  s.begin_row();
  update_state(s, 1, a, 1);
  // cost_row[0] took the (cap) left vector, cost_left now holds a.
  EXPECT_EQ(std::vector<std::uint8_t>(s.row_costs(0).begin(), s.row_costs(0).end()),
            (std::vector<std::uint8_t>{255, 255, 255}));
  EXPECT_EQ(std::vector<std::uint8_t>(s.left_costs().begin(), s.left_costs().end()), a);
  update_state(s, 2, b, 7);
  EXPECT_EQ(std::vector<std::uint8_t>(s.row_costs(1).begin(), s.row_costs(1).end()), a);
  EXPECT_EQ(s.row_min(1), 1);
  EXPECT_EQ(s.left_min(), 7);
  finish_row(s, 2);
  EXPECT_EQ(std::vector<std::uint8_t>(s.row_costs(2).begin(), s.row_costs(2).end()), b);
  s.begin_row();
  EXPECT_EQ(s.left_min(), 255);
}

TEST(AggregatePixel, FirstPixelKeepsRawCosts) {
  const AggState s(8, 5, 255);
  const std::vector<std::uint8_t> raw{9, 4, 30, 4, 48};
  std::vector<std::uint8_t> out(5);
  const PixelDecision win = aggregate_pixel(raw, s, 1, {10, 120, 255}, out);
  EXPECT_EQ(out, raw);
  EXPECT_EQ(win.disparity, 1); // tie at cost 4 goes to the lower index
  EXPECT_EQ(win.min_cost, 4);
}

TEST(AggregatePixel, SaturatesAtCap) {
  AggState s(4, 3, 255);
  const std::vector<std::uint8_t> nb{0, 255, 255};
  s.begin_row();
  update_state(s, 1, nb, 0);
  update_state(s, 2, nb, 0);
  finish_row(s, 2);
  s.begin_row();
  update_state(s, 1, nb, 0);
  const std::vector<std::uint8_t> raw{40, 40, 40};
  std::vector<std::uint8_t> out(3);
  aggregate_pixel(raw, s, 2, {10, 120, 60}, out);
  for (auto v : out) EXPECT_LE(v, 60);
  EXPECT_EQ(out[0], 40);
  EXPECT_EQ(out[2], 60);
}

TEST(StreamingMatcher, AllZeroCostsGiveZeroDisparity) {
  const GrayImage flat(20, 12, 90);
  RunConfig cfg;
  cfg.disparity_range = 8;
  const DisparityMap d = match_frame(flat, flat, cfg);
  for (int r = 0; r < 12; ++r) {
    for (int c = 0; c < 20; ++c) {
      const bool interior = r >= 3 && r < 9 && c >= 3 && c < 17;
      EXPECT_EQ(d.is_valid(r, c), interior);
      EXPECT_EQ(d.at(r, c), 0);
    }
  }
}

TEST(StreamingMatcher, IdenticalViewsGiveZeroDisparity) {
  std::mt19937 rng(2);
  RunConfig cfg;
  cfg.disparity_range = 16;
  const GrayImage img = testing::textured_image(rng, 48, 32);
  const DisparityMap d = match_frame(img, img, cfg);
  for (std::size_t i = 0; i < d.disp.size(); ++i) {
    if (d.valid[i]) EXPECT_EQ(d.disp[i], 0);
  }
}

TEST(StreamingMatcher, FramesAreIndependent) {
  std::mt19937 rng(6);
  RunConfig cfg;
  cfg.disparity_range = 16;
  const GrayImage a = testing::random_image(rng, 40, 24);
  const GrayImage b = testing::random_image(rng, 40, 24);
  const GrayImage c = testing::random_image(rng, 40, 24);
  StreamingMatcher m(cfg);
  const DisparityMap first = m.match(a, b);
  m.match(c, a);
  EXPECT_EQ(m.match(a, b), first);
  EXPECT_EQ(first, match_frame(a, b, cfg));
}

TEST(StreamingMatcher, AgreesWithFullVolumeOracle) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    RunConfig cfg;
    cfg.disparity_range = 8;
    cfg.p1 = 3 + trial;
    cfg.p2 = cfg.p1 + 40;
    const GrayImage left = testing::random_image(rng, 24, 18);
    const GrayImage right = testing::random_image(rng, 24, 18);
    CostVolume agg;
    const DisparityMap d = match_frame(left, right, cfg, agg);
    const oracle::MgmResult ref = oracle::mgm_full(left, right, cfg);
    ASSERT_EQ(d, ref.disparity);
    for (int r = 3; r < 15; ++r) {
      for (int c = 3; c < 21; ++c) {
        for (int k = 0; k < 8; ++k) {
          ASSERT_EQ(agg.at(r, c)[k], ref.aggregated.at(r, c)[k]) << r << "," << c << "," << k;
        }
      }
    }
  }
}

TEST(StreamingMatcher, BorderNeighboursContributeNothing) {
  std::mt19937 rng(40);
  RunConfig cfg;
  cfg.disparity_range = 12;
  const testing::BorderCheck chk =
      testing::check_border_nullity(testing::random_image(rng, 30, 20), testing::random_image(rng, 30, 20), cfg);
  EXPECT_TRUE(chk.corner_equals_raw);
  EXPECT_EQ(chk.edge_mismatches, 0u);
}

// A constant vector contributes exactly zero smoothing whatever its value, so zero
// and cap initialisation describe the same recursion.
TEST(StreamingMatcher, ZeroInitMatchesCapInit) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    RunConfig cap;
    cap.disparity_range = 16;
    RunConfig zero = cap;
    zero.init = BufferInit::kZero;
    const GrayImage left = testing::textured_image(rng, 48, 24);
    const GrayImage right = testing::shift_left_view(left, 4);
    CostVolume a;
    CostVolume b;
    EXPECT_EQ(match_frame(left, right, cap, a), match_frame(left, right, zero, b));
    EXPECT_EQ(a.data, b.data);
  }
}

TEST(StreamingMatcher, RejectsBadInputs) {
  RunConfig cfg;
  cfg.disparity_range = 16;
  EXPECT_THROW(match_frame(GrayImage(20, 20), GrayImage(21, 20), cfg), DimensionError);
  EXPECT_THROW(match_frame(GrayImage(10, 20), GrayImage(10, 20), cfg), DimensionError);
  cfg.p1 = cfg.p2;
  EXPECT_THROW(match_frame(GrayImage(20, 20), GrayImage(20, 20), cfg), ParameterError);
}

} // namespace
} // namespace ssgm
