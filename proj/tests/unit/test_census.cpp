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

#include <bit>
#include <random>

#include "ssgm/aggregator.hpp"
#include "ssgm/census.hpp"
#include "ssgm/error.hpp"
#include "test_support.hpp"

namespace ssgm {
namespace {

std::uint64_t naive_descriptor(const GrayImage& img, int row, int col, int window) {
  const int h = window / 2;
  std::uint64_t bits = 0;
  int k = 0;
  for (int dr = -h; dr <= h; ++dr) {
    for (int dc = -h; dc <= h; ++dc) {
      if (dr == 0 && dc == 0) {
        continue;
      }
      if (img.at(row + dr, col + dc) < img.at(row, col)) {
        bits |= std::uint64_t{1} << k;
      }
      ++k;
    }
  }
  return bits;
}

TEST(Census, ConstantImageIsAllZero) {
  const CensusField f = census_transform(GrayImage(12, 10, 77), 7);
  for (std::uint64_t d : f.desc) {
    EXPECT_EQ(d, 0u);
  }
}

TEST(Census, BrightCentreSetsEveryBit) {
  GrayImage img(7, 7, 0);
  img.at(3, 3) = 255;
  const CensusField f = census_transform(img, 7);
  EXPECT_EQ(f.bits(), 48);
  EXPECT_EQ(f.at(3, 3), (std::uint64_t{1} << 48) - 1);
}

TEST(Census, MatchesNaiveWindowScan) {
  std::mt19937 rng(9);
  for (int window : {3, 5, 7}) {
    for (int trial = 0; trial < 10; ++trial) {
      const GrayImage img = testing::random_image(rng, 9, 9);
      const CensusField f = census_transform(img, window);
      for (int r = 0; r < 9; ++r) {
        for (int c = 0; c < 9; ++c) {
          const std::uint64_t want = f.interior(r, c) ? naive_descriptor(img, r, c, window) : 0;
          EXPECT_EQ(f.at(r, c), want) << "window " << window << " at " << r << "," << c;
        }
      }
    }
  }
}

TEST(Census, CostIsPopcountOfXor) {
  // Left descriptor 0b10110, right 0b00011 differ in 3 bits; identical in the other case.
  EXPECT_EQ(std::popcount(std::uint64_t{0b10110} ^ std::uint64_t{0b00011}), 3);

  GrayImage left(9, 9, 50);
  left.at(4, 4) = 100; // every neighbour darker: all 48 bits
  GrayImage right(9, 9, 50);
  const CensusField lf = census_transform(left, 7);
  const CensusField rf = census_transform(right, 7);
  const CostRowVector v = cost_vector(lf, rf, 4, 4, 2, 255);
  EXPECT_EQ(v.valid_range, 2);
  EXPECT_EQ(v.costs[0], 48);
}

TEST(Census, CostVectorMatchesNaiveOracle) {
  std::mt19937 rng(31);
  const int D = 8;
  const GrayImage left = testing::random_image(rng, 16, 16);
  const GrayImage right = testing::random_image(rng, 16, 16);
  const CensusField lf = census_transform(left, 7);
  const CensusField rf = census_transform(right, 7);
  for (int r = 3; r < 13; ++r) {
    for (int c = 3; c < 13; ++c) {
      const CostRowVector v = cost_vector(lf, rf, r, c, D, 255);
      EXPECT_EQ(v.valid_range, std::min(D, c - 3 + 1));
      for (int d = 0; d < D; ++d) {
        if (d < v.valid_range) {
          const auto want = std::popcount(naive_descriptor(left, r, c, 7) ^ naive_descriptor(right, r, c - d, 7));
          EXPECT_EQ(v.costs[d], want);
        } else {
          EXPECT_EQ(v.costs[d], 255);
        }
      }
    }
  }
}

TEST(Census, CostRowAgreesWithCostVector) {
  std::mt19937 rng(4);
  const GrayImage left = testing::random_image(rng, 20, 9);
  const GrayImage right = testing::random_image(rng, 20, 9);
  const CensusField lf = census_transform(left, 5);
  const CensusField rf = census_transform(right, 5);
  const int D = 6;
  std::vector<std::uint8_t> row(20 * D);
  cost_row(lf, rf, 4, D, 200, row);
  for (int c = 0; c < 20; ++c) {
    for (int d = 0; d < D; ++d) {
      const std::uint8_t want = lf.interior(4, c) ? cost_vector(lf, rf, 4, c, D, 200).costs[d] : 200;
      EXPECT_EQ(row[c * D + d], want);
    }
  }
}

TEST(Census, CostsNeverExceedDescriptorLength) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const GrayImage left = testing::random_image(rng, 24, 12);
    const GrayImage right = testing::random_image(rng, 24, 12);
    const CensusField lf = census_transform(left, 7);
    const CensusField rf = census_transform(right, 7);
    std::vector<std::uint8_t> row(24 * 16);
    for (int r = 3; r < 9; ++r) {
      cost_row(lf, rf, r, 16, 0, row);
      for (std::uint8_t v : row) {
        EXPECT_LE(v, 48);
      }
    }
  }
}

TEST(Census, InvariantToIntensityOffset) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    GrayImage left = testing::random_image(rng, 32, 20);
    GrayImage right = testing::random_image(rng, 32, 20);
    for (auto* img : {&left, &right}) {
      for (auto& v : img->data) {
        v = static_cast<std::uint8_t>(v / 2);
      }
    }
    GrayImage left2 = left;
    GrayImage right2 = right;
    for (auto* img : {&left2, &right2}) {
      for (auto& v : img->data) {
        v = static_cast<std::uint8_t>(v + 100);
      }
    }
    EXPECT_EQ(census_transform(left, 7).desc, census_transform(left2, 7).desc);
    RunConfig cfg;
    cfg.disparity_range = 8;
    EXPECT_EQ(match_frame(left, right, cfg), match_frame(left2, right2, cfg));
  }
}

TEST(Census, RejectsUnsupportedWindows) {
  const GrayImage img(20, 20);
  EXPECT_THROW(census_transform(img, 9), ParameterError);
  EXPECT_THROW(census_transform(img, 4), ParameterError);
  EXPECT_THROW(census_transform(img, 1), ParameterError);
  EXPECT_THROW(census_transform(GrayImage(6, 20), 7), DimensionError);
}

TEST(Census, SearchableRange) {
  EXPECT_EQ(searchable_range(3, 3, 92), 1);
  EXPECT_EQ(searchable_range(50, 3, 92), 48);
  EXPECT_EQ(searchable_range(200, 3, 92), 92);
}

} // namespace
} // namespace ssgm
