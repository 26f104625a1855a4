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

#include "ssgm/oracle.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ssgm/error.hpp"

namespace ssgm::oracle {

namespace {

using Descriptor = std::bitset<64>;

void check_inputs(const GrayImage& left, const GrayImage& right, const RunConfig& cfg) {
  cfg.validate();
  if (left.width != right.width || left.height != right.height) {
    throw DimensionError("stereo pair size mismatch");
  }
  if (left.width < cfg.window || left.height < cfg.window || left.width < cfg.disparity_range) {
    throw DimensionError("images too small for window " + std::to_string(cfg.window) + " and range " +
                         std::to_string(cfg.disparity_range));
  }
}

// Descriptor of one pixel, built by walking the window literally.
Descriptor describe(const GrayImage& img, int r, int c, int half) {
  Descriptor bits;
  std::size_t k = 0;
  for (int dr = -half; dr <= half; ++dr) {
    for (int dc = -half; dc <= half; ++dc) {
      if (dr == 0 && dc == 0) {
        continue;
      }
      bits[k++] = img.at(r + dr, c + dc) < img.at(r, c);
    }
  }
  return bits;
}

// The two per-vector quantities of the recursion: min_k L(k) and min_i(L(i) + P2).
struct PrevStats {
  std::int32_t min;
  std::int32_t jump;
};

PrevStats prev_stats(std::span<const std::int32_t> prev, int p2) {
  std::int32_t jump = std::numeric_limits<std::int32_t>::max();
  for (const std::int32_t v : prev) {
    jump = std::min(jump, v + p2);
  }
  return {*std::min_element(prev.begin(), prev.end()), jump};
}

// min(L(d), L(d-1)+P1, L(d+1)+P1, min_i(L(i)+P2)) - min_k L(k), evaluated as written.
std::int32_t path_term(std::span<const std::int32_t> prev, const PrevStats& stats, int d, int p1) {
  const int D = static_cast<int>(prev.size());
  std::int32_t best = std::min(prev[d], stats.jump);
  if (d > 0) {
    best = std::min(best, prev[d - 1] + p1);
  }
  if (d + 1 < D) {
    best = std::min(best, prev[d + 1] + p1);
  }
  return best - stats.min;
}

int argmin_lowest(std::span<const std::int32_t> v) {
  int best = 0;
  for (int d = 1; d < static_cast<int>(v.size()); ++d) {
    if (v[d] < v[best]) {
      best = d;
    }
  }
  return best;
}

struct Offset {
  int dr;
  int dc;
};

// Predecessor offsets: the causal four, then their mirrors.
constexpr std::array<Offset, 8> kPathOffsets{{
    {0, -1}, {-1, -1}, {-1, 0}, {-1, 1},
    {0, 1},  {1, 1},   {1, 0},  {1, -1},
}};

} // namespace

ValidRegion valid_region(int width, int height, int window) {
  const int h = window / 2;
  return {h, height - h, h, width - h};
}

CostVolume naive_census_costs(const GrayImage& left, const GrayImage& right, const RunConfig& cfg) {
  check_inputs(left, right, cfg);
  const int W = left.width;
  const int H = left.height;
  const int D = cfg.disparity_range;
  const int h = cfg.half_window();
  const ValidRegion region = valid_region(W, H, cfg.window);

  std::vector<Descriptor> ld(static_cast<std::size_t>(W) * H);
  std::vector<Descriptor> rd(static_cast<std::size_t>(W) * H);
  for (int r = region.row_begin; r < region.row_end; ++r) {
    for (int c = region.col_begin; c < region.col_end; ++c) {
      ld[static_cast<std::size_t>(r) * W + c] = describe(left, r, c, h);
      rd[static_cast<std::size_t>(r) * W + c] = describe(right, r, c, h);
    }
  }

  CostVolume costs(H, W, D, cfg.cost_cap);
  for (int r = region.row_begin; r < region.row_end; ++r) {
    for (int c = region.col_begin; c < region.col_end; ++c) {
      auto out = costs.at(r, c);
      for (int d = 0; d < D; ++d) {
        if (c - d < region.col_begin) {
          break;
        }
        const Descriptor diff = ld[static_cast<std::size_t>(r) * W + c] ^ rd[static_cast<std::size_t>(r) * W + c - d];
        out[d] = static_cast<std::int32_t>(diff.count());
      }
    }
  }
  return costs;
}

MgmResult mgm_full_from_costs(const CostVolume& raw, const ValidRegion& region, const RunConfig& cfg) {
  const int D = raw.disparities;
  const std::vector<std::int32_t> absent(static_cast<std::size_t>(D), cfg.cost_cap);
  MgmResult result{DisparityMap(raw.cols, raw.rows), CostVolume(raw.rows, raw.cols, D, cfg.cost_cap)};
  CostVolume& L = result.aggregated;

  for (int r = region.row_begin; r < region.row_end; ++r) {
    for (int c = region.col_begin; c < region.col_end; ++c) {
      // top-left, top, top-right, left
      const std::array<Offset, 4> group{{{-1, -1}, {-1, 0}, {-1, 1}, {0, -1}}};
      std::vector<std::int32_t> total(static_cast<std::size_t>(D), 0);
      for (const Offset& o : group) {
        const int nr = r + o.dr;
        const int nc = c + o.dc;
        const std::span<const std::int32_t> n =
            region.contains(nr, nc) ? std::span<const std::int32_t>(std::as_const(L).at(nr, nc))
                                    : std::span<const std::int32_t>(absent);
        const PrevStats stats = prev_stats(n, cfg.p2);
        for (int d = 0; d < D; ++d) {
          total[d] += path_term(n, stats, d, cfg.p1);
        }
      }
      auto out = L.at(r, c);
      const auto cost = raw.at(r, c);
      for (int d = 0; d < D; ++d) {
        out[d] = std::min(cost[d] + total[d] / 4, cfg.cost_cap);
      }
      result.disparity.set(r, c, static_cast<std::uint8_t>(argmin_lowest(out)));
    }
  }
  return result;
}

MgmResult mgm_full(const GrayImage& left, const GrayImage& right, const RunConfig& cfg) {
  const CostVolume raw = naive_census_costs(left, right, cfg);
  return mgm_full_from_costs(raw, valid_region(left.width, left.height, cfg.window), cfg);
}

DisparityMap sgm_paths_from_costs(const CostVolume& raw, const ValidRegion& region, const RunConfig& cfg,
                                  int paths) {
  if (paths != 4 && paths != 8) {
    throw ParameterError("sgm_paths supports 4 or 8 paths, got " + std::to_string(paths));
  }
  const int D = raw.disparities;
  CostVolume sum(raw.rows, raw.cols, D, 0);
  CostVolume L(raw.rows, raw.cols, D, 0);

  for (int p = 0; p < paths; ++p) {
    const Offset pred = kPathOffsets[p];
    // Causal paths need a forward scan, mirrored ones a backward scan.
    const bool forward = p < 4;
    const int r0 = forward ? region.row_begin : region.row_end - 1;
    const int r1 = forward ? region.row_end : region.row_begin - 1;
    const int c0 = forward ? region.col_begin : region.col_end - 1;
    const int c1 = forward ? region.col_end : region.col_begin - 1;
    const int step = forward ? 1 : -1;
    for (int r = r0; r != r1; r += step) {
      for (int c = c0; c != c1; c += step) {
        auto out = L.at(r, c);
        const auto cost = raw.at(r, c);
        const int pr = r + pred.dr;
        const int pc = c + pred.dc;
        if (!region.contains(pr, pc)) {
          std::copy(cost.begin(), cost.end(), out.begin());
        } else {
          const auto prev = std::as_const(L).at(pr, pc);
          const PrevStats stats = prev_stats(prev, cfg.p2);
          for (int d = 0; d < D; ++d) {
            out[d] = cost[d] + path_term(prev, stats, d, cfg.p1);
          }
        }
        auto acc = sum.at(r, c);
        for (int d = 0; d < D; ++d) {
          acc[d] += out[d];
        }
      }
    }
  }

  DisparityMap map(raw.cols, raw.rows);
  for (int r = region.row_begin; r < region.row_end; ++r) {
    for (int c = region.col_begin; c < region.col_end; ++c) {
      map.set(r, c, static_cast<std::uint8_t>(argmin_lowest(std::as_const(sum).at(r, c))));
    }
  }
  return map;
}

DisparityMap sgm_paths(const GrayImage& left, const GrayImage& right, const RunConfig& cfg, int paths) {
  const CostVolume raw = naive_census_costs(left, right, cfg);
  return sgm_paths_from_costs(raw, valid_region(left.width, left.height, cfg.window), cfg, paths);
}

DisparityMap census_wta(const GrayImage& left, const GrayImage& right, const RunConfig& cfg) {
  const CostVolume raw = naive_census_costs(left, right, cfg);
  const ValidRegion region = valid_region(left.width, left.height, cfg.window);
  DisparityMap map(left.width, left.height);
  for (int r = region.row_begin; r < region.row_end; ++r) {
    for (int c = region.col_begin; c < region.col_end; ++c) {
      map.set(r, c, static_cast<std::uint8_t>(argmin_lowest(raw.at(r, c))));
    }
  }
  return map;
}

} // namespace ssgm::oracle
