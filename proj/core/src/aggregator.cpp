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

#include "ssgm/aggregator.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "ssgm/census.hpp"
#include "ssgm/error.hpp"

namespace ssgm {

namespace {

// Adds the smoothing term of one neighbour to sum[d] for every d.
void accumulate_smoothing(std::span<const std::uint8_t> n, int n_min, const PenaltyParams& pen,
                          std::span<int> sum) {
  const int D = static_cast<int>(n.size());
  const int jump = n_min + pen.p2;
  if (D == 1) {
    sum[0] += std::min<int>(n[0], jump) - n_min;
    return;
  }
  sum[0] += std::min({static_cast<int>(n[0]), n[1] + pen.p1, jump}) - n_min;
  for (int d = 1; d < D - 1; ++d) {
    const int step = std::min(n[d - 1], n[d + 1]) + pen.p1;
    sum[d] += std::min({static_cast<int>(n[d]), step, jump}) - n_min;
  }
  sum[D - 1] += std::min({static_cast<int>(n[D - 1]), n[D - 2] + pen.p1, jump}) - n_min;
}

std::uint8_t init_byte(const RunConfig& cfg) {
  return cfg.init == BufferInit::kCap ? static_cast<std::uint8_t>(cfg.cost_cap) : std::uint8_t{0};
}

} // namespace

int smoothing_term(std::span<const std::uint8_t> neigh, std::uint8_t neigh_min, int d,
                   const PenaltyParams& pen) {
  const int D = static_cast<int>(neigh.size());
  int best = std::min<int>(neigh[d], neigh_min + pen.p2);
  if (d > 0) {
    best = std::min(best, neigh[d - 1] + pen.p1);
  }
  if (d < D - 1) {
    best = std::min(best, neigh[d + 1] + pen.p1);
  }
  return best - neigh_min;
}

AggState::AggState(int width, int disparity_range, std::uint8_t init_value)
    : width_(width),
      disparities_(disparity_range),
      init_value_(init_value),
      cost_row_(static_cast<std::size_t>(width) * disparity_range),
      min_row_(static_cast<std::size_t>(width)),
      cost_left_(static_cast<std::size_t>(disparity_range)),
      min_left_(init_value) {
  if (width <= 0 || disparity_range <= 0) {
    throw ParameterError("aggregation state needs positive width and disparity range");
  }
  reset(init_value);
}

void AggState::reset(std::uint8_t init_value) {
  init_value_ = init_value;
  std::fill(cost_row_.begin(), cost_row_.end(), init_value);
  std::fill(min_row_.begin(), min_row_.end(), init_value);
  std::fill(cost_left_.begin(), cost_left_.end(), init_value);
  min_left_ = init_value;
}

void AggState::begin_row() {
  std::fill(cost_left_.begin(), cost_left_.end(), init_value_);
  min_left_ = init_value_;
}

PixelDecision aggregate_pixel(std::span<const std::uint8_t> raw, const AggState& state, int col,
                              const PenaltyParams& pen, std::span<std::uint8_t> new_costs) {
  const int D = state.disparity_range();
  // Sized for the widest supported range; sums of four terms <= 4 * p2 fit easily.
  std::array<int, 256> sum{};
  const std::span<int> acc(sum.data(), static_cast<std::size_t>(D));

  accumulate_smoothing(state.row_costs(col - 1), state.row_min(col - 1), pen, acc);
  accumulate_smoothing(state.row_costs(col), state.row_min(col), pen, acc);
  accumulate_smoothing(state.row_costs(col + 1), state.row_min(col + 1), pen, acc);
  accumulate_smoothing(state.left_costs(), state.left_min(), pen, acc);

  PixelDecision best{0, 255};
  int best_cost = pen.cost_cap + 1;
  for (int d = 0; d < D; ++d) {
    const int v = std::min(raw[d] + (acc[d] >> 2), pen.cost_cap);
    new_costs[d] = static_cast<std::uint8_t>(v);
    if (v < best_cost) {
      best_cost = v;
      best.disparity = d;
    }
  }
  best.min_cost = static_cast<std::uint8_t>(best_cost);
  return best;
}

void update_state(AggState& state, int col, std::span<const std::uint8_t> new_costs, std::uint8_t new_min) {
  const std::size_t D = static_cast<std::size_t>(state.disparities_);
  std::copy(state.cost_left_.begin(), state.cost_left_.end(),
            state.cost_row_.begin() + static_cast<std::ptrdiff_t>((col - 1) * D));
  state.min_row_[col - 1] = state.min_left_;
  std::copy(new_costs.begin(), new_costs.end(), state.cost_left_.begin());
  state.min_left_ = new_min;
}

void finish_row(AggState& state, int last_col) {
  const std::size_t D = static_cast<std::size_t>(state.disparities_);
  std::copy(state.cost_left_.begin(), state.cost_left_.end(),
            state.cost_row_.begin() + static_cast<std::ptrdiff_t>(last_col * D));
  state.min_row_[last_col] = state.min_left_;
}

void check_match_inputs(const GrayImage& left, const GrayImage& right, const RunConfig& cfg) {
  cfg.validate();
  if (left.width != right.width || left.height != right.height) {
    throw DimensionError("stereo pair size mismatch: " + std::to_string(left.width) + "x" +
                         std::to_string(left.height) + " vs " + std::to_string(right.width) + "x" +
                         std::to_string(right.height));
  }
  if (left.width < cfg.window || left.height < cfg.window) {
    throw DimensionError("images smaller than the census window");
  }
  if (left.width < cfg.disparity_range) {
    throw DimensionError("image width " + std::to_string(left.width) + " below disparity range " +
                         std::to_string(cfg.disparity_range));
  }
}

StreamingMatcher::StreamingMatcher(RunConfig cfg) : cfg_(cfg) { cfg_.validate(); }

DisparityMap StreamingMatcher::match(const GrayImage& left, const GrayImage& right, CostVolume* aggregated) {
  check_match_inputs(left, right, cfg_);
  const int W = left.width;
  const int H = left.height;
  const int D = cfg_.disparity_range;
  const int h = cfg_.half_window();
  const auto cap = static_cast<std::uint8_t>(cfg_.cost_cap);
  const PenaltyParams pen = PenaltyParams::from(cfg_);

  if (!state_ || state_->width() != W || state_->disparity_range() != D) {
    state_.emplace(W, D, init_byte(cfg_));
  } else {
    state_->reset(init_byte(cfg_));
  }
  AggState& state = *state_;

  if (aggregated && (aggregated->rows != H || aggregated->cols != W || aggregated->disparities != D)) {
    *aggregated = CostVolume(H, W, D);
  }

  const CensusField lc = census_transform(left, cfg_.window);
  const CensusField rc = census_transform(right, cfg_.window);

  DisparityMap out(W, H);
  std::vector<std::uint8_t> raw(static_cast<std::size_t>(W) * D);
  std::vector<std::uint8_t> fresh(static_cast<std::size_t>(D));
  const int first_col = h;
  const int last_col = W - h - 1;

  for (int r = h; r < H - h; ++r) {
    cost_row(lc, rc, r, D, cap, raw);
    state.begin_row();
    for (int c = first_col; c <= last_col; ++c) {
      const std::span<const std::uint8_t> pixel_raw(raw.data() + static_cast<std::size_t>(c) * D,
                                                    static_cast<std::size_t>(D));
      const PixelDecision win = aggregate_pixel(pixel_raw, state, c, pen, fresh);
      update_state(state, c, fresh, win.min_cost);
      out.set(r, c, static_cast<std::uint8_t>(win.disparity));
      if (aggregated) {
        std::copy(fresh.begin(), fresh.end(), aggregated->at(r, c).begin());
      }
    }
    finish_row(state, last_col);
  }
  return out;
}

DisparityMap match_frame(const GrayImage& left, const GrayImage& right, const RunConfig& cfg) {
  return StreamingMatcher(cfg).match(left, right);
}

DisparityMap match_frame(const GrayImage& left, const GrayImage& right, const RunConfig& cfg,
                         CostVolume& aggregated) {
  return StreamingMatcher(cfg).match(left, right, &aggregated);
}

} // namespace ssgm
