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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ssgm/config.hpp"
#include "ssgm/cost_volume.hpp"
#include "ssgm/image.hpp"

namespace ssgm {

struct PenaltyParams {
  int p1 = 10;
  int p2 = 120;
  int cost_cap = 255;

  static PenaltyParams from(const RunConfig& cfg) { return {cfg.p1, cfg.p2, cfg.cost_cap}; }
};

/// One path's smoothing contribution for disparity d:
///   min(n[d], n[d-1] + p1, n[d+1] + p1, n_min + p2) - n_min
/// Always in [0, p2]; zero when `neigh` is constant.
int smoothing_term(std::span<const std::uint8_t> neigh, std::uint8_t neigh_min, int d,
                   const PenaltyParams& pen);

/// Aggregation state for one frame (or one strip of a frame).
///
/// Holds exactly one aggregated cost vector per column for the row above
/// (`cost_row`, width x D bytes) and one for the left neighbour (`cost_left`, D
/// bytes), plus their cached minima. While row r is being scanned at column c,
/// entries of cost_row at columns >= c still describe row r-1 and entries below
/// c-1 already describe row r.
class AggState {
public:
  AggState(int width, int disparity_range, std::uint8_t init_value);

  /// Per-frame initialisation: every cost and every cached minimum set to `init_value`.
  void reset(std::uint8_t init_value);
  void reset() { reset(init_value_); }

  /// Start of a row: the left neighbour is outside the image.
  void begin_row();

  int width() const { return width_; }
  int disparity_range() const { return disparities_; }
  std::uint8_t init_value() const { return init_value_; }

  std::span<const std::uint8_t> row_costs(int col) const {
    return {cost_row_.data() + static_cast<std::size_t>(col) * disparities_,
            static_cast<std::size_t>(disparities_)};
  }
  std::uint8_t row_min(int col) const { return min_row_[col]; }
  std::span<const std::uint8_t> left_costs() const { return cost_left_; }
  std::uint8_t left_min() const { return min_left_; }

  /// Bytes of aggregated-cost storage (cost_row plus cost_left).
  std::size_t cost_bytes() const { return cost_row_.size() + cost_left_.size(); }
  std::size_t row_cost_bytes() const { return cost_row_.size(); }

private:
  friend void update_state(AggState&, int, std::span<const std::uint8_t>, std::uint8_t);
  friend void finish_row(AggState&, int);

  int width_;
  int disparities_;
  std::uint8_t init_value_;
  std::vector<std::uint8_t> cost_row_;
  std::vector<std::uint8_t> min_row_;
  std::vector<std::uint8_t> cost_left_;
  std::uint8_t min_left_;
};

struct PixelDecision {
  int disparity = 0;        ///< argmin, lowest index on ties
  std::uint8_t min_cost = 0;
};

/// Aggregated costs of the pixel at `col` of the current row, written to `new_costs`:
///   min(cap, raw[d] + (S_tl + S_t + S_tr + S_l) >> 2)
/// where each S is the smoothing term of one grouped neighbour. Neighbours at
/// col-1 / col+1 must exist in the state (col in [1, width-2]).
PixelDecision aggregate_pixel(std::span<const std::uint8_t> raw, const AggState& state, int col,
                              const PenaltyParams& pen, std::span<std::uint8_t> new_costs);

/// Rolls the buffers after `col` was aggregated: cost_row[col-1] takes cost_left
/// (the top-left vector is no longer needed), then cost_left takes `new_costs`.
void update_state(AggState& state, int col, std::span<const std::uint8_t> new_costs, std::uint8_t new_min);

/// End of row: the last pixel's costs move from cost_left into cost_row[last_col].
void finish_row(AggState& state, int last_col);

/// Streaming matcher. Keeps its buffers between frames and re-initialises them at the
/// start of every frame.
class StreamingMatcher {
public:
  explicit StreamingMatcher(RunConfig cfg);

  const RunConfig& config() const { return cfg_; }

  /// Border pixels (closer than window/2 to an edge) come back invalid. When
  /// `aggregated` is non-null it receives the final aggregated cost vector of every
  /// valid pixel (other entries untouched).
  DisparityMap match(const GrayImage& left, const GrayImage& right, CostVolume* aggregated = nullptr);

  /// The state after the last frame; exposed for inspection.
  const AggState* state() const { return state_ ? &*state_ : nullptr; }

private:
  RunConfig cfg_;
  std::optional<AggState> state_; // sized on first use
};

/// Checks that the pair can be matched under `cfg` (same size, width >= D, at least a
/// window in each direction). Throws DimensionError / ParameterError.
void check_match_inputs(const GrayImage& left, const GrayImage& right, const RunConfig& cfg);

DisparityMap match_frame(const GrayImage& left, const GrayImage& right, const RunConfig& cfg);
DisparityMap match_frame(const GrayImage& left, const GrayImage& right, const RunConfig& cfg,
                         CostVolume& aggregated);

} // namespace ssgm
