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

#include "ssgm/config.hpp"
#include "ssgm/cost_volume.hpp"
#include "ssgm/image.hpp"

// Slow reference matchers. Nothing here shares code with the streaming engine: the
// census costs are rebuilt from raw pixels and every aggregated cost is kept in a
// full volume.
namespace ssgm::oracle {

/// Census-valid rectangle of an image: rows/cols in [half, size - half).
struct ValidRegion {
  int row_begin = 0;
  int row_end = 0;
  int col_begin = 0;
  int col_end = 0;

  bool contains(int r, int c) const { return r >= row_begin && r < row_end && c >= col_begin && c < col_end; }
};

ValidRegion valid_region(int width, int height, int window);

/// Raw census Hamming costs C(p, d) recomputed window-by-window from the pixels.
/// Outside the valid region, and for disparities whose right window is not
/// census-valid, entries hold cfg.cost_cap.
CostVolume naive_census_costs(const GrayImage& left, const GrayImage& right, const RunConfig& cfg);

struct MgmResult {
  DisparityMap disparity;
  CostVolume aggregated; // final costs; valid pixels only are meaningful
};

/// Single-group MGM over the 4 causal neighbours with the streaming engine's exact
/// integer decisions (divide-by-4 shift, cap after add, lowest-index argmin).
MgmResult mgm_full(const GrayImage& left, const GrayImage& right, const RunConfig& cfg);
MgmResult mgm_full_from_costs(const CostVolume& raw, const ValidRegion& region, const RunConfig& cfg);

/// Classic SGM: one unsaturated recursion per path, summed, then argmin. `paths`
/// is 4 (causal directions only) or 8 (adds a reverse scan).
DisparityMap sgm_paths(const GrayImage& left, const GrayImage& right, const RunConfig& cfg, int paths);
DisparityMap sgm_paths_from_costs(const CostVolume& raw, const ValidRegion& region, const RunConfig& cfg,
                                  int paths);

/// Winner-take-all on raw census costs.
DisparityMap census_wta(const GrayImage& left, const GrayImage& right, const RunConfig& cfg);

} // namespace ssgm::oracle
