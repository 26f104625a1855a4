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
#include <span>
#include <vector>

#include "ssgm/image.hpp"

namespace ssgm {

inline constexpr int kMaxCensusWindow = 7;

/// Per-pixel census descriptors. Bit k is set when the k-th window neighbour
/// (row-major, centre skipped) is strictly darker than the centre. Pixels closer
/// than window/2 to an edge hold 0.
struct CensusField {
  int width = 0;
  int height = 0;
  int window = 0;
  std::vector<std::uint64_t> desc;

  int half() const { return window / 2; }
  int bits() const { return window * window - 1; }

  std::uint64_t at(int row, int col) const { return desc[static_cast<std::size_t>(row) * width + col]; }

  bool interior(int row, int col) const {
    return row >= half() && row < height - half() && col >= half() && col < width - half();
  }
};

/// Throws ParameterError for even windows, windows < 3 or > 7, and DimensionError
/// when the image is smaller than the window.
CensusField census_transform(const GrayImage& img, int window);

/// Matching cost of one left pixel against the right field over D disparities.
struct CostRowVector {
  std::vector<std::uint8_t> costs; // length D
  int valid_range = 0;             // costs[d] for d >= valid_range hold the pad value
};

/// Number of disparities whose right-hand window is census-valid at `col`.
inline int searchable_range(int col, int half_window, int disparity_range) {
  const int r = col - half_window + 1;
  return r < disparity_range ? r : disparity_range;
}

/// costs[d] = popcount(left(row,col) ^ right(row,col-d)) for d < valid_range, `pad`
/// beyond. (row, col) must be interior to the left field.
CostRowVector cost_vector(const CensusField& left, const CensusField& right, int row, int col,
                          int disparity_range, std::uint8_t pad);

/// Cost vectors for every column of `row` into `out` (width * D, column-major per
/// pixel). Columns outside the interior are filled with `pad`.
void cost_row(const CensusField& left, const CensusField& right, int row, int disparity_range,
              std::uint8_t pad, std::span<std::uint8_t> out);

} // namespace ssgm
