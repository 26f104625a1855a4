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

#include "ssgm/census.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ssgm/error.hpp"

namespace ssgm {

CensusField census_transform(const GrayImage& img, int window) {
  if (window < 3 || window % 2 == 0) {
    throw ParameterError("census window must be odd and >= 3, got " + std::to_string(window));
  }
  if (window > kMaxCensusWindow) {
    throw ParameterError("census window " + std::to_string(window) +
                         " unsupported: descriptor would exceed 64 bits (max 7)");
  }
  if (img.width < window || img.height < window) {
    throw DimensionError("image " + std::to_string(img.width) + "x" + std::to_string(img.height) +
                         " smaller than census window " + std::to_string(window));
  }

  CensusField field;
  field.width = img.width;
  field.height = img.height;
  field.window = window;
  field.desc.assign(img.data.size(), 0);

  const int h = window / 2;
  for (int r = h; r < img.height - h; ++r) {
    for (int c = h; c < img.width - h; ++c) {
      const std::uint8_t centre = img.at(r, c);
      std::uint64_t bits = 0;
      int k = 0;
      for (int dr = -h; dr <= h; ++dr) {
        const std::uint8_t* src = img.data.data() + static_cast<std::size_t>(r + dr) * img.width + c;
        for (int dc = -h; dc <= h; ++dc) {
          if (dr == 0 && dc == 0) {
            continue;
          }
          bits |= static_cast<std::uint64_t>(src[dc] < centre) << k;
          ++k;
        }
      }
      field.desc[static_cast<std::size_t>(r) * img.width + c] = bits;
    }
  }
  return field;
}

CostRowVector cost_vector(const CensusField& left, const CensusField& right, int row, int col,
                          int disparity_range, std::uint8_t pad) {
  CostRowVector v;
  v.costs.assign(static_cast<std::size_t>(disparity_range), pad);
  v.valid_range = std::max(0, searchable_range(col, left.half(), disparity_range));
  const std::uint64_t base = left.at(row, col);
  for (int d = 0; d < v.valid_range; ++d) {
    v.costs[d] = static_cast<std::uint8_t>(std::popcount(base ^ right.at(row, col - d)));
  }
  return v;
}

void cost_row(const CensusField& left, const CensusField& right, int row, int disparity_range,
              std::uint8_t pad, std::span<std::uint8_t> out) {
  const std::size_t D = static_cast<std::size_t>(disparity_range);
  std::fill(out.begin(), out.end(), pad);
  const int h = left.half();
  const std::uint64_t* lrow = left.desc.data() + static_cast<std::size_t>(row) * left.width;
  const std::uint64_t* rrow = right.desc.data() + static_cast<std::size_t>(row) * right.width;
  for (int c = h; c < left.width - h; ++c) {
    const int range = searchable_range(c, h, disparity_range);
    const std::uint64_t base = lrow[c];
    std::uint8_t* dst = out.data() + static_cast<std::size_t>(c) * D;
    for (int d = 0; d < range; ++d) {
      dst[d] = static_cast<std::uint8_t>(std::popcount(base ^ rrow[c - d]));
    }
  }
}

} // namespace ssgm
