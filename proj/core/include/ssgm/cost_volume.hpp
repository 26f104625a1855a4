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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ssgm {

/// rows x cols x D cost entries, disparity fastest. Wide entries leave headroom for
/// unsaturated recursions.
struct CostVolume {
  int rows = 0;
  int cols = 0;
  int disparities = 0;
  std::vector<std::int32_t> data;

  CostVolume() = default;
  CostVolume(int r, int c, int d, std::int32_t fill = 0)
      : rows(r), cols(c), disparities(d), data(static_cast<std::size_t>(r) * c * d, fill) {}

  std::size_t offset(int row, int col) const {
    return (static_cast<std::size_t>(row) * cols + col) * disparities;
  }
  std::span<std::int32_t> at(int row, int col) {
    return {data.data() + offset(row, col), static_cast<std::size_t>(disparities)};
  }
  std::span<const std::int32_t> at(int row, int col) const {
    return {data.data() + offset(row, col), static_cast<std::size_t>(disparities)};
  }
};

} // namespace ssgm
