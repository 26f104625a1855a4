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

/// 8-bit single-channel raster, row-major, top row first.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0);
  GrayImage(int w, int h, std::vector<std::uint8_t> pixels);

  std::size_t size() const { return data.size(); }
  bool empty() const { return data.empty(); }

  std::uint8_t at(int row, int col) const {
    return data[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t& at(int row, int col) {
    return data[static_cast<std::size_t>(row) * width + col];
  }

  std::span<const std::uint8_t> row(int r) const {
    return {data.data() + static_cast<std::size_t>(r) * width, static_cast<std::size_t>(width)};
  }

  /// Copy of rows [first, last).
  GrayImage rows(int first, int last) const;

  bool operator==(const GrayImage&) const = default;
};

/// Per-pixel disparity plus validity. Invalid pixels always carry disparity 0.
struct DisparityMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> disp;
  std::vector<std::uint8_t> valid; // 0 or 1

  DisparityMap() = default;
  DisparityMap(int w, int h);

  std::size_t index(int row, int col) const { return static_cast<std::size_t>(row) * width + col; }

  bool is_valid(int row, int col) const { return valid[index(row, col)] != 0; }
  std::uint8_t at(int row, int col) const { return disp[index(row, col)]; }

  void set(int row, int col, std::uint8_t d) {
    disp[index(row, col)] = d;
    valid[index(row, col)] = 1;
  }
  void invalidate(int row, int col) {
    disp[index(row, col)] = 0;
    valid[index(row, col)] = 0;
  }

  std::size_t valid_count() const;

  bool operator==(const DisparityMap&) const = default;
};

/// Q11.5 source coordinate: real value = raw / 32.
struct FixedCoord {
  std::uint16_t x = 0;
  std::uint16_t y = 0;

  static constexpr int kFracBits = 5;
  static constexpr int kOne = 1 << kFracBits;

  double real_x() const { return x / static_cast<double>(kOne); }
  double real_y() const { return y / static_cast<double>(kOne); }

  bool operator==(const FixedCoord&) const = default;
};

/// Rectification lookup: output pixel (r, c) samples the raw image at coords[r*width + c].
struct RemapTable {
  int width = 0;
  int height = 0;
  std::vector<FixedCoord> coords;

  RemapTable() = default;
  RemapTable(int w, int h);

  static RemapTable identity(int w, int h);

  FixedCoord at(int row, int col) const { return coords[static_cast<std::size_t>(row) * width + col]; }
  FixedCoord& at(int row, int col) { return coords[static_cast<std::size_t>(row) * width + col]; }

  bool operator==(const RemapTable&) const = default;
};

} // namespace ssgm
