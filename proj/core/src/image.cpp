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

#include "ssgm/image.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ssgm/error.hpp"

namespace ssgm {

namespace {

void check_dims(int w, int h) {
  if (w <= 0 || h <= 0) {
    throw DimensionError("image dimensions must be positive, got " + std::to_string(w) + "x" +
                         std::to_string(h));
  }
}

} // namespace

GrayImage::GrayImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
  check_dims(w, h);
  data.assign(static_cast<std::size_t>(w) * h, fill);
}

GrayImage::GrayImage(int w, int h, std::vector<std::uint8_t> pixels)
    : width(w), height(h), data(std::move(pixels)) {
  check_dims(w, h);
  if (data.size() != static_cast<std::size_t>(w) * h) {
    throw DimensionError("pixel buffer holds " + std::to_string(data.size()) + " bytes, expected " +
                         std::to_string(static_cast<std::size_t>(w) * h));
  }
}

GrayImage GrayImage::rows(int first, int last) const {
  if (first < 0 || last > height || first >= last) {
    throw DimensionError("row range [" + std::to_string(first) + ", " + std::to_string(last) +
                         ") outside image of height " + std::to_string(height));
  }
  const auto begin = data.begin() + static_cast<std::ptrdiff_t>(first) * width;
  const auto end = data.begin() + static_cast<std::ptrdiff_t>(last) * width;
  return GrayImage(width, last - first, std::vector<std::uint8_t>(begin, end));
}

DisparityMap::DisparityMap(int w, int h) : width(w), height(h) {
  check_dims(w, h);
  disp.assign(static_cast<std::size_t>(w) * h, 0);
  valid.assign(static_cast<std::size_t>(w) * h, 0);
}

std::size_t DisparityMap::valid_count() const {
  return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), std::uint8_t{1}));
}

RemapTable::RemapTable(int w, int h) : width(w), height(h) {
  check_dims(w, h);
  coords.resize(static_cast<std::size_t>(w) * h);
}

RemapTable RemapTable::identity(int w, int h) {
  RemapTable t(w, h);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      t.at(r, c) = FixedCoord{static_cast<std::uint16_t>(c * FixedCoord::kOne),
                              static_cast<std::uint16_t>(r * FixedCoord::kOne)};
    }
  }
  return t;
}

} // namespace ssgm
