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

#include "ssgm/rectify.hpp"

#include "ssgm/error.hpp"

namespace ssgm {

namespace {

constexpr int kFracMask = FixedCoord::kOne - 1;
// Weights multiply two 5-bit fractions, so the blend carries 10 fractional bits.
constexpr int kBlendShift = 2 * FixedCoord::kFracBits;
constexpr int kBlendHalf = 1 << (kBlendShift - 1);

} // namespace

std::uint8_t remap_sample(const GrayImage& raw, FixedCoord at) {
  const int x0 = at.x >> FixedCoord::kFracBits;
  const int y0 = at.y >> FixedCoord::kFracBits;
  const int fx = at.x & kFracMask;
  const int fy = at.y & kFracMask;

  // A neighbour with zero weight need not exist.
  if (x0 >= raw.width || y0 >= raw.height) {
    return 0;
  }
  if ((fx != 0 && x0 + 1 >= raw.width) || (fy != 0 && y0 + 1 >= raw.height)) {
    return 0;
  }
  const int x1 = fx != 0 ? x0 + 1 : x0;
  const int y1 = fy != 0 ? y0 + 1 : y0;

  const int wx0 = FixedCoord::kOne - fx;
  const int wy0 = FixedCoord::kOne - fy;
  const int sum = wx0 * wy0 * raw.at(y0, x0) + fx * wy0 * raw.at(y0, x1) + wx0 * fy * raw.at(y1, x0) +
                  fx * fy * raw.at(y1, x1);
  return static_cast<std::uint8_t>((sum + kBlendHalf) >> kBlendShift);
}

GrayImage remap(const GrayImage& raw, const RemapTable& table) {
  if (raw.empty()) {
    throw DimensionError("remap: raw image is empty");
  }
  if (table.coords.size() != static_cast<std::size_t>(table.width) * table.height || table.coords.empty()) {
    throw DimensionError("remap: table coordinate count does not match its dimensions");
  }
  GrayImage out(table.width, table.height);
  for (int r = 0; r < table.height; ++r) {
    for (int c = 0; c < table.width; ++c) {
      out.at(r, c) = remap_sample(raw, table.at(r, c));
    }
  }
  return out;
}

} // namespace ssgm
