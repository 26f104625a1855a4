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

#include <map>
#include <string>

namespace ssgm {

/// Value written into the aggregation buffers at the start of every frame.
enum class BufferInit {
  kCap,  ///< every entry at the cost cap; border neighbours drop out of the minimisation
  kZero, ///< every entry zero (kept for comparison experiments)
};

/// Parameters shared by every matcher. Defaults are the 640x480 hardware operating point.
struct RunConfig {
  int window = 7;            ///< census window side, odd, 3..7
  int disparity_range = 92;  ///< D: disparities 0..D-1 are searched
  int p1 = 10;               ///< penalty for a +-1 disparity change
  int p2 = 120;              ///< penalty for larger jumps
  int cost_cap = 255;        ///< saturation bound of aggregated (and padding) costs
  int sections = 5;          ///< horizontal strips processed independently
  int gt_scale = 4;          ///< ground-truth PGM value = disparity * gt_scale
  BufferInit init = BufferInit::kCap;

  int half_window() const { return window / 2; }

  /// Throws ParameterError when any field is out of its domain.
  void validate() const;

  /// Overwrite fields from key=value entries (keys as in a config file). Unknown keys throw.
  void apply(const std::map<std::string, std::string>& entries);
};

/// Parse "key=value" lines; blank lines and lines starting with '#' are ignored.
std::map<std::string, std::string> parse_key_values(const std::string& text);

} // namespace ssgm
