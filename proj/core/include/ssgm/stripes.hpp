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

#include <vector>

#include "ssgm/config.hpp"
#include "ssgm/image.hpp"

namespace ssgm {

/// One horizontal strip. The strip owns output rows [own_begin, own_end) and reads
/// input rows [read_begin, read_end): its owned rows widened by window/2 on each
/// side where the image allows, so census windows at the seams stay complete.
struct Section {
  int own_begin = 0;
  int own_end = 0;
  int read_begin = 0;
  int read_end = 0;

  int owned_rows() const { return own_end - own_begin; }
  int read_rows() const { return read_end - read_begin; }

  bool operator==(const Section&) const = default;
};

struct SectionPlan {
  int height = 0;
  int window = 0;
  std::vector<Section> sections; // exactly K entries; trailing ones may own no rows
};

/// Split `height` rows into K strips of ceil(height / K) owned rows each.
/// Requires K >= 1 and height >= K * window.
SectionPlan plan_sections(int height, int sections, int window);

/// Runs one independent streaming matcher per strip (each with freshly
/// initialised buffers) on its own thread and stitches the owned rows.
/// With cfg.sections == 1 this is bit-identical to match_frame.
DisparityMap match_frame_striped(const GrayImage& left, const GrayImage& right, const RunConfig& cfg);

} // namespace ssgm
