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

#include "ssgm/image.hpp"

namespace ssgm {

/// Rectify `raw` through `table`: output(r, c) is the 4-neighbour bilinear blend of raw
/// around table(r, c), with 5-bit fixed-point weights and round-to-nearest. Samples
/// whose footprint (neighbours with non-zero weight) leaves the raw image are 0.
GrayImage remap(const GrayImage& raw, const RemapTable& table);

/// One output sample; exposed for tests.
std::uint8_t remap_sample(const GrayImage& raw, FixedCoord at);

} // namespace ssgm
