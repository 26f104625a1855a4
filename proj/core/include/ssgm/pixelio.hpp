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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "ssgm/config.hpp"
#include "ssgm/image.hpp"

namespace ssgm {

// Binary PGM (P5, maxval <= 255). Header comments are skipped on read.
GrayImage decode_pgm(std::string_view bytes);
std::string encode_pgm(const GrayImage& img);

GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const GrayImage& img, const std::filesystem::path& path);

// SMAP remap tables: "SMAP", u32 width, u32 height, then width*height (u16 x, u16 y)
// pairs, all little-endian, coordinates in Q11.5.
inline constexpr std::string_view kRemapMagic = "SMAP";

RemapTable decode_remap_table(std::string_view bytes);
std::string encode_remap_table(const RemapTable& table);

RemapTable read_remap_table(const std::filesystem::path& path);
void write_remap_table(const RemapTable& table, const std::filesystem::path& path);

/// Writes disp * scale as a PGM; invalid pixels become 0. Throws RangeError if a
/// scaled value exceeds 255.
void write_disparity(const DisparityMap& d, const std::filesystem::path& path, int scale);
GrayImage disparity_to_image(const DisparityMap& d, int scale);

/// Middlebury convention: pixel = disparity * gt_scale, 0 = unknown.
DisparityMap ground_truth_from_image(const GrayImage& img, int gt_scale);
DisparityMap read_ground_truth(const std::filesystem::path& path, int gt_scale);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// RunConfig preloaded from a key=value file.
RunConfig read_run_config(const std::filesystem::path& path, RunConfig base = {});

} // namespace ssgm
