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
#include <filesystem>
#include <string>
#include <vector>

#include "ssgm/image.hpp"

namespace ssgm {

struct AccuracyReport {
  double rmse = 0.0;          ///< over pixels valid in both maps
  double pct_erroneous = 0.0; ///< share of those pixels with |est - gt| > tolerance, in percent
  int tolerance = 5;
  std::size_t evaluated_pixels = 0;
};

/// Throws DimensionError on size mismatch and DegenerateInputError when no pixel is
/// valid in both maps.
AccuracyReport accuracy(const DisparityMap& est, const DisparityMap& gt, int tolerance = 5);

/// "rmse=5.43 pct=11.00" style one-liner (two decimals).
std::string format_report_line(const AccuracyReport& r);
/// key=value lines: rmse, pct_erroneous, tolerance, evaluated_pixels.
std::string format_report_kv(const AccuracyReport& r);
void write_report_kv(const AccuracyReport& r, const std::filesystem::path& path);

struct DepthMap {
  int width = 0;
  int height = 0;
  std::vector<double> depth; // metres; 0 where invalid
  std::vector<std::uint8_t> valid;
};

/// depth = baseline * focal / d. Pixels with d == 0 or invalid disparity are invalid.
DepthMap disparity_to_depth(const DisparityMap& d, double baseline_m, double focal_px);

/// Sequential-engine timing: each block scans rows*cols pixels, spending
/// (D + pipeline_depth) cycles per pixel; blocks run in parallel on disjoint strips.
struct TimingModel {
  double clock_hz = 100e6;
  int pipeline_depth = 63;
  int blocks = 1;
  int rows = 480;
  int cols = 640;
  int disparity_range = 92;
};

double estimate_fps(const TimingModel& m);

} // namespace ssgm
