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

#include "ssgm/evalkit.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "ssgm/error.hpp"
#include "ssgm/pixelio.hpp"

namespace ssgm {

AccuracyReport accuracy(const DisparityMap& est, const DisparityMap& gt, int tolerance) {
  if (est.width != gt.width || est.height != gt.height) {
    throw DimensionError("accuracy: estimate " + std::to_string(est.width) + "x" + std::to_string(est.height) +
                         " vs ground truth " + std::to_string(gt.width) + "x" + std::to_string(gt.height));
  }
  if (tolerance < 0) {
    throw ParameterError("accuracy: tolerance must be non-negative");
  }
  double sq = 0.0;
  std::size_t bad = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < est.disp.size(); ++i) {
    if (!est.valid[i] || !gt.valid[i]) {
      continue;
    }
    const int diff = static_cast<int>(est.disp[i]) - static_cast<int>(gt.disp[i]);
    sq += static_cast<double>(diff) * diff;
    bad += std::abs(diff) > tolerance ? 1 : 0;
    ++n;
  }
  if (n == 0) {
    throw DegenerateInputError("accuracy: no pixel is valid in both maps");
  }
  AccuracyReport r;
  r.rmse = std::sqrt(sq / static_cast<double>(n));
  r.pct_erroneous = 100.0 * static_cast<double>(bad) / static_cast<double>(n);
  r.tolerance = tolerance;
  r.evaluated_pixels = n;
  return r;
}

std::string format_report_line(const AccuracyReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "rmse=%.2f pct=%.2f", r.rmse, r.pct_erroneous);
  return buf;
}

std::string format_report_kv(const AccuracyReport& r) {
  char buf[192];
  std::snprintf(buf, sizeof buf, "rmse=%.6f\npct_erroneous=%.6f\ntolerance=%d\nevaluated_pixels=%zu\n", r.rmse,
                r.pct_erroneous, r.tolerance, r.evaluated_pixels);
  return buf;
}

void write_report_kv(const AccuracyReport& r, const std::filesystem::path& path) {
  write_file(path, format_report_kv(r));
}

DepthMap disparity_to_depth(const DisparityMap& d, double baseline_m, double focal_px) {
  if (!(baseline_m > 0.0) || !(focal_px > 0.0)) {
    throw ParameterError("baseline and focal length must be positive");
  }
  DepthMap out{d.width, d.height, std::vector<double>(d.disp.size(), 0.0),
               std::vector<std::uint8_t>(d.disp.size(), 0)};
  const double bf = baseline_m * focal_px;
  for (std::size_t i = 0; i < d.disp.size(); ++i) {
    if (d.valid[i] && d.disp[i] > 0) {
      out.depth[i] = bf / d.disp[i];
      out.valid[i] = 1;
    }
  }
  return out;
}

double estimate_fps(const TimingModel& m) {
  if (m.clock_hz <= 0 || m.pipeline_depth < 0 || m.blocks <= 0 || m.rows <= 0 || m.cols <= 0 ||
      m.disparity_range <= 0) {
    throw ParameterError("timing model fields must be positive");
  }
  const double cycles_per_frame = static_cast<double>(m.rows) * m.cols * (m.disparity_range + m.pipeline_depth);
  return m.blocks * m.clock_hz / cycles_per_frame;
}

} // namespace ssgm
