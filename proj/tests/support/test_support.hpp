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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "ssgm/image.hpp"

namespace ssgm::testing {

inline GrayImage random_image(std::mt19937& rng, int w, int h) {
  GrayImage img(w, h);
  std::uniform_int_distribution<int> px(0, 255);
  for (auto& v : img.data) {
    v = static_cast<std::uint8_t>(px(rng));
  }
  return img;
}

// Smooth texture with a few large blobs; more realistic than white noise for
// tests that look at disparity quality.
inline GrayImage textured_image(std::mt19937& rng, int w, int h) {
  GrayImage img(w, h);
  std::uniform_real_distribution<double> phase(0.0, 6.28);
  const double a = phase(rng), b = phase(rng), c = phase(rng);
  std::uniform_int_distribution<int> noise(-12, 12);
  for (int r = 0; r < h; ++r) {
    for (int col = 0; col < w; ++col) {
      const double v = 128 + 50 * std::sin(col * 0.37 + a) + 40 * std::cos(r * 0.23 + b) +
                       25 * std::sin((col + r) * 0.71 + c) + noise(rng);
      img.at(r, col) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
  }
  return img;
}

// Right view of a fronto-parallel scene: right(r, c) = left(r, c + shift).
inline GrayImage shift_left_view(const GrayImage& left, int shift, std::uint8_t fill = 0) {
  GrayImage right(left.width, left.height, fill);
  for (int r = 0; r < left.height; ++r) {
    for (int c = 0; c < left.width; ++c) {
      if (c + shift >= 0 && c + shift < left.width) {
        right.at(r, c) = left.at(r, c + shift);
      }
    }
  }
  return right;
}

inline GrayImage flip_vertical(const GrayImage& img) {
  GrayImage out(img.width, img.height);
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      out.at(img.height - 1 - r, c) = img.at(r, c);
    }
  }
  return out;
}

inline DisparityMap flip_vertical(const DisparityMap& d) {
  DisparityMap out(d.width, d.height);
  for (int r = 0; r < d.height; ++r) {
    for (int c = 0; c < d.width; ++c) {
      const auto dst = out.index(d.height - 1 - r, c);
      out.disp[dst] = d.at(r, c);
      out.valid[dst] = d.valid[d.index(r, c)];
    }
  }
  return out;
}

class ScratchDir {
public:
  explicit ScratchDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("ssgm_" + tag + "_" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
};

} // namespace ssgm::testing
