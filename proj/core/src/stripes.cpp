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

#include "ssgm/stripes.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "ssgm/aggregator.hpp"
#include "ssgm/error.hpp"

namespace ssgm {

SectionPlan plan_sections(int height, int sections, int window) {
  if (sections < 1) {
    throw ParameterError("section count must be positive, got " + std::to_string(sections));
  }
  if (window < 1 || window % 2 == 0) {
    throw ParameterError("window must be odd, got " + std::to_string(window));
  }
  if (height < sections * window) {
    throw DimensionError("height " + std::to_string(height) + " too small for " + std::to_string(sections) +
                         " sections of window " + std::to_string(window));
  }
  const int per = (height + sections - 1) / sections;
  const int overlap = window / 2;

  SectionPlan plan{height, window, {}};
  plan.sections.reserve(static_cast<std::size_t>(sections));
  for (int i = 0; i < sections; ++i) {
    Section s;
    s.own_begin = std::min(i * per, height);
    s.own_end = std::min((i + 1) * per, height);
    s.read_begin = std::max(0, s.own_begin - overlap);
    s.read_end = std::min(height, s.own_end + overlap);
    plan.sections.push_back(s);
  }
  return plan;
}

DisparityMap match_frame_striped(const GrayImage& left, const GrayImage& right, const RunConfig& cfg) {
  check_match_inputs(left, right, cfg);
  const SectionPlan plan = plan_sections(left.height, cfg.sections, cfg.window);
  const int h = cfg.half_window();

  DisparityMap out(left.width, left.height);
  std::vector<std::exception_ptr> failures(plan.sections.size());

  auto work = [&](std::size_t index) {
    const Section& s = plan.sections[index];
    if (s.owned_rows() == 0 || s.read_rows() < cfg.window) {
      return; // no census-valid rows in this strip
    }
    try {
      StreamingMatcher matcher(cfg);
      const DisparityMap part =
          matcher.match(left.rows(s.read_begin, s.read_end), right.rows(s.read_begin, s.read_end));
      const int first = std::max(s.own_begin, s.read_begin + h);
      const int last = std::min(s.own_end, s.read_end - h);
      for (int r = first; r < last; ++r) {
        const std::size_t src = part.index(r - s.read_begin, 0);
        const std::size_t dst = out.index(r, 0);
        std::copy_n(part.disp.begin() + static_cast<std::ptrdiff_t>(src), out.width,
                    out.disp.begin() + static_cast<std::ptrdiff_t>(dst));
        std::copy_n(part.valid.begin() + static_cast<std::ptrdiff_t>(src), out.width,
                    out.valid.begin() + static_cast<std::ptrdiff_t>(dst));
      }
    } catch (...) {
      failures[index] = std::current_exception();
    }
  };

  if (plan.sections.size() == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(plan.sections.size());
    for (std::size_t i = 0; i < plan.sections.size(); ++i) {
      workers.emplace_back(work, i);
    }
  } // joined here

  for (const std::exception_ptr& e : failures) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

} // namespace ssgm
