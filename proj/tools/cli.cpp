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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "ssgm/ssgm.hpp"

namespace ssgm::cli {

namespace {

struct MatchArgs {
  std::string left;
  std::string right;
  std::string out;
  std::string algo = "mgm";
  std::string init = "cap";
  int scale = 2;
};

struct EvalArgs {
  std::string est;
  std::string gt;
  std::string report;
  int gt_scale = 4;
  int est_scale = 0; // 0: same as gt_scale
  int tolerance = 5;
};

struct DepthArgs {
  std::string disp;
  std::string out;
  int scale = 2;
  double baseline = 0.12;
  double focal = 700.0;
};

struct BenchArgs {
  int width = 640;
  int height = 480;
  int repeat = 3;
  double clock_hz = 100e6;
  int pipeline_depth = 63;
  unsigned seed = 42;
};

std::string format(const char* fmt, auto... values) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, values...);
  return buf;
}

// Config keys become "--key value" pairs placed ahead of the real arguments, so
// later (command-line) occurrences win.
std::vector<std::string> expand_config(const std::vector<std::string>& args,
                                       const std::map<std::string, std::set<std::string>>& known) {
  std::vector<std::string> result;
  std::vector<std::pair<std::string, std::string>> entries;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      result.push_back(args[i]);
      continue;
    }
    for (const auto& [key, value] : parse_key_values(read_file(path))) {
      std::string flag = key;
      std::replace(flag.begin(), flag.end(), '_', '-');
      if (flag == "disparity-range") {
        flag = "dmax";
      }
      const bool anywhere = std::any_of(known.begin(), known.end(),
                                        [&](const auto& sub) { return sub.second.contains(flag); });
      if (!anywhere) {
        throw ParameterError("config: unknown key '" + key + "'");
      }
      entries.emplace_back(flag, value);
    }
  }
  if (entries.empty() || result.empty() || !known.contains(result.front())) {
    return result;
  }
  // Keys meant for other subcommands are skipped; the subcommand name stays first.
  const std::set<std::string>& mine = known.at(result.front());
  std::vector<std::string> preload;
  for (const auto& [flag, value] : entries) {
    if (mine.contains(flag)) {
      preload.push_back("--" + flag);
      preload.push_back(value);
    }
  }
  result.insert(result.begin() + 1, preload.begin(), preload.end());
  return result;
}

BufferInit parse_init(const std::string& s) {
  return s == "zero" ? BufferInit::kZero : BufferInit::kCap;
}

DisparityMap run_algo(const std::string& algo, const GrayImage& left, const GrayImage& right, const RunConfig& cfg) {
  if (algo == "mgm") {
    return match_frame_striped(left, right, cfg);
  }
  if (algo == "mgm-full") {
    return oracle::mgm_full(left, right, cfg).disparity;
  }
  if (algo == "sgm4") {
    return oracle::sgm_paths(left, right, cfg, 4);
  }
  if (algo == "sgm8") {
    return oracle::sgm_paths(left, right, cfg, 8);
  }
  return oracle::census_wta(left, right, cfg);
}

// Disparity PGM written by `match`: pixel = d * scale, 0 = no estimate.
DisparityMap read_estimate(const std::string& path, int scale) {
  return ground_truth_from_image(read_pgm(path), scale);
}

// Random texture on the left; the right view sees it shifted by a disparity that
// steps across the frame.
std::pair<GrayImage, GrayImage> synthetic_pair(int width, int height, int dmax, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> px(0, 255);
  GrayImage left(width, height);
  for (auto& v : left.data) {
    v = static_cast<std::uint8_t>(px(rng));
  }
  GrayImage right(width, height);
  for (int r = 0; r < height; ++r) {
    const int shift = (dmax / 4) * (1 + (3 * r) / height);
    for (int c = 0; c < width; ++c) {
      const int src = c + shift;
      right.at(r, c) = src < width ? left.at(r, src) : static_cast<std::uint8_t>(px(rng));
    }
  }
  return {std::move(left), std::move(right)};
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming semi-global stereo matching toolkit", "ssgm"};
  app.require_subcommand(1, 1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  RunConfig cfg;
  std::string cfg_path;

  // rectify
  std::string raw_path;
  std::string map_path;
  std::string rect_out;
  auto* rectify = app.add_subcommand("rectify", "Apply an SMAP remap table to a raw PGM");
  rectify->add_option("--raw", raw_path, "Raw input PGM")->required();
  rectify->add_option("--map", map_path, "SMAP remap table")->required();
  rectify->add_option("--out", rect_out, "Rectified output PGM")->required();

  // match
  MatchArgs m;
  auto* match = app.add_subcommand("match", "Compute a disparity map from a rectified pair");
  match->add_option("--left", m.left, "Left (reference) PGM")->required();
  match->add_option("--right", m.right, "Right PGM")->required();
  match->add_option("--out", m.out, "Output disparity PGM (pixel = d * scale)")->required();
  match->add_option("--algo", m.algo, "mgm | mgm-full | sgm4 | sgm8 | wta")
      ->check(CLI::IsMember({"mgm", "mgm-full", "sgm4", "sgm8", "wta"}))
      ->capture_default_str();
  match->add_option("--sections", cfg.sections, "Parallel horizontal sections (mgm)")->capture_default_str();
  match->add_option("--p1", cfg.p1, "Small penalty")->capture_default_str();
  match->add_option("--p2", cfg.p2, "Large penalty")->capture_default_str();
  match->add_option("--dmax", cfg.disparity_range, "Disparity search range D")->capture_default_str();
  match->add_option("--window", cfg.window, "Census window side")->capture_default_str();
  match->add_option("--cost-cap", cfg.cost_cap, "Aggregated cost saturation bound")->capture_default_str();
  match->add_option("--scale", m.scale, "Output PGM scale")->capture_default_str();
  match->add_option("--init", m.init, "Buffer initialisation: cap | zero")
      ->check(CLI::IsMember({"cap", "zero"}))
      ->capture_default_str();

  // eval
  EvalArgs e;
  auto* eval = app.add_subcommand("eval", "Compare a disparity PGM with ground truth");
  eval->add_option("--est", e.est, "Estimated disparity PGM")->required();
  eval->add_option("--gt", e.gt, "Ground-truth disparity PGM (0 = unknown)")->required();
  eval->add_option("--gt-scale", e.gt_scale, "Ground-truth scale")->capture_default_str();
  eval->add_option("--est-scale", e.est_scale, "Estimate scale (default: gt scale)");
  eval->add_option("--tolerance", e.tolerance, "Error tolerance in pixels")->capture_default_str();
  eval->add_option("--report", e.report, "Also write a key=value report here");

  // depth
  DepthArgs dp;
  auto* depth = app.add_subcommand("depth", "Convert a disparity PGM to metric depth");
  depth->add_option("--disp", dp.disp, "Disparity PGM")->required();
  depth->add_option("--scale", dp.scale, "Disparity PGM scale")->capture_default_str();
  depth->add_option("--baseline", dp.baseline, "Baseline in metres")->capture_default_str();
  depth->add_option("--focal", dp.focal, "Focal length in pixels")->capture_default_str();
  depth->add_option("--out", dp.out, "Text depth grid output");

  // bench
  BenchArgs b;
  auto* bench = app.add_subcommand("bench", "Time the streaming matcher on synthetic frames");
  bench->add_option("--width", b.width)->capture_default_str();
  bench->add_option("--height", b.height)->capture_default_str();
  bench->add_option("--dmax", cfg.disparity_range)->capture_default_str();
  bench->add_option("--sections", cfg.sections)->capture_default_str();
  bench->add_option("--repeat", b.repeat)->capture_default_str();
  bench->add_option("--clock", b.clock_hz, "Reference clock for the timing model (Hz)")->capture_default_str();
  bench->add_option("--pipeline-depth", b.pipeline_depth)->capture_default_str();
  bench->add_option("--seed", b.seed)->capture_default_str();

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--config", cfg_path, "key=value file preloading these flags");
  }

  try {
    std::map<std::string, std::set<std::string>> known;
    for (auto* sub : app.get_subcommands({})) {
      for (const CLI::Option* opt : sub->get_options()) {
        for (const std::string& name : opt->get_lnames()) {
          known[sub->get_name()].insert(name);
        }
      }
    }
    std::vector<std::string> args = expand_config(raw_args, known);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "ssgm: " << ex.what() << "\n";
    return kUsage;
  } catch (const IoError& ex) {
    err << "ssgm: " << ex.what() << "\n";
    return kIoFormat;
  } catch (const FormatError& ex) {
    err << "ssgm: " << ex.what() << "\n";
    return kIoFormat;
  } catch (const Error& ex) {
    err << "ssgm: " << ex.what() << "\n";
    return kUsage;
  }

  try {
    if (*rectify) {
      const GrayImage raw = read_pgm(raw_path);
      const RemapTable table = read_remap_table(map_path);
      write_pgm(remap(raw, table), rect_out);
      out << "rectified " << table.width << "x" << table.height << " -> " << rect_out << "\n";
    } else if (*match) {
      cfg.init = parse_init(m.init);
      cfg.validate();
      const GrayImage left = read_pgm(m.left);
      const GrayImage right = read_pgm(m.right);
      const DisparityMap d = run_algo(m.algo, left, right, cfg);
      write_disparity(d, m.out, m.scale);
      out << "algo=" << m.algo << " size=" << d.width << "x" << d.height << " valid=" << d.valid_count()
          << " -> " << m.out << "\n";
    } else if (*eval) {
      const DisparityMap gt = read_ground_truth(e.gt, e.gt_scale);
      const DisparityMap est = read_estimate(e.est, e.est_scale > 0 ? e.est_scale : e.gt_scale);
      const AccuracyReport rep = accuracy(est, gt, e.tolerance);
      out << format_report_line(rep) << "\n";
      if (!e.report.empty()) {
        write_report_kv(rep, e.report);
      }
    } else if (*depth) {
      const DisparityMap d = read_estimate(dp.disp, dp.scale);
      const DepthMap z = disparity_to_depth(d, dp.baseline, dp.focal);
      std::size_t n = 0;
      double lo = 0.0;
      double hi = 0.0;
      for (std::size_t i = 0; i < z.depth.size(); ++i) {
        if (!z.valid[i]) {
          continue;
        }
        lo = n == 0 ? z.depth[i] : std::min(lo, z.depth[i]);
        hi = n == 0 ? z.depth[i] : std::max(hi, z.depth[i]);
        ++n;
      }
      out << format("valid=%zu min_m=%.4f max_m=%.4f\n", n, lo, hi);
      if (!dp.out.empty()) {
        std::string text = std::to_string(z.width) + " " + std::to_string(z.height) + "\n";
        for (int r = 0; r < z.height; ++r) {
          for (int c = 0; c < z.width; ++c) {
            text += format(c == 0 ? "%.4f" : " %.4f", z.depth[static_cast<std::size_t>(r) * z.width + c]);
          }
          text += "\n";
        }
        write_file(dp.out, text);
      }
    } else if (*bench) {
      cfg.validate();
      const auto [left, right] = synthetic_pair(b.width, b.height, cfg.disparity_range, b.seed);
      std::vector<double> fps;
      for (int i = 0; i < b.repeat; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const DisparityMap d = match_frame_striped(left, right, cfg);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        fps.push_back(1.0 / secs);
        out << format("run %d: %dx%d D=%d sections=%d seconds=%.4f fps=%.3f valid=%zu\n", i + 1, b.width,
                      b.height, cfg.disparity_range, cfg.sections, secs, fps.back(), d.valid_count());
      }
      const TimingModel model{b.clock_hz, b.pipeline_depth, cfg.sections, b.height, b.width, cfg.disparity_range};
      const double mean = fps.empty() ? 0.0 : std::accumulate(fps.begin(), fps.end(), 0.0) / fps.size();
      out << format("summary: measured_fps=%.3f model_fps=%.3f (clock=%.0fHz pipeline_depth=%d blocks=%d)\n", mean,
                    estimate_fps(model), b.clock_hz, b.pipeline_depth, cfg.sections);
    }
  } catch (const IoError& ex) {
    err << "ssgm: " << ex.what() << "\n";
    return kIoFormat;
  } catch (const FormatError& ex) {
    err << "ssgm: " << ex.what() << "\n";
    return kIoFormat;
  } catch (const Error& ex) {
    err << "ssgm: " << ex.what() << "\n";
    return kDimensionParameter;
  }
  return kOk;
}

} // namespace ssgm::cli
