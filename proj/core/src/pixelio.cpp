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

#include "ssgm/pixelio.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ssgm/error.hpp"

namespace ssgm {

namespace {

class HeaderReader {
public:
  explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view next_token() {
    skip_space_and_comments();
    const std::size_t start = pos_;
    while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_])) &&
           bytes_[pos_] != '#') {
      ++pos_;
    }
    return bytes_.substr(start, pos_ - start);
  }

  long next_number(const char* what) {
    const std::string_view tok = next_token();
    long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
      throw FormatError("PGM header: bad " + std::string(what) + " token '" + std::string(tok) + "'");
    }
    return value;
  }

  // The raster starts after exactly one whitespace byte following maxval.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw FormatError("PGM header: missing whitespace before raster");
    }
    return pos_ + 1;
  }

private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
          ++pos_;
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>(v >> 8));
}

std::uint32_t get_u32(std::string_view b, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + i])) << (8 * i);
  }
  return v;
}

std::uint16_t get_u16(std::string_view b, std::size_t at) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[at]) |
                                    (static_cast<unsigned char>(b[at + 1]) << 8));
}

int parse_int(const std::string& key, const std::string& value) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParameterError("config: '" + key + "' expects an integer, got '" + value + "'");
  }
  return v;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

} // namespace

GrayImage decode_pgm(std::string_view bytes) {
  HeaderReader reader(bytes);
  const std::string_view magic = reader.next_token();
  if (magic != "P5") {
    throw FormatError("PGM header: unsupported magic '" + std::string(magic) + "' (expected P5)");
  }
  const long width = reader.next_number("width");
  const long height = reader.next_number("height");
  const long maxval = reader.next_number("maxval");
  if (width == 0 || height == 0) {
    throw FormatError("PGM header: zero dimension " + std::to_string(width) + "x" + std::to_string(height));
  }
  if (maxval == 0) {
    throw FormatError("PGM header: bad maxval token '0'");
  }
  if (maxval > 255) {
    throw FormatError("PGM: unsupported depth, maxval " + std::to_string(maxval) + " > 255");
  }
  const std::size_t offset = reader.raster_offset();
  const std::size_t need = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  if (bytes.size() < offset + need) {
    throw FormatError("PGM: truncated raster, " + std::to_string(bytes.size() - std::min(bytes.size(), offset)) +
                      " of " + std::to_string(need) + " bytes present");
  }
  std::vector<std::uint8_t> pixels(need);
  std::copy_n(reinterpret_cast<const std::uint8_t*>(bytes.data() + offset), need, pixels.begin());
  return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::string encode_pgm(const GrayImage& img) {
  std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.data.data()), img.data.size());
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failed on '" + path.string() + "'");
  }
  return std::move(ss).str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw IoError("write failed on '" + path.string() + "'");
  }
}

GrayImage read_pgm(const std::filesystem::path& path) {
  try {
    return decode_pgm(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_pgm(const GrayImage& img, const std::filesystem::path& path) {
  write_file(path, encode_pgm(img));
}

RemapTable decode_remap_table(std::string_view bytes) {
  if (bytes.size() < 12 || bytes.substr(0, 4) != kRemapMagic) {
    throw FormatError("remap table: bad magic (expected SMAP)");
  }
  const std::uint32_t w = get_u32(bytes, 4);
  const std::uint32_t h = get_u32(bytes, 8);
  if (w == 0 || h == 0 || w > 0xFFFF || h > 0xFFFF) {
    throw FormatError("remap table: bad dimensions " + std::to_string(w) + "x" + std::to_string(h));
  }
  const std::size_t count = static_cast<std::size_t>(w) * h;
  const std::size_t payload = bytes.size() - 12;
  if (payload != count * 4) {
    throw FormatError("remap table: size mismatch, " + std::to_string(payload / 4) +
                      " coordinate pairs for a " + std::to_string(w) + "x" + std::to_string(h) + " map");
  }
  RemapTable t(static_cast<int>(w), static_cast<int>(h));
  for (std::size_t i = 0; i < count; ++i) {
    t.coords[i] = FixedCoord{get_u16(bytes, 12 + 4 * i), get_u16(bytes, 14 + 4 * i)};
  }
  return t;
}

std::string encode_remap_table(const RemapTable& table) {
  std::string out(kRemapMagic);
  out.reserve(12 + table.coords.size() * 4);
  put_u32(out, static_cast<std::uint32_t>(table.width));
  put_u32(out, static_cast<std::uint32_t>(table.height));
  for (const FixedCoord& c : table.coords) {
    put_u16(out, c.x);
    put_u16(out, c.y);
  }
  return out;
}

RemapTable read_remap_table(const std::filesystem::path& path) {
  try {
    return decode_remap_table(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_remap_table(const RemapTable& table, const std::filesystem::path& path) {
  write_file(path, encode_remap_table(table));
}

GrayImage disparity_to_image(const DisparityMap& d, int scale) {
  if (scale <= 0) {
    throw ParameterError("disparity scale must be positive, got " + std::to_string(scale));
  }
  GrayImage img(d.width, d.height);
  for (std::size_t i = 0; i < d.disp.size(); ++i) {
    if (!d.valid[i]) {
      continue;
    }
    const int v = d.disp[i] * scale;
    if (v > 255) {
      throw RangeError("disparity " + std::to_string(d.disp[i]) + " * scale " + std::to_string(scale) +
                       " = " + std::to_string(v) + " exceeds 255");
    }
    img.data[i] = static_cast<std::uint8_t>(v);
  }
  return img;
}

void write_disparity(const DisparityMap& d, const std::filesystem::path& path, int scale) {
  write_pgm(disparity_to_image(d, scale), path);
}

DisparityMap ground_truth_from_image(const GrayImage& img, int gt_scale) {
  if (gt_scale <= 0) {
    throw ParameterError("gt_scale must be positive, got " + std::to_string(gt_scale));
  }
  DisparityMap d(img.width, img.height);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    if (img.data[i] != 0) {
      d.disp[i] = static_cast<std::uint8_t>(img.data[i] / gt_scale);
      d.valid[i] = 1;
    }
  }
  return d;
}

DisparityMap read_ground_truth(const std::filesystem::path& path, int gt_scale) {
  return ground_truth_from_image(read_pgm(path), gt_scale);
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') {
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw FormatError("config line " + std::to_string(lineno) + ": expected key=value, got '" + t + "'");
    }
    entries[trim(std::string_view(t).substr(0, eq))] = trim(std::string_view(t).substr(eq + 1));
  }
  return entries;
}

void RunConfig::validate() const {
  if (window < 3 || window % 2 == 0) {
    throw ParameterError("window must be odd and >= 3, got " + std::to_string(window));
  }
  if (window > 7) {
    throw ParameterError("window " + std::to_string(window) + " unsupported: census descriptor must fit 64 bits (max 7)");
  }
  if (disparity_range < 1 || disparity_range > 256) {
    throw ParameterError("disparity range must be in [1, 256], got " + std::to_string(disparity_range));
  }
  if (cost_cap < 1 || cost_cap > 255) {
    throw ParameterError("cost cap must be in [1, 255], got " + std::to_string(cost_cap));
  }
  if (p1 < 0 || p1 >= p2 || p2 > cost_cap) {
    throw ParameterError("penalties must satisfy 0 <= p1 < p2 <= cost_cap, got p1=" + std::to_string(p1) +
                         " p2=" + std::to_string(p2) + " cap=" + std::to_string(cost_cap));
  }
  if (sections < 1) {
    throw ParameterError("sections must be positive, got " + std::to_string(sections));
  }
  if (gt_scale < 1) {
    throw ParameterError("gt_scale must be positive, got " + std::to_string(gt_scale));
  }
}

void RunConfig::apply(const std::map<std::string, std::string>& entries) {
  for (const auto& [key, value] : entries) {
    if (key == "window") {
      window = parse_int(key, value);
    } else if (key == "disparity_range" || key == "dmax") {
      disparity_range = parse_int(key, value);
    } else if (key == "p1") {
      p1 = parse_int(key, value);
    } else if (key == "p2") {
      p2 = parse_int(key, value);
    } else if (key == "cost_cap") {
      cost_cap = parse_int(key, value);
    } else if (key == "sections") {
      sections = parse_int(key, value);
    } else if (key == "gt_scale") {
      gt_scale = parse_int(key, value);
    } else if (key == "init") {
      if (value == "cap") {
        init = BufferInit::kCap;
      } else if (value == "zero") {
        init = BufferInit::kZero;
      } else {
        throw ParameterError("config: init must be 'cap' or 'zero', got '" + value + "'");
      }
    } else {
      throw ParameterError("config: unknown key '" + key + "'");
    }
  }
}

RunConfig read_run_config(const std::filesystem::path& path, RunConfig base) {
  base.apply(parse_key_values(read_file(path)));
  return base;
}

} // namespace ssgm
