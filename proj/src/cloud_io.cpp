/*
Copyright 2026 The pcc Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "pcc/cloud_io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "pcc/error.hpp"

static_assert(std::endian::native == std::endian::little,
              "binary PLY writer assumes a little-endian host");

namespace pcc {
namespace {

double parse_double(std::string_view token, const std::string& path) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw data_error(path + ": bad number '" + std::string(token) + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_float(float v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void check_finite(const PointCloud& cloud, const std::string& path) {
  if (!cloud.all_finite()) throw data_error(path + ": non-finite coordinates");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

PointCloud read_xyz(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open " + path);
  PointCloud cloud;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string sx, sy, sz;
    if (!(ls >> sx >> sy >> sz)) {
      throw data_error(path + ": malformed line '" + line + "'");
    }
    cloud.points.push_back({parse_double(sx, path), parse_double(sy, path),
                            parse_double(sz, path)});
  }
  check_finite(cloud, path);
  return cloud;
}

void write_xyz(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write " + path);
  for (const Point3& p : cloud.points) {
    out << format_double(p.x) << ' ' << format_double(p.y) << ' '
        << format_double(p.z) << '\n';
  }
}

PointCloud read_ply(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw data_error("cannot open " + path);

  std::string line;
  if (!std::getline(in, line) || line != "ply") {
    throw data_error(path + ": missing ply magic");
  }

  bool binary = false;
  bool have_format = false;
  std::size_t vertex_count = 0;
  bool in_vertex_element = false;
  std::vector<std::string> vertex_props;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "comment" || word.empty()) continue;
    if (word == "format") {
      std::string fmt, version;
      ls >> fmt >> version;
      if (fmt == "ascii") {
        binary = false;
      } else if (fmt == "binary_little_endian") {
        binary = true;
      } else {
        throw data_error(path + ": unsupported format " + fmt);
      }
      have_format = true;
    } else if (word == "element") {
      std::string name;
      std::size_t count = 0;
      ls >> name >> count;
      if (name == "vertex") {
        vertex_count = count;
        in_vertex_element = true;
      } else {
        if (count > 0) {
          throw data_error(path + ": unsupported element " + name);
        }
        in_vertex_element = false;
      }
    } else if (word == "property") {
      if (!in_vertex_element) continue;
      std::string type, name;
      ls >> type >> name;
      if (type != "float" && type != "float32") {
        throw data_error(path + ": unsupported vertex property type " + type);
      }
      vertex_props.push_back(name);
    } else if (word == "end_header") {
      break;
    } else {
      throw data_error(path + ": unexpected header line '" + line + "'");
    }
  }
  if (!have_format) throw data_error(path + ": missing format line");
  if (vertex_props != std::vector<std::string>{"x", "y", "z"}) {
    throw data_error(path + ": vertex element must be float x/y/z");
  }

  PointCloud cloud;
  cloud.points.reserve(vertex_count);
  if (binary) {
    std::vector<float> raw(vertex_count * 3);
    in.read(reinterpret_cast<char*>(raw.data()),
            static_cast<std::streamsize>(raw.size() * sizeof(float)));
    if (static_cast<std::size_t>(in.gcount()) != raw.size() * sizeof(float)) {
      throw data_error(path + ": truncated vertex data");
    }
    for (std::size_t i = 0; i < vertex_count; ++i) {
      cloud.points.push_back(
          {raw[3 * i], raw[3 * i + 1], raw[3 * i + 2]});
    }
  } else {
    for (std::size_t i = 0; i < vertex_count; ++i) {
      if (!std::getline(in, line)) {
        throw data_error(path + ": truncated vertex data");
      }
      std::istringstream ls(line);
      std::string sx, sy, sz;
      if (!(ls >> sx >> sy >> sz)) {
        throw data_error(path + ": malformed vertex '" + line + "'");
      }
      // Parse through float so ascii and binary agree in precision.
      cloud.points.push_back(
          {static_cast<float>(parse_double(sx, path)),
           static_cast<float>(parse_double(sy, path)),
           static_cast<float>(parse_double(sz, path))});
    }
  }
  check_finite(cloud, path);
  return cloud;
}

void write_ply(const std::string& path, const PointCloud& cloud,
               PlyFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write " + path);
  const bool binary = format == PlyFormat::kBinaryLittleEndian;
  out << "ply\n"
      << (binary ? "format binary_little_endian 1.0\n" : "format ascii 1.0\n")
      << "element vertex " << cloud.size() << "\n"
      << "property float x\nproperty float y\nproperty float z\n"
      << "end_header\n";
  if (binary) {
    std::vector<float> raw;
    raw.reserve(cloud.size() * 3);
    for (const Point3& p : cloud.points) {
      raw.push_back(static_cast<float>(p.x));
      raw.push_back(static_cast<float>(p.y));
      raw.push_back(static_cast<float>(p.z));
    }
    out.write(reinterpret_cast<const char*>(raw.data()),
              static_cast<std::streamsize>(raw.size() * sizeof(float)));
  } else {
    for (const Point3& p : cloud.points) {
      out << format_float(static_cast<float>(p.x)) << ' '
          << format_float(static_cast<float>(p.y)) << ' '
          << format_float(static_cast<float>(p.z)) << '\n';
    }
  }
}

PointCloud read_cloud(const std::string& path) {
  if (ends_with(path, ".ply")) return read_ply(path);
  if (ends_with(path, ".xyz")) return read_xyz(path);
  throw data_error("unknown cloud format: " + path);
}

void write_cloud(const std::string& path, const PointCloud& cloud) {
  if (ends_with(path, ".ply")) {
    write_ply(path, cloud);
  } else if (ends_with(path, ".xyz")) {
    write_xyz(path, cloud);
  } else {
    throw data_error("unknown cloud format: " + path);
  }
}

}  // namespace pcc
