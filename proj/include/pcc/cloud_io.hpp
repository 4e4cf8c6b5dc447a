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

#ifndef PCC_CLOUD_IO_HPP_
#define PCC_CLOUD_IO_HPP_

#include <string>

#include "pcc/geometry.hpp"

namespace pcc {

enum class PlyFormat { kAscii, kBinaryLittleEndian };

// XYZ text: one "x y z" per line, '.' decimal separator, shortest
// round-tripping representation.
PointCloud read_xyz(const std::string& path);
void write_xyz(const std::string& path, const PointCloud& cloud);

// PLY with a vertex element carrying float32 x/y/z. Binary little-endian
// files round-trip bit-exactly.
PointCloud read_ply(const std::string& path);
void write_ply(const std::string& path, const PointCloud& cloud,
               PlyFormat format = PlyFormat::kBinaryLittleEndian);

// Dispatch on extension: .xyz or .ply.
PointCloud read_cloud(const std::string& path);
void write_cloud(const std::string& path, const PointCloud& cloud);

}  // namespace pcc

#endif  // PCC_CLOUD_IO_HPP_
