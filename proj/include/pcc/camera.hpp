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

#ifndef PCC_CAMERA_HPP_
#define PCC_CAMERA_HPP_

#include <string>
#include <vector>

#include "pcc/geometry.hpp"

namespace pcc {

// Pinhole camera on a sphere around the origin, always looking at the origin
// with world +z up. Convention: right-handed world, azimuth about +z measured
// from +x, elevation above the xy-plane. Image u grows along the camera's
// right axis, v downward (world -z at zero elevation).
struct CameraParams {
  double azimuth_deg = 0.0;
  double elevation_deg = 0.0;
  double distance = 2.5;

  double focal_px = 224.0;
  double u0 = 112.0;
  double v0 = 112.0;
  int width = 224;
  int height = 224;
};

// Default orbit used when generating data: full azimuth ring at elevation 25
// degrees. Distance 2.5 keeps the whole unit sphere inside the 224x224 frame
// (max projected radius ~97.7 px < 112 px).
inline constexpr int kDefaultViewCount = 24;
inline constexpr double kDefaultViewElevationDeg = 25.0;
inline constexpr double kDefaultViewDistance = 2.5;

CameraParams camera_from_view(double azimuth_deg, double elevation_deg,
                              double distance);

std::vector<CameraParams> default_view_ring(
    int count = kDefaultViewCount,
    double elevation_deg = kDefaultViewElevationDeg,
    double distance = kDefaultViewDistance);

Point3 camera_position(const CameraParams& cam);
RigidTransform world_to_camera(const CameraParams& cam);
RigidTransform camera_to_world(const CameraParams& cam);

struct PixelCoord {
  double u = 0.0;
  double v = 0.0;
  double depth = 0.0;  // camera-frame z
};

// Pinhole projection of a world point. Throws numeric_error("behind camera")
// when the camera-frame depth is not positive.
PixelCoord project(const CameraParams& cam, const Point3& world);

// Inverse of project at a given pixel coordinate and camera-frame depth;
// returns the world-frame point.
Point3 backproject_pixel(const CameraParams& cam, double u, double v,
                         double depth);

// JSON round trip: {azimuth, elevation, distance, focal_px, pp, size}.
std::string camera_to_json(const CameraParams& cam);
CameraParams camera_from_json_text(const std::string& text);
CameraParams read_camera_json(const std::string& path);
void write_camera_json(const std::string& path, const CameraParams& cam);

}  // namespace pcc

#endif  // PCC_CAMERA_HPP_
