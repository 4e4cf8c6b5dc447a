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

#include "pcc/camera.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "pcc/error.hpp"

namespace pcc {
namespace {

constexpr double kDegToRad = 0.017453292519943295;

}  // namespace

CameraParams camera_from_view(double azimuth_deg, double elevation_deg,
                              double distance) {
  if (distance <= 0.0) throw data_error("camera: distance must be > 0");
  CameraParams cam;
  cam.azimuth_deg = azimuth_deg;
  cam.elevation_deg = elevation_deg;
  cam.distance = distance;
  return cam;
}

std::vector<CameraParams> default_view_ring(int count, double elevation_deg,
                                            double distance) {
  std::vector<CameraParams> views;
  views.reserve(count);
  for (int k = 0; k < count; ++k) {
    views.push_back(camera_from_view(k * 360.0 / count, elevation_deg,
                                     distance));
  }
  return views;
}

Point3 camera_position(const CameraParams& cam) {
  const double az = cam.azimuth_deg * kDegToRad;
  const double el = cam.elevation_deg * kDegToRad;
  return {cam.distance * std::cos(el) * std::cos(az),
          cam.distance * std::cos(el) * std::sin(az),
          cam.distance * std::sin(el)};
}

RigidTransform world_to_camera(const CameraParams& cam) {
  const double az = cam.azimuth_deg * kDegToRad;
  const double el = cam.elevation_deg * kDegToRad;
  const double ca = std::cos(az), sa = std::sin(az);
  const double ce = std::cos(el), se = std::sin(el);

  // Rows: camera right, camera down, camera forward (all unit, analytic, so
  // no degeneracy at the poles).
  const Point3 right{-sa, ca, 0.0};
  const Point3 down{se * ca, se * sa, -ce};
  const Point3 forward{-ce * ca, -ce * sa, -se};

  RigidTransform t;
  t.rotation = {right.x,   right.y,   right.z,    //
                down.x,    down.y,    down.z,     //
                forward.x, forward.y, forward.z};
  const Point3 c = camera_position(cam);
  t.translation = {-right.dot(c), -down.dot(c), -forward.dot(c)};
  return t;
}

RigidTransform camera_to_world(const CameraParams& cam) {
  return world_to_camera(cam).inverse();
}

PixelCoord project(const CameraParams& cam, const Point3& world) {
  const Point3 pc = world_to_camera(cam).apply(world);
  if (pc.z <= 0.0) throw numeric_error("behind camera");
  return {cam.u0 + cam.focal_px * pc.x / pc.z,
          cam.v0 + cam.focal_px * pc.y / pc.z, pc.z};
}

Point3 backproject_pixel(const CameraParams& cam, double u, double v,
                         double depth) {
  if (depth <= 0.0) throw data_error("backproject: depth must be > 0");
  const Point3 pc{(u - cam.u0) * depth / cam.focal_px,
                  (v - cam.v0) * depth / cam.focal_px, depth};
  return camera_to_world(cam).apply(pc);
}

std::string camera_to_json(const CameraParams& cam) {
  nlohmann::json j;
  j["azimuth"] = cam.azimuth_deg;
  j["elevation"] = cam.elevation_deg;
  j["distance"] = cam.distance;
  j["focal_px"] = cam.focal_px;
  j["pp"] = {cam.u0, cam.v0};
  j["size"] = {cam.width, cam.height};
  return j.dump(2) + "\n";
}

CameraParams camera_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("camera json: ") + e.what());
  }
  try {
    CameraParams cam;
    cam.azimuth_deg = j.at("azimuth").get<double>();
    cam.elevation_deg = j.at("elevation").get<double>();
    cam.distance = j.at("distance").get<double>();
    cam.focal_px = j.at("focal_px").get<double>();
    cam.u0 = j.at("pp").at(0).get<double>();
    cam.v0 = j.at("pp").at(1).get<double>();
    cam.width = j.at("size").at(0).get<int>();
    cam.height = j.at("size").at(1).get<int>();
    if (cam.distance <= 0.0 || cam.focal_px <= 0.0 || cam.width <= 0 ||
        cam.height <= 0) {
      throw data_error("camera json: non-positive distance/focal/size");
    }
    return cam;
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("camera json: ") + e.what());
  }
}

CameraParams read_camera_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open " + path);
  return camera_from_json_text(std::string(
      std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()));
}

void write_camera_json(const std::string& path, const CameraParams& cam) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw data_error("cannot write " + path);
  out << camera_to_json(cam);
}

}  // namespace pcc
