#pragma once

#include <string_view>

#include "care/camera.h"
#include "care/config.h"

namespace care::sim {

enum class Platform { kLocobot, kTurtlebot4, kRobomaster };

struct PlatformSpec {
  std::string_view name;
  double tau_z;           // m
  double depth_offset_m;  // m
  int image_width;        // px
  int image_height;       // px
  double length_m;
  double width_m;
  double camera_height_m;
  double camera_x_offset_m;
  double fov_deg;

  double FootprintRadius() const;
};

const PlatformSpec& SpecFor(Platform platform);
Platform ParsePlatform(std::string_view name);
std::string_view ToString(Platform platform);

CameraMount MountFor(Platform platform);
CameraIntrinsics IntrinsicsFor(Platform platform);

/// Shared avoidance parameters with this platform's range, offset, mount and
/// one bin per ten image columns.
CareConfig CareConfigFor(Platform platform);

}  // namespace care::sim
