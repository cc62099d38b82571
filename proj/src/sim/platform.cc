#include "care/sim/platform.h"

#include <algorithm>
#include <string>

#include "care/errors.h"

namespace care::sim {

namespace {

// Range, offset, resolution, body size, camera height and x-offset per robot;
// fields of view of the fitted cameras.
constexpr PlatformSpec kLocobot{"locobot", 1.0, 0.05, 320, 240, 0.341, 0.339, 0.340, 0.010, 170.0};
constexpr PlatformSpec kTurtlebot4{"turtlebot4", 1.2, 0.2, 320, 200, 0.341, 0.339, 0.245, -0.060, 89.5};
constexpr PlatformSpec kRobomaster{"robomaster", 1.0, -0.1, 640, 360, 0.320, 0.240, 0.240, 0.070, 120.0};

}  // namespace

double PlatformSpec::FootprintRadius() const { return 0.5 * std::max(length_m, width_m); }

const PlatformSpec& SpecFor(Platform platform) {
  switch (platform) {
    case Platform::kLocobot:
      return kLocobot;
    case Platform::kTurtlebot4:
      return kTurtlebot4;
    case Platform::kRobomaster:
      return kRobomaster;
  }
  return kLocobot;
}

Platform ParsePlatform(std::string_view name) {
  for (Platform p : {Platform::kLocobot, Platform::kTurtlebot4, Platform::kRobomaster}) {
    if (SpecFor(p).name == name) return p;
  }
  throw InputError("unknown platform '" + std::string(name) + "'");
}

std::string_view ToString(Platform platform) { return SpecFor(platform).name; }

CameraMount MountFor(Platform platform) {
  const PlatformSpec& s = SpecFor(platform);
  return {s.camera_height_m, s.camera_x_offset_m, s.fov_deg, s.depth_offset_m};
}

CameraIntrinsics IntrinsicsFor(Platform platform) {
  const PlatformSpec& s = SpecFor(platform);
  return CameraIntrinsics::FromFov(s.image_width, s.image_height, s.fov_deg);
}

CareConfig CareConfigFor(Platform platform) {
  const PlatformSpec& s = SpecFor(platform);
  CareConfig cfg = CareConfig::Defaults();
  cfg.tau_z = s.tau_z;
  cfg.bin_count = DefaultBinCount(s.image_width);
  cfg.mount = MountFor(platform);
  return cfg;
}

}  // namespace care::sim
