#pragma once

#include <vector>

namespace care {

/// Pinhole intrinsics of the depth camera, in pixels.
struct CameraIntrinsics {
  double fx = 1.0;
  double fy = 1.0;
  double cx = 0.0;
  double cy = 0.0;
  int width = 1;
  int height = 1;

  /// Throws InputError when focal lengths are non-positive or the principal
  /// point lies outside the image.
  void Validate() const;

  /// Square-pixel intrinsics whose horizontal field of view spans fov_deg
  /// across the image width, with the principal point at the image center.
  static CameraIntrinsics FromFov(int width, int height, double fov_deg);
};

/// Mounting geometry of the camera on the robot body.
struct CameraMount {
  double height_m = 0.34;
  // Positive when the camera sits ahead of the robot center.
  double x_offset_m = 0.0;
  double fov_deg = 90.0;
  // Subtracted from every measured depth before filtering.
  double depth_offset_m = 0.0;

  void Validate() const;
};

/// Row-major per-pixel depth in meters; 0 marks an invalid pixel.
struct DepthFrame {
  std::vector<double> depths;
  CameraIntrinsics intrinsics;
  CameraMount mount;

  double At(int u, int v) const { return depths[static_cast<size_t>(v) * intrinsics.width + u]; }

  /// Checks the grid size against the intrinsics and that every depth is
  /// finite and non-negative.
  void Validate() const;
};

inline constexpr double kInvalidDepth = 0.0;

}  // namespace care
