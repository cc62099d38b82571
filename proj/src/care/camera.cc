#include "care/camera.h"

#include <cmath>
#include <string>

#include "care/errors.h"
#include "care/geometry.h"

namespace care {

void CameraIntrinsics::Validate() const {
  if (width <= 0 || height <= 0) {
    throw InputError("camera image size must be positive");
  }
  if (!(fx > 0.0) || !(fy > 0.0)) {
    throw InputError("focal lengths must be positive");
  }
  if (!(cx >= 0.0 && cx < width) || !(cy >= 0.0 && cy < height)) {
    throw InputError("principal point lies outside the image");
  }
}

CameraIntrinsics CameraIntrinsics::FromFov(int width, int height, double fov_deg) {
  if (!(fov_deg > 0.0 && fov_deg < 180.0)) {
    throw InputError("pinhole field of view must be in (0, 180) degrees");
  }
  CameraIntrinsics k;
  k.width = width;
  k.height = height;
  k.fx = 0.5 * width / std::tan(0.5 * DegToRad(fov_deg));
  k.fy = k.fx;
  k.cx = 0.5 * (width - 1);
  k.cy = 0.5 * (height - 1);
  k.Validate();
  return k;
}

void CameraMount::Validate() const {
  if (!(height_m > 0.0)) throw InputError("camera height must be positive");
  if (!(fov_deg > 0.0 && fov_deg <= 180.0)) {
    throw InputError("field of view must be in (0, 180] degrees");
  }
  if (!std::isfinite(x_offset_m) || !std::isfinite(depth_offset_m)) {
    throw InputError("camera offsets must be finite");
  }
}

void DepthFrame::Validate() const {
  intrinsics.Validate();
  const auto expected = static_cast<size_t>(intrinsics.width) * intrinsics.height;
  if (depths.size() != expected) {
    throw InputError("depth grid has " + std::to_string(depths.size()) +
                     " values, expected " + std::to_string(expected));
  }
  for (double d : depths) {
    if (!std::isfinite(d) || d < 0.0) {
      throw InputError("depth values must be finite and non-negative");
    }
  }
}

}  // namespace care
