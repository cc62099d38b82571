#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "care/camera.h"
#include "care/config.h"
#include "care/geometry.h"

namespace care {

/// Camera-frame points: X right, Y down, Z forward (meters).
struct PointCloud {
  std::vector<Point3> points;
};

/// Nearest point of one lateral bin.
struct Obstacle {
  double x_cam = 0.0;  // lateral camera coordinate
  double z_cam = 0.0;  // depth after offset correction, in (0, tau_z]
  Vec2 local;          // robot frame, x forward and y left
  int bin = 0;
  std::size_t source_index = 0;  // index of the winning point in the cloud
};

struct ObstacleMap {
  std::vector<Obstacle> obstacles;  // ordered by bin
  int bin_count = 0;
  double sensing_range = 0.0;
  double half_width = 0.0;  // bins cover [-half_width, half_width] in camera X

  bool empty() const { return obstacles.empty(); }
  std::size_t size() const { return obstacles.size(); }
};

/// Inverse-intrinsics projection of every valid pixel, in row-major order.
PointCloud BackProject(const DepthFrame& frame);

/// Lateral extent of the bins: tan(fov / 2) * tau_z.
double BinHalfWidth(const CareConfig& cfg);

/// Bin of a lateral coordinate, or -1 when it falls outside the binned range.
int LateralBin(double x_cam, double half_width, int bin_count);

bool PassesRangeMask(const Point3& p, double tau_z, double epsilon);

/// Keeps the points with 0 < Z <= tau_z and Y >= -epsilon. No depth correction
/// is applied.
std::vector<Point3> ApplyRangeMask(std::span<const Point3> points, double tau_z,
                                   double epsilon);

/// Camera (X, Z) to robot frame, with the mount's forward offset.
Vec2 CameraToRobot(double x_cam, double z_cam, const CameraMount& mount);

/// Corrects depth by the mount offset, masks, and keeps the minimum-Z point of
/// each of cfg.bin_count uniform lateral bins. Ties keep the earliest point.
ObstacleMap ConstructObstacleMap(const PointCloud& cloud, const CareConfig& cfg);

/// Same result as ConstructObstacleMap(BackProject(frame), cfg) without
/// materializing the cloud.
ObstacleMap ConstructObstacleMap(const DepthFrame& frame, const CareConfig& cfg);

}  // namespace care
