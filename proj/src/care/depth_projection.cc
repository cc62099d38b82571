#include "care/depth_projection.h"

#include <cmath>

#include "care/errors.h"

namespace care {

PointCloud BackProject(const DepthFrame& frame) {
  frame.Validate();
  const CameraIntrinsics& k = frame.intrinsics;

  PointCloud cloud;
  cloud.points.reserve(frame.depths.size());
  for (int v = 0; v < k.height; ++v) {
    const double dv = v - k.cy;
    for (int u = 0; u < k.width; ++u) {
      const double d = frame.At(u, v);
      if (d == kInvalidDepth) continue;
      cloud.points.push_back({(u - k.cx) * d / k.fx, dv * d / k.fy, d});
    }
  }
  return cloud;
}

double BinHalfWidth(const CareConfig& cfg) {
  return std::tan(0.5 * DegToRad(cfg.mount.fov_deg)) * cfg.tau_z;
}

int LateralBin(double x_cam, double half_width, int bin_count) {
  if (!(x_cam >= -half_width && x_cam <= half_width)) return -1;
  const double t = (x_cam + half_width) / (2.0 * half_width);
  const int bin = static_cast<int>(std::floor(t * bin_count));
  return bin >= bin_count ? bin_count - 1 : bin;
}

bool PassesRangeMask(const Point3& p, double tau_z, double epsilon) {
  return p.z > 0.0 && p.z <= tau_z && p.y >= -epsilon;
}

std::vector<Point3> ApplyRangeMask(std::span<const Point3> points, double tau_z,
                                   double epsilon) {
  std::vector<Point3> kept;
  for (const Point3& p : points) {
    if (PassesRangeMask(p, tau_z, epsilon)) kept.push_back(p);
  }
  return kept;
}

Vec2 CameraToRobot(double x_cam, double z_cam, const CameraMount& mount) {
  return {z_cam + mount.x_offset_m, -x_cam};
}

namespace {

// Running per-bin minimum over a stream of camera-frame points.
class BinScan {
 public:
  explicit BinScan(const CareConfig& cfg)
      : cfg_(cfg), winner_(cfg.bin_count, kEmpty), best_(cfg.bin_count) {
    if (!(cfg.tau_z > 0.0)) throw InputError("tau_z must be positive");
    if (cfg.bin_count < 1) throw InputError("bin count must be at least 1");
    half_width_ = BinHalfWidth(cfg);
  }

  void Add(Point3 p, std::size_t index) {
    p.z -= cfg_.mount.depth_offset_m;
    if (!PassesRangeMask(p, cfg_.tau_z, cfg_.epsilon)) return;
    const int bin = LateralBin(p.x, half_width_, cfg_.bin_count);
    if (bin < 0) return;
    if (winner_[bin] == kEmpty || p.z < best_[bin].z) {
      winner_[bin] = index;
      best_[bin] = p;
    }
  }

  ObstacleMap Finish() const {
    ObstacleMap map;
    map.bin_count = cfg_.bin_count;
    map.sensing_range = cfg_.tau_z;
    map.half_width = half_width_;
    for (int bin = 0; bin < cfg_.bin_count; ++bin) {
      if (winner_[bin] == kEmpty) continue;
      const Point3& p = best_[bin];
      map.obstacles.push_back({p.x, p.z, CameraToRobot(p.x, p.z, cfg_.mount), bin, winner_[bin]});
    }
    return map;
  }

 private:
  static constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);
  const CareConfig& cfg_;
  double half_width_ = 0.0;
  std::vector<std::size_t> winner_;
  std::vector<Point3> best_;
};

}  // namespace

ObstacleMap ConstructObstacleMap(const PointCloud& cloud, const CareConfig& cfg) {
  BinScan scan(cfg);
  for (std::size_t i = 0; i < cloud.points.size(); ++i) scan.Add(cloud.points[i], i);
  return scan.Finish();
}

ObstacleMap ConstructObstacleMap(const DepthFrame& frame, const CareConfig& cfg) {
  frame.Validate();
  const CameraIntrinsics& k = frame.intrinsics;
  BinScan scan(cfg);
  std::size_t index = 0;
  for (int v = 0; v < k.height; ++v) {
    const double dv = v - k.cy;
    for (int u = 0; u < k.width; ++u) {
      const double d = frame.At(u, v);
      if (d == kInvalidDepth) continue;
      scan.Add({(u - k.cx) * d / k.fx, dv * d / k.fy, d}, index++);
    }
  }
  return scan.Finish();
}

}  // namespace care
