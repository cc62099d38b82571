#include "care/repulsive_planner.h"

#include <algorithm>
#include <cmath>

#include "care/errors.h"

namespace care {

void Trajectory::Validate() const {
  if (waypoints.empty()) throw InputError("trajectory needs at least one waypoint");
  for (const Vec2& p : waypoints) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError("trajectory waypoints must be finite");
    }
  }
}

namespace {

// Throws with the obstacle index; the caller rewraps with the waypoint index.
Vec2 ForceAt(const Vec2& waypoint, std::span<const Vec2> obstacles,
             DirectionMode mode, std::size_t waypoint_index) {
  const double sign = mode == DirectionMode::kRepel ? 1.0 : -1.0;
  Vec2 total;
  for (std::size_t m = 0; m < obstacles.size(); ++m) {
    const Vec2 diff = waypoint - obstacles[m];
    const double d = Norm(diff);
    if (d == 0.0) throw SingularityError(waypoint_index, m);
    const double dc = std::max(d, kMinForceDistance);
    // |contribution| = 1 / dc^3 along the unit vector diff / d.
    total += diff * (sign / (dc * dc * dc * d));
  }
  return total;
}

}  // namespace

Vec2 RepulsiveForce(const Vec2& waypoint, std::span<const Vec2> obstacles,
                    DirectionMode mode) {
  return ForceAt(waypoint, obstacles, mode, 0);
}

Vec2 RepulsiveForce(const Vec2& waypoint, const ObstacleMap& obstacles,
                    DirectionMode mode) {
  const std::vector<Vec2> points = ObstaclePoints(obstacles);
  return ForceAt(waypoint, points, mode, 0);
}

std::vector<Vec2> ObstaclePoints(const ObstacleMap& map) {
  std::vector<Vec2> points;
  points.reserve(map.obstacles.size());
  for (const Obstacle& o : map.obstacles) points.push_back(o.local);
  return points;
}

RepulsiveResult EstimateRepulsiveDirection(const Trajectory& traj,
                                           std::span<const Vec2> obstacles,
                                           double theta_clip, DirectionMode mode) {
  traj.Validate();
  RepulsiveResult result;
  result.force_per_waypoint.reserve(traj.size());
  double best = -1.0;
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const Vec2 f = ForceAt(traj[k], obstacles, mode, k);
    result.force_per_waypoint.push_back(f);
    const double magnitude = Norm(f);
    if (magnitude > best) {
      best = magnitude;
      result.dominant_index = k;
    }
  }

  const Vec2& f = result.force_per_waypoint[result.dominant_index];
  if (f.x == 0.0 && f.y == 0.0) {
    result.theta_rep = 0.0;
    result.theta_rot = 0.0;
  } else {
    result.theta_rep = std::atan2(f.y, f.x);
    result.theta_rot = Clip(result.theta_rep, -theta_clip, theta_clip);
  }
  return result;
}

RepulsiveResult EstimateRepulsiveDirection(const Trajectory& traj,
                                           const ObstacleMap& obstacles,
                                           const CareConfig& cfg) {
  const std::vector<Vec2> points = ObstaclePoints(obstacles);
  return EstimateRepulsiveDirection(traj, points, cfg.theta_clip, cfg.direction_mode);
}

Trajectory RotateTrajectory(const Trajectory& traj, double theta_rot) {
  Trajectory out;
  out.waypoints.reserve(traj.size());
  for (const Vec2& p : traj.waypoints) out.waypoints.push_back(Rotate(p, theta_rot));
  return out;
}

}  // namespace care
