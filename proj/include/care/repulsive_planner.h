#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "care/config.h"
#include "care/depth_projection.h"
#include "care/geometry.h"

namespace care {

/// Waypoints in the robot local frame, as emitted by a navigation policy.
struct Trajectory {
  std::vector<Vec2> waypoints;

  std::size_t size() const { return waypoints.size(); }
  const Vec2& operator[](std::size_t i) const { return waypoints[i]; }
  bool operator==(const Trajectory&) const = default;

  /// Requires at least one waypoint and finite coordinates.
  void Validate() const;
};

struct RepulsiveResult {
  std::vector<Vec2> force_per_waypoint;
  std::size_t dominant_index = 0;
  double theta_rep = 0.0;
  double theta_rot = 0.0;
};

// Distances below this are clamped before cubing.
inline constexpr double kMinForceDistance = 1e-6;

/// Inverse-cube force on `waypoint` summed over `obstacles`. Throws
/// SingularityError when the waypoint sits exactly on an obstacle.
Vec2 RepulsiveForce(const Vec2& waypoint, std::span<const Vec2> obstacles,
                    DirectionMode mode);
Vec2 RepulsiveForce(const Vec2& waypoint, const ObstacleMap& obstacles,
                    DirectionMode mode);

/// Forces at every waypoint, the strongest one (first on ties), and its
/// heading clipped to +-theta_clip. A zero force yields no rotation.
RepulsiveResult EstimateRepulsiveDirection(const Trajectory& traj,
                                           std::span<const Vec2> obstacles,
                                           double theta_clip, DirectionMode mode);
RepulsiveResult EstimateRepulsiveDirection(const Trajectory& traj,
                                           const ObstacleMap& obstacles,
                                           const CareConfig& cfg);

Trajectory RotateTrajectory(const Trajectory& traj, double theta_rot);

std::vector<Vec2> ObstaclePoints(const ObstacleMap& map);

}  // namespace care
