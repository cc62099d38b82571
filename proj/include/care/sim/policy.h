#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "care/repulsive_planner.h"
#include "care/sim/random.h"
#include "care/sim/simulator.h"

namespace care::sim {

enum class PolicyKind { kGoalSeeker, kWanderer };

std::string_view ToString(PolicyKind kind);
PolicyKind ParsePolicyKind(std::string_view name);

struct PolicyParams {
  PolicyKind kind = PolicyKind::kGoalSeeker;
  int waypoint_count = 8;  // K
  double step_len = 0.2;  // m between waypoints
  // Wanderer curvature process: kappa <- decay * kappa + sigma * N(0, 1),
  // clamped to +-max_curvature (1/m).
  double curvature_decay = 0.97;
  double curvature_sigma = 0.3;
  double max_curvature = 2.0;

  void Validate() const;

  /// Defaults for one kind: the goal seeker plans a short 0.4 m horizon, the
  /// wanderer a 1.6 m one.
  static PolicyParams For(PolicyKind kind);
};

struct PolicyOutput {
  Trajectory trajectory;
  bool degenerate = false;  // goal coincides with the robot
};

/// Obstacle-blind stand-in for a learned navigation policy.
class StubPolicy {
 public:
  StubPolicy(const PolicyParams& params, std::uint64_t seed);

  /// Waypoints in the robot frame. The goal seeker heads straight for `goal`
  /// (world frame) and stops at it; the wanderer follows an arc whose
  /// curvature drifts once per call.
  PolicyOutput Next(const RobotState& robot, const std::optional<Vec2>& goal);

  const PolicyParams& params() const { return params_; }
  double curvature() const { return curvature_; }

 private:
  PolicyParams params_;
  Rng rng_;
  double curvature_ = 0.0;
};

/// Waypoints along a straight line toward a local-frame goal, clamped at it.
Trajectory StraightTrajectory(const Vec2& goal_local, int count, double step_len);

/// Waypoints along an arc of constant curvature starting at the origin
/// heading along +x.
Trajectory ArcTrajectory(double curvature, int count, double step_len);

}  // namespace care::sim
