#include "care/sim/policy.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "care/errors.h"

namespace care::sim {

std::string_view ToString(PolicyKind kind) {
  return kind == PolicyKind::kGoalSeeker ? "goal_seeker" : "wanderer";
}

PolicyKind ParsePolicyKind(std::string_view name) {
  if (name == "goal_seeker") return PolicyKind::kGoalSeeker;
  if (name == "wanderer") return PolicyKind::kWanderer;
  throw InputError("unknown policy '" + std::string(name) + "'");
}

void PolicyParams::Validate() const {
  if (waypoint_count < 1) throw InputError("policy needs at least one waypoint");
  if (!(step_len > 0.0)) throw InputError("policy step length must be positive");
  if (!(curvature_decay >= 0.0 && curvature_decay <= 1.0)) {
    throw InputError("curvature decay must be in [0, 1]");
  }
  if (!(curvature_sigma >= 0.0) || !(max_curvature >= 0.0)) {
    throw InputError("curvature noise and bound must be non-negative");
  }
}

PolicyParams PolicyParams::For(PolicyKind kind) {
  PolicyParams params;
  params.kind = kind;
  if (kind == PolicyKind::kGoalSeeker) params.step_len = 0.05;
  return params;
}

Trajectory StraightTrajectory(const Vec2& goal_local, int count, double step_len) {
  Trajectory traj;
  const double dist = Norm(goal_local);
  for (int k = 1; k <= count; ++k) {
    if (dist == 0.0) {
      traj.waypoints.push_back({0.0, 0.0});
      continue;
    }
    const double s = std::min(k * step_len, dist);
    traj.waypoints.push_back(goal_local * (s / dist));
  }
  return traj;
}

Trajectory ArcTrajectory(double curvature, int count, double step_len) {
  Trajectory traj;
  for (int k = 1; k <= count; ++k) {
    const double s = k * step_len;
    const double turn = curvature * s;
    if (turn == 0.0) {
      traj.waypoints.push_back({s, 0.0});
    } else {
      traj.waypoints.push_back({std::sin(turn) / curvature, (1.0 - std::cos(turn)) / curvature});
    }
  }
  return traj;
}

StubPolicy::StubPolicy(const PolicyParams& params, std::uint64_t seed)
    : params_(params), rng_(seed) {
  params_.Validate();
}

PolicyOutput StubPolicy::Next(const RobotState& robot, const std::optional<Vec2>& goal) {
  PolicyOutput out;
  if (params_.kind == PolicyKind::kGoalSeeker) {
    if (!goal) throw InputError("goal_seeker policy needs a goal");
    const Vec2 local = robot.pose.ToLocal(*goal);
    out.trajectory = StraightTrajectory(local, params_.waypoint_count, params_.step_len);
    out.degenerate = local.x == 0.0 && local.y == 0.0;
    return out;
  }
  curvature_ = Clip(params_.curvature_decay * curvature_ +
                        params_.curvature_sigma * rng_.Normal(),
                    -params_.max_curvature, params_.max_curvature);
  out.trajectory = ArcTrajectory(curvature_, params_.waypoint_count, params_.step_len);
  return out;
}

}  // namespace care::sim
