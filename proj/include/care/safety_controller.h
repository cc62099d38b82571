#pragma once

#include <cstddef>

#include "care/config.h"
#include "care/repulsive_planner.h"

namespace care {

struct ControlCommand {
  double v = 0.0;      // m/s, never negative
  double omega = 0.0;  // rad/s

  bool operator==(const ControlCommand&) const = default;
};

/// Bearing of the given waypoint in (-pi, pi]. Throws DegenerateHeadingError
/// for a waypoint at the origin.
double ComputeDesiredHeading(const Trajectory& adjusted, std::size_t dominant_index);

/// Proportional turn rate clipped to +-omega_max.
double TurnRate(double theta_des, const SafetyParams& params);

/// Safe-FOV gate: rotate in place when |theta_des| > theta_thres, otherwise
/// drive at v_fwd while turning.
ControlCommand GateCommand(double theta_des, const SafetyParams& params);

}  // namespace care
