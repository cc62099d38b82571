#include "care/safety_controller.h"

#include <cmath>
#include <numbers>

#include "care/errors.h"

namespace care {

double ComputeDesiredHeading(const Trajectory& adjusted, std::size_t dominant_index) {
  if (dominant_index >= adjusted.size()) {
    throw InputError("dominant waypoint index out of range");
  }
  const Vec2& p = adjusted[dominant_index];
  if (p.x == 0.0 && p.y == 0.0) {
    throw DegenerateHeadingError("waypoint coincides with the robot origin");
  }
  const double heading = std::atan2(p.y, p.x);
  return heading == -std::numbers::pi ? std::numbers::pi : heading;
}

double TurnRate(double theta_des, const SafetyParams& params) {
  return Clip(params.k_omega * theta_des, -params.omega_max, params.omega_max);
}

ControlCommand GateCommand(double theta_des, const SafetyParams& params) {
  const double omega = TurnRate(theta_des, params);
  if (std::abs(theta_des) > params.theta_thres) return {0.0, omega};
  return {params.v_fwd, omega};
}

}  // namespace care
