#pragma once

#include <cstdint>

#include "care/camera.h"
#include "care/geometry.h"
#include "care/safety_controller.h"
#include "care/sim/platform.h"
#include "care/sim/world.h"

namespace care::sim {

struct RobotState {
  Pose2 pose;
  double footprint_radius = 0.17;
  Platform platform = Platform::kLocobot;

  static RobotState For(Platform platform, const Pose2& pose);
};

inline constexpr double kDefaultFarLimit = 5.0;
inline constexpr double kDefaultDt = 0.1;
inline constexpr double kContactTolerance = 1e-9;

struct RaycastOptions {
  double far_limit = kDefaultFarLimit;  // range along the ray (m)
  double jitter_m = 0.0;                // uniform depth noise half-width
  std::uint64_t jitter_seed = 0;
};

/// Distance along a unit ray to the nearest surface at time t, or +inf.
double CastRay(const WorldModel& world, const Vec2& origin, const Vec2& direction,
               double t);

/// Synthetic depth image. One ray per pixel column in the horizontal plane;
/// every row of a column receives that column's optical-axis depth. Hits
/// beyond the far limit are left invalid.
DepthFrame RaycastDepth(const WorldModel& world, const RobotState& robot,
                        const CameraIntrinsics& intrinsics, const CameraMount& mount,
                        double t = 0.0, const RaycastOptions& options = {});

/// Differential-drive step along the exact circular arc.
RobotState StepKinematics(const RobotState& robot, const ControlCommand& cmd, double dt);

/// True when the footprint disc touches any static obstacle or agent at time
/// t. Contact is a closed condition up to kContactTolerance.
bool CheckCollision(const WorldModel& world, const RobotState& robot, double t = 0.0);

/// Smallest gap between the footprint disc and any obstacle at time t
/// (negative when overlapping).
double Clearance(const WorldModel& world, const Vec2& center, double radius, double t);

}  // namespace care::sim
