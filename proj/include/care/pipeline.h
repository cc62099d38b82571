#pragma once

#include <optional>
#include <string>

#include "care/config.h"
#include "care/depth_projection.h"
#include "care/repulsive_planner.h"
#include "care/safety_controller.h"

namespace care {

/// Everything one frame of the avoidance loop produced.
struct CareDecision {
  Trajectory adjusted_trajectory;
  ControlCommand command;
  ObstacleMap obstacle_map;
  std::optional<RepulsiveResult> repulsive;  // absent on passthrough
  bool passthrough = false;
  std::size_t heading_index = 0;  // waypoint the heading was taken from
  double theta_des = 0.0;
  bool degenerate_heading = false;  // command forced to a stop
};

CareDecision CareStep(const ObstacleMap& obstacles, const Trajectory& traj,
                      const CareConfig& cfg);
CareDecision CareStep(const PointCloud& cloud, const Trajectory& traj,
                      const CareConfig& cfg);
CareDecision CareStep(const DepthFrame& frame, const Trajectory& traj,
                      const CareConfig& cfg);

inline constexpr const char* kDecisionLogHeader =
    "t,v,omega,theta_rep,theta_rot,theta_des,passthrough,n_obstacles";

std::string FormatDecisionLogLine(double t, const CareDecision& decision);

}  // namespace care
