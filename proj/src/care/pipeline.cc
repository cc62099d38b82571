#include "care/pipeline.h"

#include <fmt/format.h>

#include "care/errors.h"

namespace care {

CareDecision CareStep(const ObstacleMap& obstacles, const Trajectory& traj,
                      const CareConfig& cfg) {
  traj.Validate();
  CareDecision decision;
  decision.obstacle_map = obstacles;
  decision.passthrough = obstacles.empty();

  if (decision.passthrough) {
    decision.adjusted_trajectory = traj;
    decision.heading_index = 0;
  } else {
    RepulsiveResult rep = EstimateRepulsiveDirection(traj, obstacles, cfg);
    decision.adjusted_trajectory = RotateTrajectory(traj, rep.theta_rot);
    decision.heading_index = rep.dominant_index;
    decision.repulsive = std::move(rep);
  }

  try {
    decision.theta_des =
        ComputeDesiredHeading(decision.adjusted_trajectory, decision.heading_index);
    decision.command = GateCommand(decision.theta_des, cfg.safety);
  } catch (const DegenerateHeadingError&) {
    decision.degenerate_heading = true;
    decision.theta_des = 0.0;
    decision.command = {0.0, 0.0};
  }
  return decision;
}

CareDecision CareStep(const PointCloud& cloud, const Trajectory& traj,
                      const CareConfig& cfg) {
  return CareStep(ConstructObstacleMap(cloud, cfg), traj, cfg);
}

CareDecision CareStep(const DepthFrame& frame, const Trajectory& traj,
                      const CareConfig& cfg) {
  return CareStep(ConstructObstacleMap(frame, cfg), traj, cfg);
}

std::string FormatDecisionLogLine(double t, const CareDecision& decision) {
  const double theta_rep = decision.repulsive ? decision.repulsive->theta_rep : 0.0;
  const double theta_rot = decision.repulsive ? decision.repulsive->theta_rot : 0.0;
  return fmt::format("{},{},{},{},{},{},{},{}", t,
                     decision.command.v, decision.command.omega, theta_rep, theta_rot,
                     decision.theta_des, decision.passthrough ? 1 : 0,
                     decision.obstacle_map.size());
}

}  // namespace care
