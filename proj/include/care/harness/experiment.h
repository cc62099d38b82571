#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "care/config.h"
#include "care/harness/scenarios.h"
#include "care/sim/platform.h"
#include "care/sim/policy.h"
#include "care/sim/world.h"

namespace care::harness {

enum class Task { kExploration, kGoalConditioned, kDynamicObstacle };

std::string_view ToString(Task task);

inline constexpr double kGoalRadius = 0.3;

struct ExperimentSpec {
  Task task = Task::kExploration;
  std::string world_file;
  sim::Platform platform = sim::Platform::kLocobot;
  sim::PolicyParams policy = sim::PolicyParams::For(sim::PolicyKind::kGoalSeeker);
  bool care_enabled = true;
  int trials = 1;
  std::uint64_t seed = 0;
  double max_distance_m = 30.0;
  double max_time_s = 300.0;
  double dt = 0.1;
  double goal_radius = kGoalRadius;
  // Platform defaults are used when absent.
  std::optional<CareConfig> care_config;
  bool keep_logs = true;

  void Validate() const;
  CareConfig ResolvedCareConfig() const;
};

struct TrialResult {
  int index = 0;
  double distance_before_collision = 0.0;  // m, capped at max_distance_m
  double path_length = 0.0;                // m
  double completion_time = 0.0;            // s
  int collision_count = 0;                 // contiguous contact intervals
  bool arrived = false;
  int goals_reached = 0;
  std::string trajectory_log;  // t,x,y,heading,v,omega,collided
  std::string decision_log;    // CARE arm only
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single trial
};

MeanStd Summarize(const std::vector<double>& values);

struct MetricsReport {
  Task task = Task::kExploration;
  bool care_enabled = false;
  int trials = 0;
  MeanStd distance_before_collision;
  MeanStd path_length;
  MeanStd completion_time;
  double collision_count = 0.0;  // mean per trial
  int total_collisions = 0;
  int collision_trials = 0;      // trials with at least one collision
  double arrival_rate = 0.0;
  std::vector<TrialResult> per_trial;
};

/// Aggregates per-trial results in index order.
MetricsReport Aggregate(Task task, bool care_enabled, std::vector<TrialResult> trials);

/// Per-trial inputs of a closed-loop episode.
struct EpisodeSetup {
  sim::WorldModel world;
  sim::RobotState start;
  std::vector<Vec2> goals;  // empty for exploration
  std::uint64_t policy_seed = 0;
  bool stop_at_first_collision = false;
};

TrialResult RunEpisode(const ExperimentSpec& spec, const EpisodeSetup& setup, int index);

MetricsReport RunExploration(const ExperimentSpec& spec);
MetricsReport RunGoalConditioned(const ExperimentSpec& spec, const std::vector<Vec2>& goals);
MetricsReport RunGoalConditioned(const ExperimentSpec& spec);  // goals from the world
/// Runs spec.trials trials in each world and aggregates them; trial indices and
/// seeds run on across worlds.
MetricsReport RunGoalSuite(const ExperimentSpec& spec,
                           const std::vector<std::string>& world_files);
/// Adds one scripted pedestrian per trial; with no scenario only the agents in
/// the world file move.
MetricsReport RunDynamic(const ExperimentSpec& spec, std::optional<DynamicScenario> scenario);

/// Command of the policy-only arm: steer at the second waypoint at full speed.
ControlCommand BaselineCommand(const Trajectory& traj, const SafetyParams& safety);

inline constexpr const char* kTrajectoryLogHeader = "t,x,y,heading,v,omega,collided";
inline constexpr const char* kPlotHeader =
    "task,care,trials,distance_mean,distance_std,path_length_mean,path_length_std,"
    "completion_time_mean,completion_time_std,collision_count_mean,collision_trials,"
    "arrival_rate";

std::string FormatReport(const MetricsReport& report);       // summary + per-trial rows
std::string FormatPlotRow(const MetricsReport& report);      // one CSV row, no header
void EmitPlotData(const MetricsReport& report, const std::string& path);
void EmitPlotData(const std::vector<MetricsReport>& reports, const std::string& path);

/// Writes summary, plot data and per-trial logs under `dir` (created).
void WriteOutputs(const MetricsReport& report, const std::string& dir,
                  std::string_view prefix);

/// Recomputes path length, completion time, collision count and the
/// before-collision distance from a trajectory log.
TrialResult MetricsFromLog(std::string_view trajectory_log, double max_distance_m);

}  // namespace care::harness
