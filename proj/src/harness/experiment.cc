#include "care/harness/experiment.h"

#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "care/errors.h"
#include "care/io.h"
#include "care/pipeline.h"
#include "care/sim/random.h"
#include "care/sim/simulator.h"

namespace care::harness {

using sim::RobotState;
using sim::WorldModel;

std::string_view ToString(Task task) {
  switch (task) {
    case Task::kExploration:
      return "exploration";
    case Task::kGoalConditioned:
      return "goal_conditioned";
    case Task::kDynamicObstacle:
      return "dynamic_obstacle";
  }
  return "exploration";
}

void ExperimentSpec::Validate() const {
  if (trials < 1) throw InputError("trials must be at least 1");
  if (!(max_distance_m > 0.0)) throw InputError("max_distance_m must be positive");
  if (!(max_time_s > 0.0)) throw InputError("max_time_s must be positive");
  if (!(dt > 0.0)) throw InputError("dt must be positive");
  if (!(goal_radius > 0.0)) throw InputError("goal radius must be positive");
  policy.Validate();
  ResolvedCareConfig().Validate();
}

CareConfig ExperimentSpec::ResolvedCareConfig() const {
  return care_config ? *care_config : sim::CareConfigFor(platform);
}

MeanStd Summarize(const std::vector<double>& values) {
  MeanStd out;
  if (values.empty()) return out;
  // Shifted by the first value, so identical values give that value exactly.
  const double shift = values.front();
  double sum = 0.0;
  for (double v : values) sum += v - shift;
  out.mean = shift + sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

MetricsReport Aggregate(Task task, bool care_enabled, std::vector<TrialResult> trials) {
  MetricsReport report;
  report.task = task;
  report.care_enabled = care_enabled;
  report.trials = static_cast<int>(trials.size());
  std::vector<double> distance, length, time;
  int arrivals = 0;
  for (const TrialResult& t : trials) {
    distance.push_back(t.distance_before_collision);
    length.push_back(t.path_length);
    time.push_back(t.completion_time);
    report.total_collisions += t.collision_count;
    if (t.collision_count > 0) ++report.collision_trials;
    if (t.arrived) ++arrivals;
  }
  report.distance_before_collision = Summarize(distance);
  report.path_length = Summarize(length);
  report.completion_time = Summarize(time);
  if (!trials.empty()) {
    report.collision_count = static_cast<double>(report.total_collisions) / trials.size();
    report.arrival_rate = static_cast<double>(arrivals) / trials.size();
  }
  report.per_trial = std::move(trials);
  return report;
}

ControlCommand BaselineCommand(const Trajectory& traj, const SafetyParams& safety) {
  const Vec2& target = traj[std::min<std::size_t>(1, traj.size() - 1)];
  if (target.x == 0.0 && target.y == 0.0) return {0.0, 0.0};
  return {safety.v_fwd, TurnRate(std::atan2(target.y, target.x), safety)};
}

namespace {

std::string TrajectoryLogLine(double t, const RobotState& robot, const ControlCommand& cmd,
                              bool collided) {
  return fmt::format("{},{},{},{},{},{},{}\n", t, robot.pose.position.x,
                     robot.pose.position.y, robot.pose.heading, cmd.v, cmd.omega,
                     collided ? 1 : 0);
}

Pose2 SampleFreePose(const WorldModel& world, double radius, sim::Rng& rng) {
  constexpr double kMargin = 0.25;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Vec2 p{rng.Uniform(world.bounds.min.x, world.bounds.max.x),
                 rng.Uniform(world.bounds.min.y, world.bounds.max.y)};
    const double heading = rng.Uniform(-std::numbers::pi, std::numbers::pi);
    if (sim::Clearance(world, p, radius, 0.0) >= kMargin) return {p, heading};
  }
  throw InputError("no collision-free start pose in world");
}

Pose2 JitteredStart(const Pose2& start, sim::Rng& rng) {
  constexpr double kLateral = 0.1;
  constexpr double kHeading = 0.1;
  const double lateral = rng.Uniform(-kLateral, kLateral);
  return {start.ToWorld({0.0, lateral}), start.heading + rng.Uniform(-kHeading, kHeading)};
}

std::uint64_t TrialSeed(const ExperimentSpec& spec, int trial) {
  return sim::DeriveSeed(spec.seed, static_cast<std::uint64_t>(trial));
}

// Stream ids under a trial seed. The start pose, policy and scenario draw from
// separate streams so the avoidance arm never perturbs world generation.
constexpr std::uint64_t kStartStream = 1;
constexpr std::uint64_t kPolicyStream = 2;
constexpr std::uint64_t kScenarioStream = 3;

}  // namespace

TrialResult RunEpisode(const ExperimentSpec& spec, const EpisodeSetup& setup, int index) {
  const CareConfig cfg = spec.ResolvedCareConfig();
  const CameraIntrinsics intrinsics = sim::IntrinsicsFor(spec.platform);
  const WorldModel& world = setup.world;
  const bool exploring = spec.task == Task::kExploration;

  sim::StubPolicy policy(spec.policy, setup.policy_seed);
  RobotState robot = setup.start;
  TrialResult result;
  result.index = index;

  bool in_contact = sim::CheckCollision(world, robot, 0.0);
  bool collided_once = false;
  double distance_at_collision = 0.0;
  std::size_t goal_index = 0;

  if (spec.keep_logs) {
    result.trajectory_log = std::string(kTrajectoryLogHeader) + "\n";
    result.trajectory_log += TrajectoryLogLine(0.0, robot, {}, in_contact);
    if (spec.care_enabled) result.decision_log = std::string(kDecisionLogHeader) + "\n";
  }

  for (long tick = 0;; ++tick) {
    const double t = tick * spec.dt;
    if (t >= spec.max_time_s) break;

    std::optional<Vec2> goal;
    if (goal_index < setup.goals.size()) goal = setup.goals[goal_index];
    const sim::PolicyOutput out = policy.Next(robot, goal);

    ControlCommand cmd;
    if (spec.care_enabled) {
      const DepthFrame frame = sim::RaycastDepth(world, robot, intrinsics, cfg.mount, t);
      const CareDecision decision = CareStep(frame, out.trajectory, cfg);
      cmd = decision.command;
      if (spec.keep_logs) result.decision_log += FormatDecisionLogLine(t, decision) + "\n";
    } else {
      cmd = BaselineCommand(out.trajectory, cfg.safety);
    }

    const RobotState next = sim::StepKinematics(robot, cmd, spec.dt);
    const double t_next = (tick + 1) * spec.dt;
    result.path_length += Distance(next.pose.position, robot.pose.position);
    robot = next;
    result.completion_time = t_next;

    const bool contact = sim::CheckCollision(world, robot, t_next);
    if (contact && !in_contact) {
      ++result.collision_count;
      if (!collided_once) {
        collided_once = true;
        distance_at_collision = result.path_length;
      }
    }
    in_contact = contact;
    if (spec.keep_logs) result.trajectory_log += TrajectoryLogLine(t_next, robot, cmd, contact);

    if (goal_index < setup.goals.size() &&
        Distance(robot.pose.position, setup.goals[goal_index]) <= spec.goal_radius) {
      ++goal_index;
      result.goals_reached = static_cast<int>(goal_index);
      if (goal_index == setup.goals.size()) {
        result.arrived = true;
        break;
      }
    }
    if (collided_once && setup.stop_at_first_collision) break;
    if (exploring && result.path_length >= spec.max_distance_m) break;
  }

  result.distance_before_collision =
      collided_once ? distance_at_collision : result.path_length;
  if (exploring) {
    result.distance_before_collision =
        std::min(result.distance_before_collision, spec.max_distance_m);
  }
  return result;
}

MetricsReport RunExploration(const ExperimentSpec& spec) {
  if (spec.task != Task::kExploration) throw InputError("spec task is not exploration");
  if (spec.policy.kind != sim::PolicyKind::kWanderer) {
    throw InputError("exploration runs the wanderer policy");
  }
  spec.Validate();
  const WorldModel world = sim::LoadWorld(spec.world_file);
  const double radius = sim::SpecFor(spec.platform).FootprintRadius();

  std::vector<TrialResult> trials;
  for (int i = 0; i < spec.trials; ++i) {
    const std::uint64_t seed = TrialSeed(spec, i);
    sim::Rng start_rng(sim::DeriveSeed(seed, kStartStream));
    EpisodeSetup setup;
    setup.world = world;
    const Pose2 pose = world.start ? *world.start : SampleFreePose(world, radius, start_rng);
    setup.start = RobotState::For(spec.platform, pose);
    setup.policy_seed = sim::DeriveSeed(seed, kPolicyStream);
    setup.stop_at_first_collision = true;
    trials.push_back(RunEpisode(spec, setup, i));
  }
  return Aggregate(spec.task, spec.care_enabled, std::move(trials));
}

namespace {

std::vector<TrialResult> RunGoalTrials(const ExperimentSpec& spec, const WorldModel& world,
                                       const std::vector<Vec2>& goals,
                                       std::optional<DynamicScenario> scenario,
                                       int first_index = 0) {
  if (goals.empty()) throw InputError("goal-conditioned runs need at least one goal");
  if (spec.policy.kind != sim::PolicyKind::kGoalSeeker) {
    throw InputError("goal-conditioned runs use the goal_seeker policy");
  }
  if (!world.start) throw InputError("world file has no start pose");
  spec.Validate();

  std::vector<TrialResult> trials;
  for (int i = first_index; i < first_index + spec.trials; ++i) {
    const std::uint64_t seed = TrialSeed(spec, i);
    sim::Rng start_rng(sim::DeriveSeed(seed, kStartStream));
    EpisodeSetup setup;
    setup.world = world;
    if (scenario) {
      setup.world.agents.push_back(MakeScenarioAgent(
          *scenario, world, spec.ResolvedCareConfig().safety.v_max,
          sim::DeriveSeed(seed, kScenarioStream)));
    }
    setup.start = RobotState::For(spec.platform, JitteredStart(*world.start, start_rng));
    setup.goals = goals;
    setup.policy_seed = sim::DeriveSeed(seed, kPolicyStream);
    trials.push_back(RunEpisode(spec, setup, i));
  }
  return trials;
}

}  // namespace

MetricsReport RunGoalConditioned(const ExperimentSpec& spec, const std::vector<Vec2>& goals) {
  if (spec.task != Task::kGoalConditioned) throw InputError("spec task is not goal_conditioned");
  const WorldModel world = sim::LoadWorld(spec.world_file);
  return Aggregate(spec.task, spec.care_enabled,
                   RunGoalTrials(spec, world, goals, std::nullopt));
}

MetricsReport RunGoalConditioned(const ExperimentSpec& spec) {
  if (spec.task != Task::kGoalConditioned) throw InputError("spec task is not goal_conditioned");
  const WorldModel world = sim::LoadWorld(spec.world_file);
  return Aggregate(spec.task, spec.care_enabled,
                   RunGoalTrials(spec, world, world.goals, std::nullopt));
}

MetricsReport RunGoalSuite(const ExperimentSpec& spec,
                           const std::vector<std::string>& world_files) {
  if (spec.task != Task::kGoalConditioned) throw InputError("spec task is not goal_conditioned");
  if (world_files.empty()) throw InputError("goal suite needs at least one world");
  std::vector<TrialResult> all;
  for (std::size_t w = 0; w < world_files.size(); ++w) {
    const WorldModel world = sim::LoadWorld(world_files[w]);
    std::vector<TrialResult> trials = RunGoalTrials(
        spec, world, world.goals, std::nullopt, static_cast<int>(w) * spec.trials);
    for (TrialResult& t : trials) all.push_back(std::move(t));
  }
  return Aggregate(spec.task, spec.care_enabled, std::move(all));
}

MetricsReport RunDynamic(const ExperimentSpec& spec, std::optional<DynamicScenario> scenario) {
  if (spec.task != Task::kDynamicObstacle) throw InputError("spec task is not dynamic_obstacle");
  const WorldModel world = sim::LoadWorld(spec.world_file);
  return Aggregate(spec.task, spec.care_enabled,
                   RunGoalTrials(spec, world, world.goals, scenario));
}

std::string FormatPlotRow(const MetricsReport& r) {
  return fmt::format("{},{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{},{:.6f}",
                     ToString(r.task), r.care_enabled ? 1 : 0, r.trials,
                     r.distance_before_collision.mean, r.distance_before_collision.std,
                     r.path_length.mean, r.path_length.std, r.completion_time.mean,
                     r.completion_time.std, r.collision_count, r.collision_trials,
                     r.arrival_rate);
}

std::string FormatReport(const MetricsReport& r) {
  std::string out = std::string(kPlotHeader) + "\n" + FormatPlotRow(r) + "\n\n";
  out += "trial,distance_before_collision,path_length,completion_time,collisions,arrived,"
         "goals_reached\n";
  for (const TrialResult& t : r.per_trial) {
    out += fmt::format("{},{:.6f},{:.6f},{:.6f},{},{},{}\n", t.index,
                       t.distance_before_collision, t.path_length, t.completion_time,
                       t.collision_count, t.arrived ? 1 : 0, t.goals_reached);
  }
  return out;
}

void EmitPlotData(const std::vector<MetricsReport>& reports, const std::string& path) {
  std::string out = std::string(kPlotHeader) + "\n";
  for (const MetricsReport& r : reports) out += FormatPlotRow(r) + "\n";
  WriteTextFile(path, out);
}

void EmitPlotData(const MetricsReport& report, const std::string& path) {
  EmitPlotData(std::vector<MetricsReport>{report}, path);
}

void WriteOutputs(const MetricsReport& report, const std::string& dir, std::string_view prefix) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory '" + dir + "'");
  const std::filesystem::path base(dir);
  WriteTextFile((base / fmt::format("{}_report.csv", prefix)).string(), FormatReport(report));
  EmitPlotData(report, (base / fmt::format("{}_plot.csv", prefix)).string());
  for (const TrialResult& t : report.per_trial) {
    if (!t.trajectory_log.empty()) {
      WriteTextFile((base / fmt::format("{}_trial{:03}_trajectory.csv", prefix, t.index)).string(),
                    t.trajectory_log);
    }
    if (!t.decision_log.empty()) {
      WriteTextFile((base / fmt::format("{}_trial{:03}_decisions.csv", prefix, t.index)).string(),
                    t.decision_log);
    }
  }
}

TrialResult MetricsFromLog(std::string_view trajectory_log, double max_distance_m) {
  std::istringstream in{std::string(trajectory_log)};
  std::string line;
  if (!std::getline(in, line) || line != kTrajectoryLogHeader) {
    throw InputError("trajectory log is missing its header");
  }
  TrialResult r;
  bool have_prev = false;
  bool prev_contact = false;
  bool collided_once = false;
  Vec2 prev;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double f[7];
    std::istringstream row(line);
    for (double& v : f) {
      std::string cell;
      if (!std::getline(row, cell, ',')) throw InputError("short trajectory log row");
      v = std::stod(cell);
    }
    const Vec2 pos{f[1], f[2]};
    const bool contact = f[6] != 0.0;
    if (have_prev) {
      r.path_length += Distance(pos, prev);
      if (contact && !prev_contact) {
        ++r.collision_count;
        if (!collided_once) {
          collided_once = true;
          r.distance_before_collision = r.path_length;
        }
      }
    }
    r.completion_time = f[0];
    prev = pos;
    prev_contact = contact;
    have_prev = true;
  }
  if (!collided_once) r.distance_before_collision = r.path_length;
  r.distance_before_collision = std::min(r.distance_before_collision, max_distance_m);
  return r;
}

}  // namespace care::harness
