// Command-line experiment runner.
//
//   care_cli explore --world W [--platform P] [--care|--no-care] [--trials N]
//                    [--seed S] [--config C] [--out DIR]
//   care_cli goal    --world W [--world W2 ...] ...
//   care_cli dynamic --world W --scenario NAME ...
//   care_cli replay  --frames DIR --trajectory T [--platform P] [--config C]
//                    [--out FILE]
#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "care/config.h"
#include "care/errors.h"
#include "care/harness/experiment.h"
#include "care/io.h"
#include "care/pipeline.h"
#include "care/sim/platform.h"

namespace {

using namespace care;

struct CommonOptions {
  std::vector<std::string> worlds;
  std::string platform = "locobot";
  bool care = true;
  int trials = 0;  // 0 selects the per-task default
  std::uint64_t seed = 0;
  std::string config;
  std::string out;
  double max_distance = 30.0;
  double max_time = 300.0;
};

void AddCommonOptions(CLI::App* cmd, CommonOptions& o, bool many_worlds) {
  auto* world = cmd->add_option("--world", o.worlds, "world file")->required();
  if (!many_worlds) world->expected(1);
  cmd->add_option("--platform", o.platform, "locobot | turtlebot4 | robomaster");
  cmd->add_flag("--care,!--no-care", o.care, "enable or disable the avoidance layer");
  cmd->add_option("--trials", o.trials, "trials per world")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--config", o.config, "key = value parameter file");
  cmd->add_option("--out", o.out, "output directory for report, plot data and logs");
  cmd->add_option("--max-distance", o.max_distance, "exploration distance cap (m)");
  cmd->add_option("--max-time", o.max_time, "per-trial time cap (s)");
}

CareConfig ResolveConfig(sim::Platform platform, const std::string& path) {
  const CareConfig base = sim::CareConfigFor(platform);
  return path.empty() ? base : LoadCareConfig(path, base);
}

harness::ExperimentSpec MakeSpec(harness::Task task, const CommonOptions& o,
                                 int default_trials) {
  harness::ExperimentSpec spec;
  spec.task = task;
  spec.world_file = o.worlds.front();
  spec.platform = sim::ParsePlatform(o.platform);
  spec.policy = sim::PolicyParams::For(task == harness::Task::kExploration
                                           ? sim::PolicyKind::kWanderer
                                           : sim::PolicyKind::kGoalSeeker);
  spec.care_enabled = o.care;
  spec.trials = o.trials > 0 ? o.trials : default_trials;
  spec.seed = o.seed;
  spec.max_distance_m = o.max_distance;
  spec.max_time_s = o.max_time;
  spec.care_config = ResolveConfig(spec.platform, o.config);
  spec.keep_logs = !o.out.empty();
  return spec;
}

void Emit(const harness::MetricsReport& report, const CommonOptions& o,
          std::string_view name) {
  std::cout << harness::FormatReport(report);
  if (!o.out.empty()) {
    harness::WriteOutputs(report, o.out,
                          fmt::format("{}_{}", name, o.care ? "care" : "nocare"));
  }
}

int RunReplay(const std::string& frames_dir, const std::string& trajectory_file,
              const std::string& platform_name, const std::string& config_file,
              double dt, const std::string& out) {
  const CareConfig cfg = ResolveConfig(sim::ParsePlatform(platform_name), config_file);
  const Trajectory traj = LoadTrajectory(trajectory_file);

  std::vector<std::filesystem::path> frames;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(frames_dir, ec)) {
    if (entry.is_regular_file()) frames.push_back(entry.path());
  }
  if (ec) throw InputError("cannot read frame directory '" + frames_dir + "'");
  if (frames.empty()) throw InputError("no depth frames in '" + frames_dir + "'");
  std::sort(frames.begin(), frames.end());

  std::string log = std::string(kDecisionLogHeader) + "\n";
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const DepthFrame frame = LoadDepthFrame(frames[i].string(), cfg.mount);
    log += FormatDecisionLogLine(static_cast<double>(i) * dt, CareStep(frame, traj, cfg)) + "\n";
  }
  if (out.empty()) {
    std::cout << log;
  } else {
    WriteTextFile(out, log);
  }
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reactive collision-avoidance experiments"};
  app.require_subcommand(1);

  CommonOptions explore_opts, goal_opts, dynamic_opts;
  auto* explore = app.add_subcommand("explore", "undirected exploration with the wanderer");
  AddCommonOptions(explore, explore_opts, false);

  auto* goal = app.add_subcommand("goal", "goal-conditioned navigation over one or more worlds");
  AddCommonOptions(goal, goal_opts, true);

  auto* dynamic = app.add_subcommand("dynamic", "scripted pedestrian scenarios");
  AddCommonOptions(dynamic, dynamic_opts, false);
  std::string scenario;
  dynamic->add_option("--scenario", scenario, "side_appear | behind_overtake | front_approach")
      ->required();

  auto* replay = app.add_subcommand("replay", "run the avoidance step over recorded frames");
  std::string frames_dir, trajectory_file, replay_platform = "locobot", replay_config,
                                           replay_out;
  double replay_dt = 0.1;
  replay->add_option("--frames", frames_dir, "directory of depth frame files")->required();
  replay->add_option("--trajectory", trajectory_file, "trajectory file")->required();
  replay->add_option("--platform", replay_platform, "locobot | turtlebot4 | robomaster");
  replay->add_option("--config", replay_config, "key = value parameter file");
  replay->add_option("--dt", replay_dt, "frame period (s)")->check(CLI::PositiveNumber);
  replay->add_option("--out", replay_out, "decision log file (stdout when absent)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (explore->parsed()) {
      const auto spec = MakeSpec(harness::Task::kExploration, explore_opts, 20);
      Emit(harness::RunExploration(spec), explore_opts, "explore");
    } else if (goal->parsed()) {
      const auto spec = MakeSpec(harness::Task::kGoalConditioned, goal_opts, 1);
      Emit(harness::RunGoalSuite(spec, goal_opts.worlds), goal_opts, "goal");
    } else if (dynamic->parsed()) {
      const auto spec = MakeSpec(harness::Task::kDynamicObstacle, dynamic_opts, 10);
      Emit(harness::RunDynamic(spec, harness::ParseDynamicScenario(scenario)), dynamic_opts,
           fmt::format("dynamic_{}", scenario));
    } else if (replay->parsed()) {
      return RunReplay(frames_dir, trajectory_file, replay_platform, replay_config, replay_dt,
                       replay_out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return EXIT_SUCCESS;
}
