#include <filesystem>
#include <numbers>

#include <gtest/gtest.h>

#include "care/errors.h"
#include "care/harness/experiment.h"
#include "care/harness/scenarios.h"
#include "care/io.h"
#include "care/sim/simulator.h"

namespace care::harness {
namespace {

namespace fs = std::filesystem;

const std::string kWorlds = std::string(CARE_DATA_DIR) + "/worlds/";

std::string TempWorld(const std::string& name, const sim::WorldModel& world) {
  const fs::path path = fs::temp_directory_path() / ("care_harness_" + name + ".world");
  WriteTextFile(path.string(), sim::FormatWorld(world));
  return path.string();
}

sim::WorldModel OpenRoom() {
  sim::WorldModel w;
  w.bounds = {{-2, -3}, {12, 3}};
  w.start = Pose2{{0, 0}, 0};
  return w;
}

ExperimentSpec GoalSpec(const std::string& world, bool care) {
  ExperimentSpec spec;
  spec.task = Task::kGoalConditioned;
  spec.world_file = world;
  spec.platform = sim::Platform::kTurtlebot4;
  spec.care_enabled = care;
  spec.trials = 3;
  return spec;
}

TEST(Summarize, SampleStandardDeviation) {
  const MeanStd s = Summarize({2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0});
  EXPECT_DOUBLE_EQ(s.mean, 5.0);
  EXPECT_DOUBLE_EQ(s.std, std::sqrt(32.0 / 7.0));
  EXPECT_EQ(Summarize({3.0}).std, 0.0);
  EXPECT_EQ(Summarize({}).mean, 0.0);
}

TEST(Aggregate, CountsCollisionsAndArrivals) {
  std::vector<TrialResult> trials(4);
  trials[0].collision_count = 2;
  trials[1].arrived = true;
  trials[2].arrived = true;
  trials[2].collision_count = 1;
  for (int i = 0; i < 4; ++i) trials[i].index = i;
  const MetricsReport r = Aggregate(Task::kGoalConditioned, true, trials);
  EXPECT_EQ(r.trials, 4);
  EXPECT_EQ(r.total_collisions, 3);
  EXPECT_EQ(r.collision_trials, 2);
  EXPECT_DOUBLE_EQ(r.collision_count, 0.75);
  EXPECT_DOUBLE_EQ(r.arrival_rate, 0.5);
}

TEST(BaselineCommand, SteersAtTheSecondWaypoint) {
  const SafetyParams s = CareConfig::Defaults().safety;
  const ControlCommand c = BaselineCommand(Trajectory{{{1.0, 0.0}, {1.0, 0.1}}}, s);
  EXPECT_EQ(c.v, 0.2);
  EXPECT_DOUBLE_EQ(c.omega, 2.0 * std::atan2(0.1, 1.0));
  // Never suppresses forward motion, even for a target behind.
  EXPECT_EQ(BaselineCommand(Trajectory{{{-1.0, 0.0}, {-2.0, 0.0}}}, s).v, 0.2);
  EXPECT_EQ(BaselineCommand(Trajectory{{{0.0, 0.0}, {0.0, 0.0}}}, s),
            (ControlCommand{0.0, 0.0}));
  EXPECT_DOUBLE_EQ(BaselineCommand(Trajectory{{{0.0, 1.0}}}, s).omega, 0.8);
}

TEST(ExperimentSpec, Validation) {
  ExperimentSpec spec;
  spec.trials = 0;
  EXPECT_THROW(spec.Validate(), InputError);
  spec.trials = 1;
  spec.max_distance_m = 0.0;
  EXPECT_THROW(spec.Validate(), InputError);
  spec.max_distance_m = 30.0;
  EXPECT_NO_THROW(spec.Validate());
  EXPECT_EQ(spec.goal_radius, 0.3);
}

TEST(RunGoalConditioned, SingleGoalAheadInEmptyWorld) {
  ExperimentSpec spec = GoalSpec(TempWorld("open_room", OpenRoom()), true);
  const MetricsReport r = RunGoalConditioned(spec, {{2.0, 0.0}});
  EXPECT_EQ(r.arrival_rate, 1.0);
  EXPECT_EQ(r.collision_count, 0.0);
  EXPECT_GT(r.path_length.mean, 1.5);
  EXPECT_LT(r.completion_time.mean, 15.0);
}

TEST(RunGoalConditioned, GoalBehindImpassableWallTimesOut) {
  sim::WorldModel w = OpenRoom();
  w.polygons.push_back(sim::MakeBox({3.0, 0.0}, 0.2, 5.98, 0.0));
  w.goals = {{5.0, 0.0}};
  // Only the avoidance arm: without contact response the baseline drives
  // straight through the wall.
  ExperimentSpec spec = GoalSpec(TempWorld("walled", w), true);
  spec.max_time_s = 40.0;
  spec.trials = 2;
  const MetricsReport r = RunGoalConditioned(spec);
  EXPECT_EQ(r.arrival_rate, 0.0);
  for (const TrialResult& t : r.per_trial) {
    EXPECT_FALSE(t.arrived);
    EXPECT_NEAR(t.completion_time, 40.0, 1e-9);
  }
}

TEST(RunGoalConditioned, InputErrors) {
  ExperimentSpec spec = GoalSpec("/nonexistent.world", true);
  EXPECT_THROW(RunGoalConditioned(spec), InputError);
  spec.world_file = TempWorld("no_goals", OpenRoom());
  EXPECT_THROW(RunGoalConditioned(spec), InputError);
  spec.task = Task::kExploration;
  EXPECT_THROW(RunGoalConditioned(spec, {{1, 0}}), InputError);
}

TEST(RunExploration, OpenFloorReachesTheDistanceCap) {
  ExperimentSpec spec;
  spec.task = Task::kExploration;
  spec.world_file = kWorlds + "open_floor.world";
  spec.policy = sim::PolicyParams::For(sim::PolicyKind::kWanderer);
  spec.trials = 4;
  spec.max_distance_m = 5.0;
  for (bool care : {true, false}) {
    spec.care_enabled = care;
    const MetricsReport r = RunExploration(spec);
    EXPECT_EQ(r.distance_before_collision.mean, 5.0);
    EXPECT_EQ(r.distance_before_collision.std, 0.0);
    EXPECT_EQ(r.total_collisions, 0);
  }
}

TEST(RunExploration, NeedsTheWanderer) {
  ExperimentSpec spec;
  spec.task = Task::kExploration;
  spec.world_file = kWorlds + "open_floor.world";
  EXPECT_THROW(RunExploration(spec), InputError);
}

TEST(RunDynamic, AgentOutsideTheCorridorNeverCollides) {
  sim::WorldModel w = sim::LoadWorld(kWorlds + "dynamic_corridor.world");
  sim::DynamicAgent far;
  far.radius = 0.25;
  far.schedule = {{{-3.3, -3.0}, 0.0}, {{12.8, -3.0}, 60.0}, {{12.8, 3.0}, 120.0}};
  w.agents.push_back(far);
  ExperimentSpec spec;
  spec.task = Task::kDynamicObstacle;
  spec.world_file = TempWorld("far_agent", w);
  spec.platform = sim::Platform::kTurtlebot4;
  spec.trials = 2;
  for (bool care : {true, false}) {
    spec.care_enabled = care;
    const MetricsReport r = RunDynamic(spec, std::nullopt);
    EXPECT_EQ(r.total_collisions, 0) << care;
    EXPECT_EQ(r.arrival_rate, 1.0) << care;
  }
}

TEST(MetricsFromLog, RecomputesFromRows) {
  const std::string log = std::string(kTrajectoryLogHeader) +
                          "\n0,0,0,0,0,0,0\n0.1,0.3,0.4,0,0.2,0,0\n0.2,0.6,0.8,0,0.2,0,1\n"
                          "0.3,0.6,1.8,0,0.2,0,1\n0.4,0.6,2.8,0,0.2,0,0\n0.5,0.6,3.8,0,0.2,0,1\n";
  const TrialResult r = MetricsFromLog(log, 30.0);
  EXPECT_DOUBLE_EQ(r.path_length, 4.0);
  EXPECT_DOUBLE_EQ(r.distance_before_collision, 1.0);
  EXPECT_EQ(r.collision_count, 2);
  EXPECT_DOUBLE_EQ(r.completion_time, 0.5);
  EXPECT_DOUBLE_EQ(MetricsFromLog(log, 0.5).distance_before_collision, 0.5);
  EXPECT_THROW(MetricsFromLog("t,x\n", 1.0), InputError);
}

TEST(Outputs, WritesReportPlotAndLogs) {
  ExperimentSpec spec = GoalSpec(TempWorld("outputs", OpenRoom()), true);
  spec.trials = 2;
  const MetricsReport r = RunGoalConditioned(spec, {{1.0, 0.0}});
  const fs::path dir = fs::temp_directory_path() / "care_outputs_test";
  fs::remove_all(dir);
  WriteOutputs(r, dir.string(), "goal_care");
  EXPECT_TRUE(fs::exists(dir / "goal_care_report.csv"));
  EXPECT_TRUE(fs::exists(dir / "goal_care_trial000_trajectory.csv"));
  EXPECT_TRUE(fs::exists(dir / "goal_care_trial001_decisions.csv"));
  const std::string plot = ReadTextFile((dir / "goal_care_plot.csv").string());
  EXPECT_EQ(plot.rfind(kPlotHeader, 0), 0u);
  EXPECT_NE(plot.find("goal_conditioned,1,2,"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Scenarios, ExplorationArenaHoldsTenBoxes) {
  const sim::WorldModel w = MakeExplorationWorld(7);
  EXPECT_EQ(w.polygons.size(), 14u);  // four walls
  EXPECT_EQ(w.bounds, (sim::Rect{{0, 0}, {kArenaLength, kArenaWidth}}));
  EXPECT_EQ(sim::FormatWorld(w),
            sim::FormatWorld(sim::LoadWorld(kWorlds + "exploration_10box.world")));
  EXPECT_THROW(MakeExplorationWorld(1, 13), InputError);
}

TEST(Scenarios, CorridorHasFifteenBoxesClearOfGoals) {
  for (std::uint64_t seed = 101; seed <= 110; ++seed) {
    const sim::WorldModel w = MakeCorridorWorld(seed, true);
    EXPECT_EQ(w.polygons.size(), 4u + kCorridorBoxes) << seed;
    ASSERT_EQ(w.goals.size(), 6u);
    for (const Vec2& g : w.goals) EXPECT_GT(sim::Clearance(w, g, 0.0, 0.0), 0.5) << seed;
    // The end wall is 1 m behind the start; no box is closer.
    EXPECT_GE(sim::Clearance(w, w.start->position, 0.0, 0.0), 1.0 - 1e-12) << seed;
  }
  EXPECT_EQ(MakeCorridorWorld(0, false).polygons.size(), 4u);
}

TEST(Scenarios, ParseNames) {
  EXPECT_EQ(ParseDynamicScenario("front_approach"), DynamicScenario::kFrontApproach);
  EXPECT_EQ(ToString(DynamicScenario::kBehindOvertake), "behind_overtake");
  EXPECT_THROW(ParseDynamicScenario("dance"), InputError);
}

TEST(Scenarios, AgentsStopAheadOfTheFrontier) {
  const sim::WorldModel w = MakeDynamicCorridorWorld();
  for (auto s : {DynamicScenario::kSideAppear, DynamicScenario::kBehindOvertake,
                 DynamicScenario::kFrontApproach}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const sim::DynamicAgent a = MakeScenarioAgent(s, w, 0.2, seed);
      const sim::ScheduleKey& stop = a.schedule.back();
      EXPECT_GT(stop.position.x, w.start->position.x + 0.2 * stop.time + 1.0);
      EXPECT_LT(std::abs(stop.position.y), 0.11);
    }
  }
}

}  // namespace
}  // namespace care::harness
