#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "care/errors.h"
#include "care/repulsive_planner.h"
#include "generators.h"
#include "oracles.h"

namespace care {
namespace {

constexpr double kPi = std::numbers::pi;

Trajectory Traj(std::vector<Vec2> w) { return Trajectory{std::move(w)}; }

TEST(RepulsiveForce, NoObstaclesGivesZero) {
  EXPECT_EQ(RepulsiveForce({1.0, 2.0}, std::span<const Vec2>{}, DirectionMode::kRepel),
            (Vec2{0.0, 0.0}));
}

TEST(RepulsiveForce, SymmetricPairCancelsLaterally) {
  const std::vector<Vec2> obs = {{1.0, 1.0}, {1.0, -1.0}};
  EXPECT_EQ(RepulsiveForce({1.0, 0.0}, obs, DirectionMode::kRepel).y, 0.0);
  EXPECT_EQ(RepulsiveForce({1.0, 0.0}, obs, DirectionMode::kPaperSign).y, 0.0);
}

TEST(RepulsiveForce, SingleObstacleAtHalfMeter) {
  const std::vector<Vec2> obs = {{0.5, 0.0}};
  const Vec2 f = RepulsiveForce({0.0, 0.0}, obs, DirectionMode::kRepel);
  const auto oracle = testing::OracleForceAt({0.0, 0.0}, obs, DirectionMode::kRepel);
  EXPECT_NEAR(f.x, static_cast<double>(oracle.x), 1e-12);
  EXPECT_EQ(f.x, -8.0);
  EXPECT_EQ(f.y, 0.0);
  const Vec2 g = RepulsiveForce({0.0, 0.0}, obs, DirectionMode::kPaperSign);
  EXPECT_EQ(g.x, 8.0);
}

TEST(RepulsiveForce, CoincidentObstacleIsSingular) {
  const std::vector<Vec2> obs = {{2.0, 0.0}, {0.3, 0.4}};
  try {
    EstimateRepulsiveDirection(Traj({{0.1, 0.0}, {0.3, 0.4}}), obs, kPi / 4,
                               DirectionMode::kRepel);
    FAIL() << "expected SingularityError";
  } catch (const SingularityError& e) {
    EXPECT_EQ(e.waypoint_index(), 1u);
    EXPECT_EQ(e.obstacle_index(), 1u);
  }
}

TEST(RepulsiveForce, TinyDistancesAreClampedAndFinite) {
  const std::vector<Vec2> obs = {{1e-9, 0.0}};
  const Vec2 f = RepulsiveForce({0.0, 0.0}, obs, DirectionMode::kRepel);
  EXPECT_TRUE(std::isfinite(f.x));
  EXPECT_DOUBLE_EQ(f.x, -1e18);
}

TEST(EstimateRepulsiveDirection, NoObstaclesMeansNoRotation) {
  const RepulsiveResult r = EstimateRepulsiveDirection(Traj({{0.2, 0.0}, {0.4, 0.1}}), {},
                                                       kPi / 4, DirectionMode::kRepel);
  EXPECT_EQ(r.theta_rep, 0.0);
  EXPECT_EQ(r.theta_rot, 0.0);
  EXPECT_EQ(r.dominant_index, 0u);
  ASSERT_EQ(r.force_per_waypoint.size(), 2u);
}

TEST(EstimateRepulsiveDirection, QuarterTurnIsClippedToThetaClip) {
  const std::vector<Vec2> obs = {{1.0, -1.0}};
  const RepulsiveResult r =
      EstimateRepulsiveDirection(Traj({{1.0, 0.0}}), obs, kPi / 4, DirectionMode::kRepel);
  EXPECT_DOUBLE_EQ(r.theta_rep, kPi / 2);
  EXPECT_DOUBLE_EQ(r.theta_rot, kPi / 4);
}

TEST(EstimateRepulsiveDirection, SingleWaypointIsUsedDirectly) {
  const std::vector<Vec2> obs = {{0.8, 0.3}};
  const RepulsiveResult r =
      EstimateRepulsiveDirection(Traj({{0.5, 0.0}}), obs, kPi / 4, DirectionMode::kRepel);
  EXPECT_EQ(r.dominant_index, 0u);
  EXPECT_DOUBLE_EQ(r.theta_rep, std::atan2(-0.3, -0.3));
}

TEST(EstimateRepulsiveDirection, NearestWaypointDominates) {
  const std::vector<Vec2> obs = {{1.0, 0.2}};
  const RepulsiveResult r = EstimateRepulsiveDirection(
      Traj({{0.25, 0}, {0.5, 0}, {0.75, 0}, {1.0, 0}, {1.25, 0}}), obs, kPi / 4,
      DirectionMode::kRepel);
  EXPECT_EQ(r.dominant_index, 3u);
  EXPECT_DOUBLE_EQ(r.theta_rep, -kPi / 2);
  EXPECT_DOUBLE_EQ(r.theta_rot, -kPi / 4);
}

TEST(EstimateRepulsiveDirection, TiesGoToTheSmallestIndex) {
  const std::vector<Vec2> obs = {{1.0, 0.0}};
  const RepulsiveResult r = EstimateRepulsiveDirection(
      Traj({{0.5, 0.0}, {1.5, 0.0}, {1.0, 0.5}}), obs, kPi / 4, DirectionMode::kRepel);
  EXPECT_EQ(r.dominant_index, 0u);
}

TEST(EstimateRepulsiveDirection, RandomEightWaypointArgmaxMatchesOracle) {
  testing::Gen gen(11);
  for (int c = 0; c < 50; ++c) {
    const Trajectory traj = gen.RandomTrajectory(8);
    const auto obs = gen.ObstaclesAround(traj, gen.Int(1, 20), 0.02);
    const RepulsiveResult r =
        EstimateRepulsiveDirection(traj, obs, kPi / 4, DirectionMode::kRepel);
    const auto oracle = testing::OracleDominant(traj.waypoints, obs, DirectionMode::kRepel);
    EXPECT_EQ(r.dominant_index, oracle.dominant) << c;
  }
}

TEST(EstimateRepulsiveDirection, ObstacleMapOverloadUsesConfig) {
  ObstacleMap map;
  map.obstacles.push_back({0.0, 0.0, {0.6, -0.1}, 0, 0});
  CareConfig cfg = CareConfig::Defaults();
  cfg.direction_mode = DirectionMode::kPaperSign;
  cfg.theta_clip = 0.1;
  const RepulsiveResult r = EstimateRepulsiveDirection(Traj({{0.5, 0.0}}), map, cfg);
  EXPECT_DOUBLE_EQ(r.theta_rep, std::atan2(-0.1, 0.1));
  EXPECT_DOUBLE_EQ(r.theta_rot, -0.1);
}

TEST(EstimateRepulsiveDirection, RejectsEmptyTrajectory) {
  EXPECT_THROW(EstimateRepulsiveDirection(Trajectory{}, {}, kPi / 4, DirectionMode::kRepel),
               InputError);
}

TEST(RotateTrajectory, ZeroIsIdentity) {
  const Trajectory t = Traj({{0.3, -0.2}, {1.0, 0.7}});
  EXPECT_EQ(RotateTrajectory(t, 0.0), t);
}

TEST(RotateTrajectory, QuarterTurn) {
  const Trajectory r = RotateTrajectory(Traj({{1.0, 0.0}}), kPi / 2);
  EXPECT_NEAR(r[0].x, 0.0, 1e-12);
  EXPECT_NEAR(r[0].y, 1.0, 1e-12);
}

TEST(RotateTrajectory, PreservesNormsAndCount) {
  testing::Gen gen(3);
  const Trajectory t = gen.RandomTrajectory(8);
  const Trajectory r = RotateTrajectory(t, 0.7);
  ASSERT_EQ(r.size(), t.size());
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_NEAR(Norm(r[k]), Norm(t[k]), 1e-12);
}

}  // namespace
}  // namespace care
