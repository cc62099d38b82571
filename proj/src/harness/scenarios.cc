#include "care/harness/scenarios.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "care/errors.h"
#include "care/sim/random.h"

namespace care::harness {

using sim::ConvexPolygon;
using sim::DynamicAgent;
using sim::MakeBox;
using sim::Rng;
using sim::WorldModel;

std::string_view ToString(DynamicScenario scenario) {
  switch (scenario) {
    case DynamicScenario::kSideAppear:
      return "side_appear";
    case DynamicScenario::kBehindOvertake:
      return "behind_overtake";
    case DynamicScenario::kFrontApproach:
      return "front_approach";
  }
  return "side_appear";
}

DynamicScenario ParseDynamicScenario(std::string_view name) {
  for (DynamicScenario s : {DynamicScenario::kSideAppear, DynamicScenario::kBehindOvertake,
                            DynamicScenario::kFrontApproach}) {
    if (ToString(s) == name) return s;
  }
  throw InputError("unknown dynamic scenario '" + std::string(name) + "'");
}

namespace {

ConvexPolygon AxisBox(double x0, double y0, double x1, double y1) {
  return {{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

// Separation of two disjoint convex polygons (0 when they overlap).
double PolygonGap(const ConvexPolygon& a, const ConvexPolygon& b) {
  double gap = std::numeric_limits<double>::infinity();
  for (const Vec2& v : a.vertices) gap = std::min(gap, b.DistanceTo(v));
  for (const Vec2& v : b.vertices) gap = std::min(gap, a.DistanceTo(v));
  return gap;
}

// Walls of a corridor spanning [x0, x1] with the given half width.
void AddCorridorWalls(WorldModel& world, double x0, double x1, double half_width) {
  constexpr double kThickness = 0.1;
  world.polygons.push_back(AxisBox(x0, half_width, x1, half_width + kThickness));
  world.polygons.push_back(AxisBox(x0, -half_width - kThickness, x1, -half_width));
  world.polygons.push_back(
      AxisBox(x0 - kThickness, -half_width - kThickness, x0, half_width + kThickness));
  world.polygons.push_back(
      AxisBox(x1, -half_width - kThickness, x1 + kThickness, half_width + kThickness));
}

constexpr double kClusterCell = 0.35;
// Lateral offset of a cluster center as a fraction of its lateral extent.
constexpr double kClusterOffsetMin = 0.25;
constexpr double kClusterOffsetMax = 0.45;
constexpr double kGoalClear = 0.8;     // box-to-goal clearance
constexpr double kStartClear = 1.5;
constexpr double kClusterGap = 1.5;    // between cluster x-extents

// One attempt at placing an n-box cluster; appends it to the world on success.
bool TryPlaceCluster(int n, WorldModel& world, std::vector<std::pair<double, double>>& used_x,
                     Rng& rng) {
  // Grid cells of the cluster shape, at most two boxes across.
  std::vector<std::pair<int, int>> cells;
  switch (rng.UniformInt(0, 3)) {
    case 0:  // zigzag along the corridor
      for (int i = 0; i < n; ++i) cells.push_back({i, i % 2});
      break;
    case 1:  // column along the corridor
      for (int i = 0; i < n; ++i) cells.push_back({i, 0});
      break;
    case 2:  // L shape
      cells.push_back({0, 1});
      for (int i = 0; i < n - 1; ++i) cells.push_back({i, 0});
      break;
    default:  // compact block
      for (int i = 0; i < n; ++i) cells.push_back({i / 2, i % 2});
      break;
  }
  int max_i = 0, max_j = 0;
  for (auto [i, j] : cells) {
    max_i = std::max(max_i, i);
    max_j = std::max(max_j, j);
  }
  const double extent_x = (max_i + 1) * kClusterCell;
  const double extent_y = (max_j + 1) * kClusterCell;
  // The centerline, where the goals lie, crosses the outer part of the cluster.
  const double side = rng.Uniform() < 0.5 ? -1.0 : 1.0;
  const double y0 = side * extent_y * rng.Uniform(kClusterOffsetMin, kClusterOffsetMax) -
                    0.5 * extent_y;
  const double x0 = rng.Uniform(2.0, kCorridorLength - 1.5 - extent_x);
  for (auto [a, b] : used_x) {
    if (x0 < b + kClusterGap && x0 + extent_x > a - kClusterGap) return false;
  }

  std::vector<ConvexPolygon> boxes;
  for (auto [i, j] : cells) {
    const Vec2 center{x0 + (i + 0.5) * kClusterCell + rng.Uniform(-0.02, 0.02),
                      y0 + (j + 0.5) * kClusterCell + rng.Uniform(-0.02, 0.02)};
    boxes.push_back(MakeBox(center, kClusterCell - 0.03, kClusterCell - 0.03,
                            rng.Uniform(-0.15, 0.15)));
  }
  for (const ConvexPolygon& box : boxes) {
    for (const Vec2& goal : world.goals) {
      if (box.DistanceTo(goal) < kGoalClear) return false;
    }
    if (box.DistanceTo(world.start->position) < kStartClear) return false;
  }

  used_x.push_back({x0, x0 + extent_x});
  for (ConvexPolygon& box : boxes) world.polygons.push_back(std::move(box));
  return true;
}

}  // namespace

WorldModel MakeExplorationWorld(std::uint64_t seed, int box_count) {
  constexpr double kWall = 0.05;
  constexpr int kColumns = 4;
  constexpr int kRows = 3;
  constexpr double kBoxGap = 0.42;  // a robot can squeeze through
  constexpr double kWallGap = 0.35;
  constexpr double kJitter = 0.06;
  if (box_count < 0 || box_count > kColumns * kRows) {
    throw InputError("arena holds at most 12 boxes");
  }

  WorldModel world;
  world.bounds = {{0.0, 0.0}, {kArenaLength, kArenaWidth}};
  world.rng_seed = seed;
  world.polygons.push_back(AxisBox(0.0, 0.0, kArenaLength, kWall));
  world.polygons.push_back(AxisBox(0.0, kArenaWidth - kWall, kArenaLength, kArenaWidth));
  world.polygons.push_back(AxisBox(0.0, kWall, kWall, kArenaWidth - kWall));
  world.polygons.push_back(
      AxisBox(kArenaLength - kWall, kWall, kArenaLength, kArenaWidth - kWall));

  // One box per cell of a jittered grid over the interior; a seeded shuffle
  // picks which cells stay empty.
  std::vector<int> cells(kColumns * kRows);
  for (int i = 0; i < kColumns * kRows; ++i) cells[i] = i;
  Rng rng(seed);
  for (int i = static_cast<int>(cells.size()) - 1; i > 0; --i) {
    std::swap(cells[i], cells[rng.UniformInt(0, i)]);
  }
  const double cell_x = (kArenaLength - 2.0 * kWall) / kColumns;
  const double cell_y = (kArenaWidth - 2.0 * kWall) / kRows;
  const std::size_t wall_count = world.polygons.size();
  int placed = 0;
  for (int c = 0; c < box_count; ++c) {
    const Vec2 cell_center{kWall + (cells[c] % kColumns + 0.5) * cell_x,
                           kWall + (cells[c] / kColumns + 0.5) * cell_y};
    for (int attempt = 0; attempt < 5000; ++attempt) {
      const Vec2 center = cell_center + Vec2{rng.Uniform(-kJitter, kJitter),
                                             rng.Uniform(-kJitter, kJitter)};
      const ConvexPolygon box = MakeBox(center, rng.Uniform(0.2, 0.28),
                                        rng.Uniform(0.2, 0.28),
                                        rng.Uniform(0.0, std::numbers::pi));
      bool ok = true;
      for (std::size_t i = 0; i < world.polygons.size() && ok; ++i) {
        ok = PolygonGap(box, world.polygons[i]) >= (i < wall_count ? kWallGap : kBoxGap);
      }
      if (!ok) continue;
      world.polygons.push_back(box);
      ++placed;
      break;
    }
  }
  if (placed < box_count) throw InputError("could not place arena boxes");
  world.Validate();
  return world;
}

WorldModel MakeCorridorWorld(std::uint64_t seed, bool with_boxes) {
  WorldModel world;
  world.bounds = {{-1.0, -kCorridorHalfWidth - 0.4},
                  {kCorridorLength + 1.0, kCorridorHalfWidth + 0.4}};
  world.rng_seed = seed;
  AddCorridorWalls(world, -0.5, kCorridorLength + 0.5, kCorridorHalfWidth);
  world.start = Pose2{{0.5, 0.0}, 0.0};
  world.goals = {{4.0, 0.0}, {8.0, 0.0}, {12.0, 0.0}, {16.0, 0.0}, {20.0, 0.0}, {23.5, 0.0}};
  if (!with_boxes) {
    world.Validate();
    return world;
  }

  Rng rng(seed);
  const int clusters = rng.UniformInt(4, 6);
  std::vector<int> sizes(clusters, 2);
  for (int extra = kCorridorBoxes - 2 * clusters; extra > 0; --extra) {
    int pick = rng.UniformInt(0, clusters - 1);
    while (sizes[pick] >= 4) pick = (pick + 1) % clusters;
    ++sizes[pick];
  }

  const std::size_t wall_count = world.polygons.size();
  bool complete = false;
  for (int restart = 0; !complete && restart < 200; ++restart) {
    world.polygons.resize(wall_count);
    std::vector<std::pair<double, double>> used_x;  // occupied x-extents
    complete = true;
    for (int c = 0; c < clusters && complete; ++c) {
      complete = false;
      for (int attempt = 0; attempt < 500 && !complete; ++attempt) {
        complete = TryPlaceCluster(sizes[c], world, used_x, rng);
      }
    }
  }
  if (!complete) throw InputError("could not place corridor clusters");
  world.Validate();
  return world;
}

WorldModel MakeDynamicCorridorWorld() {
  WorldModel world;
  world.bounds = {{-3.5, -kCorridorHalfWidth - 0.8}, {13.0, kCorridorHalfWidth + 0.8}};
  AddCorridorWalls(world, -3.0, 12.5, kCorridorHalfWidth);
  world.start = Pose2{{0.5, 0.0}, 0.0};
  world.goals = {{10.0, 0.0}};
  world.Validate();
  return world;
}

DynamicAgent MakeScenarioAgent(DynamicScenario scenario, const WorldModel& world,
                               double robot_speed, std::uint64_t trial_seed) {
  if (!world.start) throw InputError("scenario world needs a start pose");
  const double x_start = world.start->position.x;
  // Furthest a robot could have progressed along the corridor at time t.
  auto frontier = [&](double t) { return x_start + robot_speed * t; };

  Rng rng(trial_seed);
  DynamicAgent agent;
  agent.radius = 0.25;
  const double side = rng.Uniform() < 0.5 ? -1.0 : 1.0;
  const double stop_y = rng.Uniform(-0.1, 0.1);
  const double lead = rng.Uniform(1.1, 1.4);

  switch (scenario) {
    case DynamicScenario::kSideAppear: {
      // Steps out from behind a side wall and stops in the robot's path.
      const double hidden_y = side * (kCorridorHalfWidth + 0.4);
      const double t_start = rng.Uniform(8.0, 14.0);
      const double t_stop = t_start + std::abs(hidden_y - stop_y) / rng.Uniform(0.8, 1.0);
      const double x = frontier(t_stop) + lead;
      agent.schedule = {{{x, hidden_y}, 0.0}, {{x, hidden_y}, t_start}, {{x, stop_y}, t_stop}};
      break;
    }
    case DynamicScenario::kBehindOvertake: {
      // Passes the robot on one side, then cuts in and stops ahead of it.
      const double pass_y = side * 0.8;
      const double speed = rng.Uniform(0.55, 0.7);
      const Vec2 p0{x_start - 2.0, pass_y};
      const double t_cut = rng.Uniform(9.0, 11.0);
      const Vec2 p1{p0.x + speed * t_cut, pass_y};
      const double t_stop = t_cut + 2.0;
      const Vec2 p2{std::max(frontier(t_stop) + lead, p1.x), stop_y};
      agent.schedule = {{p0, 0.0}, {p1, t_cut}, {p2, t_stop}};
      break;
    }
    case DynamicScenario::kFrontApproach: {
      // Walks head-on toward the robot and stops in its path.
      const double speed = rng.Uniform(0.4, 0.6);
      const Vec2 p0{x_start + 11.0, stop_y};
      const double t_stop = (p0.x - x_start - lead) / (speed + robot_speed);
      agent.schedule = {{p0, 0.0}, {{frontier(t_stop) + lead, stop_y}, t_stop}};
      break;
    }
  }
  return agent;
}

}  // namespace care::harness
