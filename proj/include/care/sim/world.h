#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "care/geometry.h"

namespace care::sim {

struct Rect {
  Vec2 min;
  Vec2 max;

  bool Contains(const Vec2& p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  bool operator==(const Rect&) const = default;
};

/// Convex polygon, vertices in counterclockwise order.
struct ConvexPolygon {
  std::vector<Vec2> vertices;

  bool Contains(const Vec2& p) const;
  double DistanceTo(const Vec2& p) const;  // 0 inside
  bool operator==(const ConvexPolygon&) const = default;
};

ConvexPolygon MakeBox(const Vec2& center, double length, double width, double yaw);

struct Circle {
  Vec2 center;
  double radius = 0.0;
  bool operator==(const Circle&) const = default;
};

struct ScheduleKey {
  Vec2 position;
  double time = 0.0;
  bool operator==(const ScheduleKey&) const = default;
};

/// Disc-shaped mover following a piecewise-linear schedule. It rests at the
/// first key before the schedule starts and at the last key after it ends.
struct DynamicAgent {
  double radius = 0.25;
  std::vector<ScheduleKey> schedule;

  Vec2 PositionAt(double t) const;
  Circle ShapeAt(double t) const { return {PositionAt(t), radius}; }
  bool operator==(const DynamicAgent&) const = default;
};

struct WorldModel {
  Rect bounds;
  std::vector<ConvexPolygon> polygons;
  std::vector<Circle> circles;
  std::vector<DynamicAgent> agents;
  std::uint64_t rng_seed = 0;
  std::optional<Pose2> start;
  std::vector<Vec2> goals;

  /// Static geometry inside bounds, convex CCW polygons, positive radii and
  /// time-monotone agent schedules. Throws InputError otherwise.
  void Validate() const;
  bool operator==(const WorldModel&) const = default;
};

// Line-oriented text format, '#' starts a comment:
//   bounds <xmin> <ymin> <xmax> <ymax>
//   seed <u64>
//   polygon <x1> <y1> <x2> <y2> <x3> <y3> ...
//   box <cx> <cy> <length> <width> <yaw>        (stored as a polygon)
//   circle <cx> <cy> <r>
//   agent <r> <x1> <y1> <t1> [<x2> <y2> <t2> ...]
//   start <x> <y> <heading>
//   goal <x> <y>
WorldModel ParseWorld(std::string_view text);
WorldModel LoadWorld(const std::string& path);
std::string FormatWorld(const WorldModel& world);

}  // namespace care::sim
