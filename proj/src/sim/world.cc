#include "care/sim/world.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <fmt/format.h>

#include "care/errors.h"
#include "care/io.h"

namespace care::sim {

namespace {

double SegmentDistance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = Dot(ab, ab);
  double s = len2 > 0.0 ? Dot(p - a, ab) / len2 : 0.0;
  s = Clip(s, 0.0, 1.0);
  return Distance(p, a + ab * s);
}

double SignedArea(const std::vector<Vec2>& v) {
  double area = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    area += Cross(v[i], v[(i + 1) % v.size()]);
  }
  return 0.5 * area;
}

}  // namespace

bool ConvexPolygon::Contains(const Vec2& p) const {
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = vertices[i];
    const Vec2& b = vertices[(i + 1) % n];
    if (Cross(b - a, p - a) < 0.0) return false;
  }
  return n >= 3;
}

double ConvexPolygon::DistanceTo(const Vec2& p) const {
  if (Contains(p)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, SegmentDistance(p, vertices[i], vertices[(i + 1) % n]));
  }
  return best;
}

ConvexPolygon MakeBox(const Vec2& center, double length, double width, double yaw) {
  const double hl = 0.5 * length;
  const double hw = 0.5 * width;
  ConvexPolygon box;
  for (const Vec2& corner : {Vec2{-hl, -hw}, Vec2{hl, -hw}, Vec2{hl, hw}, Vec2{-hl, hw}}) {
    box.vertices.push_back(center + Rotate(corner, yaw));
  }
  return box;
}

Vec2 DynamicAgent::PositionAt(double t) const {
  if (schedule.empty()) return {};
  if (t <= schedule.front().time) return schedule.front().position;
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    const ScheduleKey& a = schedule[i - 1];
    const ScheduleKey& b = schedule[i];
    if (t <= b.time) {
      const double span = b.time - a.time;
      if (span <= 0.0) return b.position;
      const double s = (t - a.time) / span;
      return a.position + (b.position - a.position) * s;
    }
  }
  return schedule.back().position;
}

void WorldModel::Validate() const {
  if (!(bounds.min.x < bounds.max.x && bounds.min.y < bounds.max.y)) {
    throw InputError("world bounds are empty");
  }
  for (const ConvexPolygon& poly : polygons) {
    const std::size_t n = poly.vertices.size();
    if (n < 3) throw InputError("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = poly.vertices[i];
      const Vec2& b = poly.vertices[(i + 1) % n];
      const Vec2& c = poly.vertices[(i + 2) % n];
      if (Cross(b - a, c - b) < 0.0) {
        throw InputError("polygon is not convex and counterclockwise");
      }
      if (!bounds.Contains(a)) throw InputError("polygon vertex outside world bounds");
    }
    if (!(SignedArea(poly.vertices) > 0.0)) throw InputError("degenerate polygon");
  }
  for (const Circle& c : circles) {
    if (!(c.radius > 0.0)) throw InputError("circle radius must be positive");
    if (!bounds.Contains(c.center)) throw InputError("circle center outside bounds");
  }
  for (const DynamicAgent& agent : agents) {
    if (!(agent.radius > 0.0)) throw InputError("agent radius must be positive");
    if (agent.schedule.empty()) throw InputError("agent schedule is empty");
    for (std::size_t i = 1; i < agent.schedule.size(); ++i) {
      if (agent.schedule[i].time < agent.schedule[i - 1].time) {
        throw InputError("agent schedule times must be non-decreasing");
      }
    }
  }
}

WorldModel ParseWorld(std::string_view text) {
  WorldModel world;
  bool has_bounds = false;
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::string keyword;
    if (!(in >> keyword)) continue;

    std::vector<double> values;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || !std::isfinite(v)) {
        throw InputError(fmt::format("world line {}: bad number '{}'", line_no, token));
      }
      values.push_back(v);
    }
    auto expect = [&](bool ok) {
      if (!ok) {
        throw InputError(
            fmt::format("world line {}: wrong argument count for '{}'", line_no, keyword));
      }
    };

    if (keyword == "bounds") {
      expect(values.size() == 4);
      world.bounds = {{values[0], values[1]}, {values[2], values[3]}};
      has_bounds = true;
    } else if (keyword == "seed") {
      expect(values.size() == 1 && values[0] >= 0);
      // Re-read the raw token so 64-bit seeds survive without rounding.
      std::istringstream raw(line);
      std::string kw;
      raw >> kw >> world.rng_seed;
    } else if (keyword == "polygon") {
      expect(values.size() >= 6 && values.size() % 2 == 0);
      ConvexPolygon poly;
      for (std::size_t i = 0; i < values.size(); i += 2) {
        poly.vertices.push_back({values[i], values[i + 1]});
      }
      if (SignedArea(poly.vertices) < 0.0) {
        std::reverse(poly.vertices.begin(), poly.vertices.end());
      }
      world.polygons.push_back(std::move(poly));
    } else if (keyword == "box") {
      expect(values.size() == 5);
      world.polygons.push_back(
          MakeBox({values[0], values[1]}, values[2], values[3], values[4]));
    } else if (keyword == "circle") {
      expect(values.size() == 3);
      world.circles.push_back({{values[0], values[1]}, values[2]});
    } else if (keyword == "agent") {
      expect(values.size() >= 4 && (values.size() - 1) % 3 == 0);
      DynamicAgent agent;
      agent.radius = values[0];
      for (std::size_t i = 1; i < values.size(); i += 3) {
        agent.schedule.push_back({{values[i], values[i + 1]}, values[i + 2]});
      }
      world.agents.push_back(std::move(agent));
    } else if (keyword == "start") {
      expect(values.size() == 3);
      world.start = Pose2{{values[0], values[1]}, values[2]};
    } else if (keyword == "goal") {
      expect(values.size() == 2);
      world.goals.push_back({values[0], values[1]});
    } else {
      throw InputError(fmt::format("world line {}: unknown keyword '{}'", line_no, keyword));
    }
  }
  if (!has_bounds) throw InputError("world file has no bounds line");
  world.Validate();
  return world;
}

WorldModel LoadWorld(const std::string& path) { return ParseWorld(ReadTextFile(path)); }

std::string FormatWorld(const WorldModel& world) {
  std::string out = fmt::format("bounds {} {} {} {}\nseed {}\n", world.bounds.min.x,
                                world.bounds.min.y, world.bounds.max.x,
                                world.bounds.max.y, world.rng_seed);
  if (world.start) {
    out += fmt::format("start {} {} {}\n", world.start->position.x,
                       world.start->position.y, world.start->heading);
  }
  for (const Vec2& g : world.goals) out += fmt::format("goal {} {}\n", g.x, g.y);
  for (const ConvexPolygon& poly : world.polygons) {
    out += "polygon";
    for (const Vec2& v : poly.vertices) out += fmt::format(" {} {}", v.x, v.y);
    out += '\n';
  }
  for (const Circle& c : world.circles) {
    out += fmt::format("circle {} {} {}\n", c.center.x, c.center.y, c.radius);
  }
  for (const DynamicAgent& a : world.agents) {
    out += fmt::format("agent {}", a.radius);
    for (const ScheduleKey& k : a.schedule) {
      out += fmt::format(" {} {} {}", k.position.x, k.position.y, k.time);
    }
    out += '\n';
  }
  return out;
}

}  // namespace care::sim
