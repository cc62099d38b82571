#include "care/sim/simulator.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "care/sim/random.h"

namespace care::sim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double RayPolygon(const ConvexPolygon& poly, const Vec2& o, const Vec2& r) {
  if (poly.Contains(o)) return 0.0;
  double best = kInf;
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly.vertices[i];
    const Vec2 e = poly.vertices[(i + 1) % n] - a;
    const double denom = Cross(r, e);
    if (denom == 0.0) continue;
    const Vec2 ao = a - o;
    const double t = Cross(ao, e) / denom;
    const double s = Cross(ao, r) / denom;
    if (t >= 0.0 && s >= 0.0 && s <= 1.0) best = std::min(best, t);
  }
  return best;
}

double RayCircle(const Circle& c, const Vec2& o, const Vec2& r) {
  const Vec2 f = o - c.center;
  const double c_term = Dot(f, f) - c.radius * c.radius;
  if (c_term <= 0.0) return 0.0;
  const double b = Dot(f, r);
  const double disc = b * b - c_term;
  if (disc < 0.0) return kInf;
  const double t = -b - std::sqrt(disc);
  return t >= 0.0 ? t : kInf;
}

}  // namespace

RobotState RobotState::For(Platform platform, const Pose2& pose) {
  return {pose, SpecFor(platform).FootprintRadius(), platform};
}

double CastRay(const WorldModel& world, const Vec2& origin, const Vec2& direction,
               double t) {
  double best = kInf;
  for (const ConvexPolygon& poly : world.polygons) {
    best = std::min(best, RayPolygon(poly, origin, direction));
  }
  for (const Circle& c : world.circles) {
    best = std::min(best, RayCircle(c, origin, direction));
  }
  for (const DynamicAgent& agent : world.agents) {
    best = std::min(best, RayCircle(agent.ShapeAt(t), origin, direction));
  }
  return best;
}

DepthFrame RaycastDepth(const WorldModel& world, const RobotState& robot,
                        const CameraIntrinsics& intrinsics, const CameraMount& mount,
                        double t, const RaycastOptions& options) {
  intrinsics.Validate();
  DepthFrame frame;
  frame.intrinsics = intrinsics;
  frame.mount = mount;
  frame.depths.assign(static_cast<std::size_t>(intrinsics.width) * intrinsics.height,
                      kInvalidDepth);

  const Pose2& pose = robot.pose;
  const Vec2 origin = pose.ToWorld({mount.x_offset_m, 0.0});
  Rng jitter(options.jitter_seed);

  std::vector<double> column(intrinsics.width, kInvalidDepth);
  for (int u = 0; u < intrinsics.width; ++u) {
    // Camera X right maps to robot -y; a unit step in Z is one step forward.
    const double slope = (u - intrinsics.cx) / intrinsics.fx;
    const double norm = std::sqrt(1.0 + slope * slope);
    const Vec2 dir = Rotate({1.0 / norm, -slope / norm}, pose.heading);
    const double range = CastRay(world, origin, dir, t);
    if (!(range <= options.far_limit)) continue;
    double z = range / norm;
    if (options.jitter_m > 0.0 && z > 0.0) {
      z = std::max(z + jitter.Uniform(-options.jitter_m, options.jitter_m), 1e-6);
    }
    column[u] = z;
  }
  for (int v = 0; v < intrinsics.height; ++v) {
    std::copy(column.begin(), column.end(),
              frame.depths.begin() + static_cast<std::ptrdiff_t>(v) * intrinsics.width);
  }
  return frame;
}

RobotState StepKinematics(const RobotState& robot, const ControlCommand& cmd, double dt) {
  RobotState next = robot;
  const double turn = cmd.omega * dt;
  // Chord of the arc, taken along the mid-arc heading.
  const double chord =
      cmd.omega == 0.0 ? cmd.v * dt : 2.0 * cmd.v / cmd.omega * std::sin(0.5 * turn);
  const double mid = robot.pose.heading + 0.5 * turn;
  next.pose.position.x += chord * std::cos(mid);
  next.pose.position.y += chord * std::sin(mid);
  next.pose.heading = WrapAngle(robot.pose.heading + turn);
  return next;
}

double Clearance(const WorldModel& world, const Vec2& center, double radius, double t) {
  double best = kInf;
  for (const ConvexPolygon& poly : world.polygons) {
    best = std::min(best, poly.DistanceTo(center) - radius);
  }
  for (const Circle& c : world.circles) {
    best = std::min(best, Distance(center, c.center) - c.radius - radius);
  }
  for (const DynamicAgent& agent : world.agents) {
    const Circle c = agent.ShapeAt(t);
    best = std::min(best, Distance(center, c.center) - c.radius - radius);
  }
  return best;
}

bool CheckCollision(const WorldModel& world, const RobotState& robot, double t) {
  return Clearance(world, robot.pose.position, robot.footprint_radius, t) <=
         kContactTolerance;
}

}  // namespace care::sim
