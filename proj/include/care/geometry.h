#pragma once

#include <cmath>
#include <numbers>

namespace care {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

constexpr double Dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
constexpr double Cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double Norm(const Vec2& v) { return std::hypot(v.x, v.y); }
inline double Distance(const Vec2& a, const Vec2& b) { return Norm(a - b); }

// Counterclockwise rotation about the origin.
inline Vec2 Rotate(const Vec2& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr bool operator==(const Point3&) const = default;
};

/// Planar pose in the world frame. Heading is measured counterclockwise from +x.
struct Pose2 {
  Vec2 position;
  double heading = 0.0;

  constexpr bool operator==(const Pose2&) const = default;

  Vec2 ToLocal(const Vec2& world) const { return Rotate(world - position, -heading); }
  Vec2 ToWorld(const Vec2& local) const { return position + Rotate(local, heading); }
};

/// Wraps an angle into (-pi, pi].
inline double WrapAngle(double angle) {
  double a = std::remainder(angle, 2.0 * std::numbers::pi);
  if (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

constexpr double Clip(double value, double lo, double hi) {
  return value < lo ? lo : (value > hi ? hi : value);
}

constexpr double DegToRad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace care
