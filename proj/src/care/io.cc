#include "care/io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "care/errors.h"

namespace care {

namespace {

// Whitespace-separated token stream with typed, checked reads.
class TokenReader {
 public:
  TokenReader(std::string_view text, std::string_view what)
      : in_(std::string(text)), what_(what) {}

  std::string Word() {
    std::string w;
    if (!(in_ >> w)) Fail("unexpected end of input");
    return w;
  }

  double Number() {
    const std::string w = Word();
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(w, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != w.size()) Fail("bad number '" + w + "'");
    return value;
  }

  long long Count() {
    const double d = Number();
    if (d < 0 || d != static_cast<double>(static_cast<long long>(d))) {
      Fail("bad count");
    }
    return static_cast<long long>(d);
  }

  void ExpectEnd() {
    std::string extra;
    if (in_ >> extra) Fail("trailing data '" + extra + "'");
  }

  [[noreturn]] void Fail(const std::string& msg) const {
    throw InputError(std::string(what_) + ": " + msg);
  }

 private:
  std::istringstream in_;
  std::string_view what_;
};

}  // namespace

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("write to '" + path + "' failed");
}

DepthFrame ParseDepthFrame(std::string_view text, const CameraMount& mount) {
  TokenReader r(text, "depth frame");
  if (r.Word() != "DF1") r.Fail("missing DF1 header");
  DepthFrame frame;
  frame.mount = mount;
  frame.intrinsics.width = static_cast<int>(r.Count());
  frame.intrinsics.height = static_cast<int>(r.Count());
  frame.intrinsics.fx = r.Number();
  frame.intrinsics.fy = r.Number();
  frame.intrinsics.cx = r.Number();
  frame.intrinsics.cy = r.Number();
  frame.intrinsics.Validate();
  const auto n = static_cast<std::size_t>(frame.intrinsics.width) * frame.intrinsics.height;
  frame.depths.reserve(n);
  for (std::size_t i = 0; i < n; ++i) frame.depths.push_back(r.Number());
  r.ExpectEnd();
  frame.Validate();
  return frame;
}

DepthFrame LoadDepthFrame(const std::string& path, const CameraMount& mount) {
  return ParseDepthFrame(ReadTextFile(path), mount);
}

std::string FormatDepthFrame(const DepthFrame& frame) {
  const CameraIntrinsics& k = frame.intrinsics;
  std::string out = fmt::format("DF1 {} {} {} {} {} {}\n", k.width, k.height, k.fx,
                                k.fy, k.cx, k.cy);
  for (int v = 0; v < k.height; ++v) {
    for (int u = 0; u < k.width; ++u) {
      if (u > 0) out += ' ';
      out += fmt::format("{}", frame.At(u, v));
    }
    out += '\n';
  }
  return out;
}

PointCloud ParsePointCloud(std::string_view text) {
  TokenReader r(text, "point cloud");
  if (r.Word() != "PC1") r.Fail("missing PC1 header");
  const long long n = r.Count();
  PointCloud cloud;
  cloud.points.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    Point3 p;
    p.x = r.Number();
    p.y = r.Number();
    p.z = r.Number();
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      r.Fail("non-finite point");
    }
    cloud.points.push_back(p);
  }
  r.ExpectEnd();
  return cloud;
}

PointCloud LoadPointCloud(const std::string& path) {
  return ParsePointCloud(ReadTextFile(path));
}

std::string FormatPointCloud(const PointCloud& cloud) {
  std::string out = fmt::format("PC1 {}\n", cloud.points.size());
  for (const Point3& p : cloud.points) out += fmt::format("{} {} {}\n", p.x, p.y, p.z);
  return out;
}

Trajectory ParseTrajectory(std::string_view text) {
  TokenReader r(text, "trajectory");
  if (r.Word() != "TJ1") r.Fail("missing TJ1 header");
  const long long k = r.Count();
  Trajectory traj;
  for (long long i = 0; i < k; ++i) {
    const double x = r.Number();
    const double y = r.Number();
    traj.waypoints.push_back({x, y});
  }
  r.ExpectEnd();
  traj.Validate();
  return traj;
}

Trajectory LoadTrajectory(const std::string& path) {
  return ParseTrajectory(ReadTextFile(path));
}

std::string FormatTrajectory(const Trajectory& traj) {
  std::string out = fmt::format("TJ1 {}\n", traj.size());
  for (const Vec2& p : traj.waypoints) out += fmt::format("{} {}\n", p.x, p.y);
  return out;
}

}  // namespace care
