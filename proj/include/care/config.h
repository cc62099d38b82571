#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "care/camera.h"

namespace care {

// Sign convention for the per-obstacle force contribution.
enum class DirectionMode {
  kPaperSign,  // -(p - o) / |p - o|^4: points from waypoint toward obstacle.
  kRepel,      // (p - o) / |p - o|^4: points away from the obstacle.
};

std::string_view ToString(DirectionMode mode);
DirectionMode ParseDirectionMode(std::string_view text);

struct SafetyParams {
  double theta_thres = 0.0;  // rad; in-place rotation above this heading error
  double v_fwd = 0.2;        // m/s
  double v_max = 0.2;        // m/s
  double omega_max = 0.8;    // rad/s
  double k_omega = 2.0;      // 1/s; proportional heading gain

  void Validate() const;
};

struct CareConfig {
  double tau_z = 1.0;         // sensing range along the optical axis (m)
  double epsilon = -0.05;     // vertical margin, points need Y >= -epsilon (m)
  int bin_count = 32;         // lateral bins M
  double theta_clip = 0.0;    // rad
  DirectionMode direction_mode = DirectionMode::kRepel;
  SafetyParams safety;        // also holds theta_thres
  CameraMount mount;

  double theta_thres() const { return safety.theta_thres; }

  void Validate() const;

  /// Shared parameters (theta_clip = pi/4, theta_thres = pi/6, epsilon = -0.05,
  /// v_max = 0.2, omega_max = 0.8) with a LoCoBot-like mount.
  static CareConfig Defaults();
};

/// Bin count used when none is configured: one bin per 10 image columns.
int DefaultBinCount(int image_width);

/// Parses `key = value` lines on top of `base`. Blank lines and lines starting
/// with '#' are skipped. Unknown keys and malformed values throw InputError.
CareConfig ParseCareConfig(std::string_view text, const CareConfig& base);
CareConfig LoadCareConfig(const std::string& path, const CareConfig& base);
std::string FormatCareConfig(const CareConfig& cfg);

}  // namespace care
