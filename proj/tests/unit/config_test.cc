#include <numbers>

#include <gtest/gtest.h>

#include "care/config.h"
#include "care/errors.h"
#include "care/sim/platform.h"

namespace care {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(CareConfig, DefaultsCarryTheSharedParameters) {
  const CareConfig cfg = CareConfig::Defaults();
  EXPECT_DOUBLE_EQ(cfg.theta_clip, kPi / 4);
  EXPECT_DOUBLE_EQ(cfg.theta_thres(), kPi / 6);
  EXPECT_DOUBLE_EQ(cfg.tau_z, 1.0);
  EXPECT_DOUBLE_EQ(cfg.epsilon, -0.05);
  EXPECT_DOUBLE_EQ(cfg.safety.v_max, 0.2);
  EXPECT_DOUBLE_EQ(cfg.safety.omega_max, 0.8);
  EXPECT_EQ(cfg.direction_mode, DirectionMode::kRepel);
  EXPECT_NO_THROW(cfg.Validate());
}

TEST(CareConfig, DefaultBinCountIsOnePerTenColumns) {
  EXPECT_EQ(DefaultBinCount(320), 32);
  EXPECT_EQ(DefaultBinCount(321), 33);
  EXPECT_EQ(DefaultBinCount(640), 64);
  EXPECT_EQ(DefaultBinCount(1), 1);
}

TEST(CareConfig, ValidateRejectsBadValues) {
  auto with = [](auto mutate) {
    CareConfig cfg = CareConfig::Defaults();
    mutate(cfg);
    return cfg;
  };
  EXPECT_THROW(with([](CareConfig& c) { c.tau_z = 0.0; }).Validate(), InputError);
  EXPECT_THROW(with([](CareConfig& c) { c.bin_count = 0; }).Validate(), InputError);
  EXPECT_THROW(with([](CareConfig& c) { c.theta_clip = 4.0; }).Validate(), InputError);
  EXPECT_THROW(with([](CareConfig& c) { c.safety.theta_thres = kPi; }).Validate(), InputError);
  EXPECT_THROW(with([](CareConfig& c) { c.safety.v_fwd = 0.3; }).Validate(), InputError);
  EXPECT_THROW(with([](CareConfig& c) { c.safety.omega_max = 0.0; }).Validate(), InputError);
  // theta_thres above theta_clip is allowed.
  EXPECT_NO_THROW(with([](CareConfig& c) { c.safety.theta_thres = 1.0; }).Validate());
}

TEST(CareConfig, ParseOverridesOnlyNamedKeys) {
  const CareConfig base = CareConfig::Defaults();
  const CareConfig cfg = ParseCareConfig(
      "# tuned\n\ntau_z = 1.5\nbin_count=12\n direction_mode = paper_sign \n"
      "safety.k_omega = 3\nmount.depth_offset_m = -0.1\n",
      base);
  EXPECT_DOUBLE_EQ(cfg.tau_z, 1.5);
  EXPECT_EQ(cfg.bin_count, 12);
  EXPECT_EQ(cfg.direction_mode, DirectionMode::kPaperSign);
  EXPECT_DOUBLE_EQ(cfg.safety.k_omega, 3.0);
  EXPECT_DOUBLE_EQ(cfg.mount.depth_offset_m, -0.1);
  EXPECT_DOUBLE_EQ(cfg.theta_clip, base.theta_clip);
}

TEST(CareConfig, ParseRejectsUnknownKeysAndBadValues) {
  const CareConfig base = CareConfig::Defaults();
  EXPECT_THROW(ParseCareConfig("tau = 1\n", base), InputError);
  EXPECT_THROW(ParseCareConfig("tau_z 1\n", base), InputError);
  EXPECT_THROW(ParseCareConfig("tau_z = fast\n", base), InputError);
  EXPECT_THROW(ParseCareConfig("bin_count = 2.5\n", base), InputError);
  EXPECT_THROW(ParseCareConfig("direction_mode = attract\n", base), InputError);
  EXPECT_THROW(ParseCareConfig("tau_z = -1\n", base), InputError);
}

TEST(CareConfig, FormatParsesBackIdentically) {
  CareConfig cfg = sim::CareConfigFor(sim::Platform::kRobomaster);
  cfg.direction_mode = DirectionMode::kPaperSign;
  cfg.theta_clip = 0.3;
  const CareConfig back = ParseCareConfig(FormatCareConfig(cfg), CareConfig::Defaults());
  EXPECT_EQ(FormatCareConfig(back), FormatCareConfig(cfg));
  EXPECT_EQ(back.bin_count, 64);
  EXPECT_EQ(back.theta_clip, 0.3);
}

TEST(Platform, TableValues) {
  using sim::Platform;
  EXPECT_DOUBLE_EQ(sim::SpecFor(Platform::kLocobot).tau_z, 1.0);
  EXPECT_DOUBLE_EQ(sim::SpecFor(Platform::kLocobot).depth_offset_m, 0.05);
  EXPECT_DOUBLE_EQ(sim::SpecFor(Platform::kTurtlebot4).tau_z, 1.2);
  EXPECT_DOUBLE_EQ(sim::SpecFor(Platform::kTurtlebot4).depth_offset_m, 0.2);
  EXPECT_DOUBLE_EQ(sim::SpecFor(Platform::kRobomaster).tau_z, 1.0);
  EXPECT_DOUBLE_EQ(sim::SpecFor(Platform::kRobomaster).depth_offset_m, -0.1);
  EXPECT_DOUBLE_EQ(sim::SpecFor(Platform::kLocobot).FootprintRadius(), 0.1705);
  EXPECT_DOUBLE_EQ(sim::SpecFor(Platform::kRobomaster).FootprintRadius(), 0.16);
}

TEST(Platform, CareConfigUsesPlatformRangeOffsetAndBins) {
  const CareConfig cfg = sim::CareConfigFor(sim::Platform::kTurtlebot4);
  EXPECT_DOUBLE_EQ(cfg.tau_z, 1.2);
  EXPECT_DOUBLE_EQ(cfg.mount.depth_offset_m, 0.2);
  EXPECT_DOUBLE_EQ(cfg.mount.x_offset_m, -0.06);
  EXPECT_EQ(cfg.bin_count, 32);
  EXPECT_NO_THROW(cfg.Validate());
}

TEST(Platform, ParseByName) {
  EXPECT_EQ(sim::ParsePlatform("robomaster"), sim::Platform::kRobomaster);
  EXPECT_EQ(sim::ToString(sim::Platform::kTurtlebot4), "turtlebot4");
  EXPECT_THROW(sim::ParsePlatform("roomba"), InputError);
}

}  // namespace
}  // namespace care
