#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "care/sim/world.h"

namespace care::harness {

enum class DynamicScenario { kSideAppear, kBehindOvertake, kFrontApproach };

std::string_view ToString(DynamicScenario scenario);
DynamicScenario ParseDynamicScenario(std::string_view name);

inline constexpr double kArenaLength = 3.5;
inline constexpr double kArenaWidth = 2.8;
inline constexpr double kCorridorLength = 24.0;
inline constexpr double kCorridorHalfWidth = 2.5;
inline constexpr int kCorridorBoxes = 15;

/// Walled 3.5 m x 2.8 m arena holding `box_count` seeded boxes.
sim::WorldModel MakeExplorationWorld(std::uint64_t seed, int box_count = 10);

/// Walled 24 m corridor with goals along its centerline. With boxes, fifteen
/// of them are grouped into four to six seeded clusters at most two boxes
/// across. Each cluster straddles the centerline off-center, leaving the
/// wider side open, and keeps clear of the goals.
sim::WorldModel MakeCorridorWorld(std::uint64_t seed, bool with_boxes);

/// Shorter empty corridor used for the scripted-pedestrian scenarios.
sim::WorldModel MakeDynamicCorridorWorld();

/// Scripted pedestrian for one trial. Stop points are placed ahead of where a
/// robot leaving the start at full speed could be, so the pedestrian never
/// walks into a robot that is following the corridor.
sim::DynamicAgent MakeScenarioAgent(DynamicScenario scenario, const sim::WorldModel& world,
                                    double robot_speed, std::uint64_t trial_seed);

}  // namespace care::harness
