#pragma once

#include <string>
#include <string_view>

#include "care/camera.h"
#include "care/depth_projection.h"
#include "care/repulsive_planner.h"

// Plain-text formats:
//   DF1 <width> <height> <fx> <fy> <cx> <cy>   then width*height depths, 0 = invalid
//   PC1 <count>                                then count lines "x y z"
//   TJ1 <K>                                    then K lines "x y"

namespace care {

DepthFrame ParseDepthFrame(std::string_view text, const CameraMount& mount);
DepthFrame LoadDepthFrame(const std::string& path, const CameraMount& mount);
std::string FormatDepthFrame(const DepthFrame& frame);

PointCloud ParsePointCloud(std::string_view text);
PointCloud LoadPointCloud(const std::string& path);
std::string FormatPointCloud(const PointCloud& cloud);

Trajectory ParseTrajectory(std::string_view text);
Trajectory LoadTrajectory(const std::string& path);
std::string FormatTrajectory(const Trajectory& traj);

/// Whole-file read; throws InputError when the file cannot be opened.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace care
