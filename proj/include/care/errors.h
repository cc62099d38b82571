#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace care {

// Malformed or inconsistent input: bad dimensions, unparsable files, missing
// goals, invalid parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A waypoint coincides exactly with an obstacle point, where the inverse-cube
// force is undefined.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(std::size_t waypoint_index, std::size_t obstacle_index)
      : std::runtime_error("waypoint " + std::to_string(waypoint_index) +
                           " coincides with obstacle " +
                           std::to_string(obstacle_index)),
        waypoint_index_(waypoint_index),
        obstacle_index_(obstacle_index) {}

  std::size_t waypoint_index() const { return waypoint_index_; }
  std::size_t obstacle_index() const { return obstacle_index_; }

 private:
  std::size_t waypoint_index_;
  std::size_t obstacle_index_;
};

// Desired heading requested toward a waypoint located at the robot origin.
class DegenerateHeadingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace care
