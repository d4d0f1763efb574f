#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace triphibian {

/// Locomotion medium the vehicle currently operates in.
enum class Mode { Land, Surface, Aerial };

const char* to_string(Mode mode);
Mode mode_from_string(const std::string& name);

/**
 * Pose and velocities of the vehicle body.
 *
 * Conventions: world frame is x/y horizontal, z up. `orientation` maps
 * body -> world. `angular_velocity` is expressed in the body frame.
 * Land and surface modes use reduced coordinates internally; this type is
 * the common container they pack into (see dynamics.hpp for the packing).
 */
struct RigidState {
    Eigen::Vector3d position{0.0, 0.0, 0.0};
    Eigen::Quaterniond orientation{1.0, 0.0, 0.0, 0.0};
    Eigen::Vector3d linear_velocity{0.0, 0.0, 0.0};
    Eigen::Vector3d angular_velocity{0.0, 0.0, 0.0};

    bool finite() const;
};

/**
 * Low-level actuator setpoints, one slot per Table-style actuation unit:
 * three fan throttles (P1 P2 P3), the tail servo (T1) and the transition
 * servo (S1).
 *
 * `tail_servo` is the tail tilt angle in radians; positive angles tilt the
 * tail fan's thrust toward its positive tangential direction (yaw-positive).
 * `tail_trim` set means the tail angle is to be solved for yaw balance each
 * step instead of taken verbatim. `transition_servo` is the commanded
 * deployment-fraction target in [0, 1].
 */
struct ActuatorCommand {
    std::array<double, 3> throttle{0.0, 0.0, 0.0};
    double tail_servo = 0.0;
    bool tail_trim = false;
    double transition_servo = 0.0;
};

}  // namespace triphibian
