#pragma once

#include <array>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace triphibian {

enum class ThrustCurve { Linear, Quadratic };

/**
 * Every physical constant used by the model, with nominal values for the
 * 3.88 kg / 41 cm prototype. All members are plain data; construct, adjust,
 * then call validate() (load_params does this for you).
 *
 * Fan layout (body frame, z = cylinder axis pointing out of the fan-bearing
 * top surface, x = forward): fan 1 at -60 deg, fan 3 at +60 deg, fan 2 at
 * 180 deg. Retracted thrust axes are tangential: fan 1 blows along the
 * +tangent (ccw yaw), fans 2 and 3 along the -tangent (cw yaw). Equal thrust
 * on fans 1+3 therefore sums to +x with zero net yaw.
 */
struct VehicleParams {
    double mass_total = 3.88;       // kg
    double body_radius = 0.205;     // m, from 41 cm hull diameter
    double body_height = 0.12;      // m
    int fan_count = 3;
    double fan_max_thrust = 9.32;   // N, 950 g per fan at g = 9.81
    double fan_mass = 0.077;        // kg per ducted fan
    double morph_joint_mass = 0.121;  // kg, whole expansion joint

    // Azimuth of each fan's mount, rad, pairwise separated by 2*pi/3.
    std::array<double, 3> fan_azimuths{-std::numbers::pi / 3.0,
                                       std::numbers::pi,
                                       std::numbers::pi / 3.0};

    double fan_radial_arm = 0.205;  // m, thrust application radius (fans 2, 3)
    double tail_arm = 0.205;        // m, yaw lever arm of the tail fan (fan 1)

    double drag_to_thrust_ratio = 0.02;  // k_tau, rotor reaction torque / thrust
    double stiction_moment = 0.05;       // N*m, yaw deadband threshold on ground

    // Displacements from the geometric center, body frame. The center of
    // gravity sits toward the cushion face (-z, away from the fans).
    Eigen::Vector3d cg_offset{0.0, 0.0, -0.02};
    Eigen::Vector3d buoyancy_center_offset{0.0, 0.0, 0.0};

    double gravity = 9.81;  // m/s^2

    ThrustCurve thrust_curve = ThrustCurve::Linear;
    double tail_servo_limit = std::numbers::pi / 2.0;  // rad, |tilt| bound

    // Morphable mechanism: translate for s in [0, morph_split], rotate 90 deg
    // for s in (morph_split, 1].
    double morph_split = 0.6;
    double morph_retracted_offset = 0.14;  // m, fan center radius at s=0
    double morph_extended_offset = 0.25;   // m, fan center radius at s=1
    double fan_housing_radius = 0.035;     // m, 70 mm duct
    double morph_rate = 0.5;               // deployment fraction per second
    double tail_servo_pwm_base = 1500.0;   // retracted-phase tail command

    // Optional velocity damping (surface/aerial). Zero = thrust-only model.
    double linear_damping = 0.0;   // N per m/s
    double angular_damping = 0.0;  // N*m per rad/s

    /// Throws std::invalid_argument listing every violated constraint.
    void validate() const;

    double weight() const { return mass_total * gravity; }
};

/**
 * Loads a flat key/value parameter file ('#' comments, `key = value`,
 * `key = [a, b, c]`). Unknown keys are an error; omitted keys keep their
 * defaults. The result is validated.
 */
VehicleParams load_params(const std::string& path);

/// +1 if the fan blows along the +tangent when retracted, -1 otherwise.
double fan_tangential_sign(int fan_id);

/// Thrust application radius of a fan (tail_arm for fan 1, fan_radial_arm
/// for fans 2 and 3).
double fan_arm(int fan_id, const VehicleParams& params);

/// Throttle fraction in [0,1] -> thrust in N. Out-of-range throws
/// std::domain_error. Monotone nondecreasing for both curve options.
double thrust_from_throttle(double u, const VehicleParams& params);

enum class InertiaAxis {
    Spin,         // cylinder axis:               1/2 M R^2
    Diameter,     // through the COM:             1/4 M R^2 + 1/12 M h^2
    ContactLine,  // parallel to spin, offset R:  spin + M R^2
};

double inertia_about(const VehicleParams& params, InertiaAxis axis);

}  // namespace triphibian
