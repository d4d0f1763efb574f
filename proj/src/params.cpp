#include "triphibian/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace triphibian {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double circular_distance(double a, double b) {
    double d = std::fmod(std::fabs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, int line) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw std::runtime_error("params: line " + std::to_string(line) +
                                 ": expected a number, got '" + text + "'");
    }
    return v;
}

std::vector<double> parse_array(const std::string& text, int line) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw std::runtime_error("params: line " + std::to_string(line) +
                                 ": expected [a, b, ...]");
    }
    std::vector<double> out;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_double(trim(item), line));
    }
    return out;
}

std::string parse_string(const std::string& text) {
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
        return text.substr(1, text.size() - 2);
    }
    return text;
}

Eigen::Vector3d to_vec3(const std::vector<double>& v, int line) {
    if (v.size() != 3) {
        throw std::runtime_error("params: line " + std::to_string(line) +
                                 ": expected exactly 3 components");
    }
    return {v[0], v[1], v[2]};
}

}  // namespace

void VehicleParams::validate() const {
    std::vector<std::string> errors;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) errors.push_back(what);
    };

    require(mass_total > 0.0, "mass_total must be positive");
    require(body_radius > 0.0, "body_radius must be positive");
    require(body_height > 0.0, "body_height must be positive");
    require(fan_count == 3, "fan_count must be 3");
    require(fan_max_thrust > 0.0, "fan_max_thrust must be positive");
    require(fan_mass >= 0.0, "fan_mass must be nonnegative");
    require(morph_joint_mass >= 0.0, "morph_joint_mass must be nonnegative");
    require(drag_to_thrust_ratio >= 0.0 && drag_to_thrust_ratio < 1.0,
            "drag_to_thrust_ratio must be in [0, 1)");
    require(stiction_moment >= 0.0, "stiction_moment must be nonnegative");
    require(gravity > 0.0, "gravity must be positive");
    require(fan_radial_arm > 0.0 && fan_radial_arm <= body_radius,
            "fan_radial_arm must be in (0, body_radius]");
    require(tail_arm > 0.0, "tail_arm must be positive");
    require(tail_servo_limit > 0.0 && tail_servo_limit <= std::numbers::pi,
            "tail_servo_limit must be in (0, pi]");
    require(morph_split > 0.0 && morph_split < 1.0,
            "morph_split must be in (0, 1)");
    require(morph_retracted_offset > 0.0 &&
                morph_retracted_offset + fan_housing_radius <= body_radius,
            "retracted fans must inscribe: morph_retracted_offset + "
            "fan_housing_radius <= body_radius");
    require(morph_extended_offset > body_radius,
            "morph_extended_offset must exceed body_radius");
    require(fan_housing_radius > 0.0, "fan_housing_radius must be positive");
    require(morph_rate > 0.0, "morph_rate must be positive");
    require(linear_damping >= 0.0, "linear_damping must be nonnegative");
    require(angular_damping >= 0.0, "angular_damping must be nonnegative");

    // 120-degree symmetry, checked as circular distances.
    for (int i = 0; i < 3; ++i) {
        double d = circular_distance(fan_azimuths[i], fan_azimuths[(i + 1) % 3]);
        if (std::fabs(d - kTwoPi / 3.0) > 1e-12) {
            errors.push_back("fan_azimuths must be pairwise 2*pi/3 apart");
            break;
        }
    }

    if (!errors.empty()) {
        std::string msg = "invalid vehicle parameters:";
        for (const auto& e : errors) msg += "\n  - " + e;
        throw std::invalid_argument(msg);
    }
}

VehicleParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("params: cannot open '" + path + "'");
    }

    VehicleParams p;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("params: line " + std::to_string(lineno) +
                                     ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        auto num = [&] { return parse_double(value, lineno); };
        auto arr = [&] { return parse_array(value, lineno); };

        if (key == "mass_total") {
            p.mass_total = num();
        } else if (key == "body_diameter") {
            p.body_radius = num() / 2.0;
        } else if (key == "body_height") {
            p.body_height = num();
        } else if (key == "fan_count") {
            p.fan_count = static_cast<int>(num());
        } else if (key == "fan_max_thrust") {
            p.fan_max_thrust = num();
        } else if (key == "fan_mass") {
            p.fan_mass = num();
        } else if (key == "morph_joint_mass") {
            p.morph_joint_mass = num();
        } else if (key == "fan_azimuths_deg") {
            auto v = arr();
            if (v.size() != 3) {
                throw std::runtime_error("params: line " + std::to_string(lineno) +
                                         ": fan_azimuths_deg needs 3 entries");
            }
            for (int i = 0; i < 3; ++i) {
                p.fan_azimuths[i] = v[i] * std::numbers::pi / 180.0;
            }
        } else if (key == "fan_radial_arm") {
            p.fan_radial_arm = num();
        } else if (key == "tail_arm") {
            p.tail_arm = num();
        } else if (key == "drag_to_thrust_ratio") {
            p.drag_to_thrust_ratio = num();
        } else if (key == "stiction_moment") {
            p.stiction_moment = num();
        } else if (key == "cg_offset") {
            p.cg_offset = to_vec3(arr(), lineno);
        } else if (key == "buoyancy_center_offset") {
            p.buoyancy_center_offset = to_vec3(arr(), lineno);
        } else if (key == "gravity") {
            p.gravity = num();
        } else if (key == "thrust_curve") {
            std::string s = parse_string(value);
            if (s == "linear") {
                p.thrust_curve = ThrustCurve::Linear;
            } else if (s == "quadratic") {
                p.thrust_curve = ThrustCurve::Quadratic;
            } else {
                throw std::runtime_error("params: line " + std::to_string(lineno) +
                                         ": thrust_curve must be linear or quadratic");
            }
        } else if (key == "tail_servo_limit_deg") {
            p.tail_servo_limit = num() * std::numbers::pi / 180.0;
        } else if (key == "morph_split") {
            p.morph_split = num();
        } else if (key == "morph_retracted_offset") {
            p.morph_retracted_offset = num();
        } else if (key == "morph_extended_offset") {
            p.morph_extended_offset = num();
        } else if (key == "fan_housing_radius") {
            p.fan_housing_radius = num();
        } else if (key == "morph_rate") {
            p.morph_rate = num();
        } else if (key == "tail_servo_pwm_base") {
            p.tail_servo_pwm_base = num();
        } else if (key == "linear_damping") {
            p.linear_damping = num();
        } else if (key == "angular_damping") {
            p.angular_damping = num();
        } else {
            throw std::runtime_error("params: line " + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
        }
    }

    p.validate();
    return p;
}

double fan_tangential_sign(int fan_id) {
    if (fan_id < 1 || fan_id > 3) {
        throw std::domain_error("fan_id must be 1, 2 or 3");
    }
    return fan_id == 1 ? 1.0 : -1.0;
}

double fan_arm(int fan_id, const VehicleParams& params) {
    if (fan_id < 1 || fan_id > 3) {
        throw std::domain_error("fan_id must be 1, 2 or 3");
    }
    return fan_id == 1 ? params.tail_arm : params.fan_radial_arm;
}

double thrust_from_throttle(double u, const VehicleParams& params) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw std::domain_error("throttle must be in [0, 1]");
    }
    switch (params.thrust_curve) {
        case ThrustCurve::Linear:
            return u * params.fan_max_thrust;
        case ThrustCurve::Quadratic:
            return u * u * params.fan_max_thrust;
    }
    return 0.0;
}

double inertia_about(const VehicleParams& params, InertiaAxis axis) {
    const double m = params.mass_total;
    const double r2 = params.body_radius * params.body_radius;
    const double h2 = params.body_height * params.body_height;
    const double spin = 0.5 * m * r2;
    switch (axis) {
        case InertiaAxis::Spin:
            return spin;
        case InertiaAxis::Diameter:
            return 0.25 * m * r2 + m * h2 / 12.0;
        case InertiaAxis::ContactLine:
            return spin + m * r2;
    }
    return 0.0;
}

}  // namespace triphibian
