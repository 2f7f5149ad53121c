#pragma once

#include <optional>

#include "auvnav/geometry.hpp"

namespace auvnav {

// Planar unicycle state. heading is kept in (-pi, pi].
struct RobotState {
    double x = 0.0;        // meters
    double y = 0.0;        // meters
    double heading = 0.0;  // radians
    double v = 0.0;        // m/s
    double omega = 0.0;    // rad/s
    double t = 0.0;        // seconds

    Vec2 position() const { return {x, y}; }
};

struct RobotLimits {
    double v_min = 0.0;         // m/s
    double v_max = 0.1;         // m/s
    double omega_max = 0.5;     // rad/s
    double a_max = 0.05;        // m/s^2
    double alpha_max = 0.5;     // rad/s^2
    double radius = 0.2;        // meters, hull radius
    double safe_distance = 1.0; // meters, minimum allowed pass separation

    void validate() const;
};

struct VelocityCommand {
    double v = 0.0;
    double omega = 0.0;
};

// Constant-velocity mover, active over [t_start, t_end] in absolute sim time.
struct DynamicObstacle {
    double x0 = 0.0;
    double y0 = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    double radius = 0.3;
    double t_start = 0.0;
    double t_end = 1e18;

    void validate() const;
};

// One forward-Euler step. The command is first clipped to what the
// acceleration limits allow from the current (v, omega), intersected with
// the absolute bounds; position advances with the old heading.
RobotState step(const RobotState& state, VelocityCommand command, double dt,
                const RobotLimits& limits);

// Obstacle center at absolute time t, or nullopt outside its active window.
std::optional<Vec2> obstacle_at(const DynamicObstacle& obs, double t);

}  // namespace auvnav
