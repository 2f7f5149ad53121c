#include "auvnav/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auvnav {

void RobotLimits::validate() const {
    if (v_min < 0.0 || v_min > v_max) throw std::invalid_argument("limits: need 0 <= v_min <= v_max");
    if (!(v_max > 0.0)) throw std::invalid_argument("limits: v_max must be > 0");
    if (!(omega_max > 0.0)) throw std::invalid_argument("limits: omega_max must be > 0");
    if (!(a_max > 0.0)) throw std::invalid_argument("limits: a_max must be > 0");
    if (!(alpha_max > 0.0)) throw std::invalid_argument("limits: alpha_max must be > 0");
    if (radius < 0.0) throw std::invalid_argument("limits: radius must be >= 0");
    if (safe_distance < 0.0) throw std::invalid_argument("limits: safe_distance must be >= 0");
}

void DynamicObstacle::validate() const {
    if (radius < 0.0) throw std::invalid_argument("obstacle: radius must be >= 0");
    if (t_start > t_end) throw std::invalid_argument("obstacle: t_start must be <= t_end");
}

RobotState step(const RobotState& state, VelocityCommand command, double dt,
                const RobotLimits& limits) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");

    const double v = std::clamp(std::clamp(command.v, state.v - limits.a_max * dt,
                                           state.v + limits.a_max * dt),
                                limits.v_min, limits.v_max);
    const double omega = std::clamp(std::clamp(command.omega, state.omega - limits.alpha_max * dt,
                                               state.omega + limits.alpha_max * dt),
                                    -limits.omega_max, limits.omega_max);

    RobotState next = state;
    next.x += v * std::cos(state.heading) * dt;
    next.y += v * std::sin(state.heading) * dt;
    next.heading = wrap_angle(state.heading + omega * dt);
    next.v = v;
    next.omega = omega;
    next.t += dt;
    return next;
}

std::optional<Vec2> obstacle_at(const DynamicObstacle& obs, double t) {
    if (t < obs.t_start || t > obs.t_end) return std::nullopt;
    return Vec2{obs.x0 + obs.vx * t, obs.y0 + obs.vy * t};
}

}  // namespace auvnav
