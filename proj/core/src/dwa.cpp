#include "auvnav/dwa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auvnav {

void DwaConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("dwa: dt must be > 0");
    if (!(predict_horizon > 0.0)) throw std::invalid_argument("dwa: predict_horizon must be > 0");
    if (v_samples < 3 || omega_samples < 3)
        throw std::invalid_argument("dwa: sample counts must be >= 3");
    if (w_heading < 0.0 || w_clearance < 0.0 || w_velocity < 0.0)
        throw std::invalid_argument("dwa: weights must be >= 0");
    if (w_heading + w_clearance + w_velocity <= 0.0)
        throw std::invalid_argument("dwa: at least one weight must be > 0");
    if (!(clearance_cap > 0.0)) throw std::invalid_argument("dwa: clearance_cap must be > 0");
}

VelocityWindow dynamic_window(const RobotState& state, const RobotLimits& limits, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dynamic_window: dt must be > 0");
    VelocityWindow w;
    w.v_lo = std::max(state.v - limits.a_max * dt, limits.v_min);
    w.v_hi = std::min(state.v + limits.a_max * dt, limits.v_max);
    w.omega_lo = std::max(state.omega - limits.alpha_max * dt, -limits.omega_max);
    w.omega_hi = std::min(state.omega + limits.alpha_max * dt, limits.omega_max);
    return w;
}

Rollout rollout(const RobotState& state, VelocityCommand command, const DwaConfig& cfg,
                const RobotLimits& limits, std::span<const DynamicObstacle> obstacles) {
    Rollout r;
    r.command = command;

    const int steps = std::max(1, static_cast<int>(std::lround(cfg.predict_horizon / cfg.dt)));
    r.states.reserve(steps + 1);
    r.states.push_back(state);

    RobotState s = state;
    for (int k = 0; k < steps; ++k) {
        s.x += command.v * std::cos(s.heading) * cfg.dt;
        s.y += command.v * std::sin(s.heading) * cfg.dt;
        s.heading = wrap_angle(s.heading + command.omega * cfg.dt);
        s.v = command.v;
        s.omega = command.omega;
        s.t += cfg.dt;
        r.states.push_back(s);
    }

    double clearance = cfg.clearance_cap;
    for (const RobotState& sample : r.states) {
        for (const DynamicObstacle& obs : obstacles) {
            const auto pos = obstacle_at(obs, sample.t);
            if (!pos) continue;
            const double d = distance(sample.position(), *pos) - obs.radius - limits.radius;
            clearance = std::min(clearance, d);
        }
    }
    r.min_clearance = clearance;

    const double stoppable = std::sqrt(2.0 * limits.a_max * std::max(clearance, 0.0));
    r.admissible = clearance >= 0.0 && command.v <= stoppable + cfg.v_brake_slack;
    return r;
}

std::optional<DwaSelection> best_command(const RobotState& state, Vec2 goal_point,
                                         const VelocityWindow& window,
                                         std::span<const DynamicObstacle> obstacles,
                                         const DwaConfig& cfg, const RobotLimits& limits) {
    cfg.validate();
    if (window.v_lo > window.v_hi || window.omega_lo > window.omega_hi)
        throw std::invalid_argument("best_command: empty window");

    struct Candidate {
        Rollout roll;
        double heading = 0.0;
        double clearance = 0.0;
        double velocity = 0.0;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(static_cast<std::size_t>(cfg.v_samples) * cfg.omega_samples);

    auto lerp = [](double lo, double hi, int i, int n) {
        return n <= 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    };

    for (int i = 0; i < cfg.v_samples; ++i) {
        const double v = lerp(window.v_lo, window.v_hi, i, cfg.v_samples);
        for (int j = 0; j < cfg.omega_samples; ++j) {
            const double omega = lerp(window.omega_lo, window.omega_hi, j, cfg.omega_samples);
            Rollout r = rollout(state, {v, omega}, cfg, limits, obstacles);
            if (!r.admissible) continue;

            const RobotState& end = r.states.back();
            const double bearing =
                std::atan2(goal_point.y - end.y, goal_point.x - end.x);
            const double bearing_error = std::abs(wrap_angle(bearing - end.heading));

            Candidate c;
            c.heading = 1.0 - bearing_error / std::numbers::pi;
            c.clearance = std::min(r.min_clearance, cfg.clearance_cap) / cfg.clearance_cap;
            c.velocity = limits.v_max > 0.0 ? v / limits.v_max : 0.0;
            c.roll = std::move(r);
            candidates.push_back(std::move(c));
        }
    }
    if (candidates.empty()) return std::nullopt;

    double sum_h = 0.0, sum_c = 0.0, sum_v = 0.0;
    for (const Candidate& c : candidates) {
        sum_h += c.heading;
        sum_c += c.clearance;
        sum_v += c.velocity;
    }

    const Candidate* best = nullptr;
    double best_score = 0.0;
    for (const Candidate& c : candidates) {
        const double score = cfg.w_heading * (sum_h > 0.0 ? c.heading / sum_h : 0.0) +
                             cfg.w_clearance * (sum_c > 0.0 ? c.clearance / sum_c : 0.0) +
                             cfg.w_velocity * (sum_v > 0.0 ? c.velocity / sum_v : 0.0);
        if (!best) {
            best = &c;
            best_score = score;
            continue;
        }
        const VelocityCommand bc = best->roll.command, cc = c.roll.command;
        const bool better =
            score > best_score ||
            (score == best_score && (std::abs(cc.omega) < std::abs(bc.omega) ||
                                     (std::abs(cc.omega) == std::abs(bc.omega) && cc.v < bc.v)));
        if (better) {
            best = &c;
            best_score = score;
        }
    }

    DwaSelection sel;
    sel.command = best->roll.command;
    sel.rollout = best->roll;
    sel.score = best_score;
    return sel;
}

}  // namespace auvnav
