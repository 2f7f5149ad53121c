#pragma once

#include <optional>
#include <span>
#include <vector>

#include "auvnav/kinematics.hpp"

namespace auvnav {

// Velocity-space rectangle reachable within one control period.
struct VelocityWindow {
    double v_lo = 0.0;
    double v_hi = 0.0;
    double omega_lo = 0.0;
    double omega_hi = 0.0;
};

struct DwaConfig {
    double dt = 0.1;              // control period and rollout sample step, s
    double predict_horizon = 3.0; // s
    int v_samples = 7;
    int omega_samples = 11;
    double w_heading = 1.0;
    double w_clearance = 2.0;
    double w_velocity = 1.0;
    double clearance_cap = 3.0;   // meters; clearance saturates here
    double v_brake_slack = 1e-9;  // m/s slack on the can-stop rule

    void validate() const;
};

// One simulated candidate trajectory. min_clearance is the worst surface
// clearance to any active obstacle over the horizon (robot radius counted),
// saturated at clearance_cap.
struct Rollout {
    VelocityCommand command;
    std::vector<RobotState> states;  // states[0] is the current state
    double min_clearance = 0.0;
    bool admissible = false;
};

struct DwaSelection {
    VelocityCommand command;
    Rollout rollout;
    double score = 0.0;
};

// [v -+ a_max*dt] x [omega -+ alpha_max*dt] intersected with the absolute
// limits.
VelocityWindow dynamic_window(const RobotState& state, const RobotLimits& limits, double dt);

// Hold `command` constant for the horizon, sampling every cfg.dt. Obstacles
// are evaluated at the matching future times. Inadmissible when the
// clearance ever goes negative or the command speed cannot be braked away
// within the remaining clearance (v <= sqrt(2 a_max clearance) + slack).
Rollout rollout(const RobotState& state, VelocityCommand command, const DwaConfig& cfg,
                const RobotLimits& limits, std::span<const DynamicObstacle> obstacles);

// Score every admissible rollout on the v x omega sample grid with
// G = w_h * heading + w_c * clearance + w_v * velocity, each term first
// normalized by its sum across the sampled set, and return the argmax.
// Ties break toward smaller |omega|, then smaller v. nullopt when every
// sampled command is inadmissible.
std::optional<DwaSelection> best_command(const RobotState& state, Vec2 goal_point,
                                         const VelocityWindow& window,
                                         std::span<const DynamicObstacle> obstacles,
                                         const DwaConfig& cfg, const RobotLimits& limits);

}  // namespace auvnav
