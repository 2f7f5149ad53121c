#pragma once

#include <optional>

#include "auvnav/kinematics.hpp"

namespace auvnav {

enum class Encounter { None, Lateral, HeadOn };

// Listed in escalation order; higher wins when several obstacles demand
// different responses.
enum class ManeuverMode { TrackPath, YieldSlow, Overtake, Detour };

struct AvoidanceConfig {
    double theta_parallel_deg = 30.0;  // lateral band boundary
    double yield_margin_s = 2.0;       // obstacle must clear this much earlier
    double forecast_horizon_s = 60.0;
    double yield_speed_scale = 0.4;
    double on_course_width = 1.0;      // meters, head-on lateral tolerance
    double v_nominal_frac = 0.5;       // of v_max; timing floor for a slow AUV

    void validate() const;
};

// Predicted encounter with one obstacle. The virtual point is where the
// AUV's course line and the obstacle's track cross (or the closest point on
// course for parallel/stationary geometry); t_auv and t_obs are each body's
// travel time to it and separation_at_pass the body distance when the AUV
// arrives there. threat is decided by the minimum separation the two
// straight-line tracks ever reach inside the forecast horizon.
struct CollisionForecast {
    std::optional<Vec2> virtual_point;
    double t_auv = 0.0;              // seconds from now
    double t_obs = 0.0;              // seconds from now
    double separation_at_pass = 0.0; // meters, center-to-center
    double min_separation = 0.0;     // meters, CPA minimum within horizon
    double t_min_separation = 0.0;   // seconds from now
    bool threat = false;
    Encounter encounter = Encounter::None;

    // Inputs plan_maneuver needs to pick overtake vs detour.
    double course_speed = 0.0;       // m/s used for AUV timing
    double obs_along_course = 0.0;   // m/s, obstacle velocity onto the course axis
};

struct ManeuverIntent {
    ManeuverMode mode = ManeuverMode::TrackPath;
    double target_speed_scale = 1.0;  // fraction of v_max
    double extra_keepout = 0.0;       // meters added to the obstacle radius
};

// Closest point of approach for two constant-velocity points over
// t in [0, t_max]: returns (time, separation) of the minimum.
struct ClosestApproach {
    double t = 0.0;
    double separation = 0.0;
};
ClosestApproach closest_approach(Vec2 pos_a, Vec2 vel_a, Vec2 pos_b, Vec2 vel_b, double t_max);

// Geometric encounter class from the angle between course and obstacle
// velocity; along-track geometry additionally requires the obstacle to sit
// ahead on (or near) the course line. rel_position = obstacle - AUV.
Encounter classify(Vec2 course, Vec2 obs_velocity, Vec2 rel_position,
                   const AvoidanceConfig& cfg);

// Forecast the encounter between the AUV (assumed to hold `course` at its
// timing speed) and one obstacle. `now` is absolute sim time. AUV timing
// speed = max(current v, v_nominal_frac * v_max) so a just-launched robot
// still gets finite arrival times.
CollisionForecast forecast(const RobotState& auv, Vec2 course, const DynamicObstacle& obs,
                           const RobotLimits& limits, double now,
                           const AvoidanceConfig& cfg = {});

// Rule table mapping a forecast to the response the local planner gets:
// cross traffic that reaches the crossing first -> slow and yield, cross
// traffic we would beat -> swing around it, a slower mover ahead on the
// course -> overtake with an inflated keepout, an opposing mover -> detour.
ManeuverIntent plan_maneuver(const CollisionForecast& fc, const RobotLimits& limits,
                             const AvoidanceConfig& cfg = {});

}  // namespace auvnav
