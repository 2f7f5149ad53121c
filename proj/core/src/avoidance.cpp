#include "auvnav/avoidance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace auvnav {

void AvoidanceConfig::validate() const {
    if (theta_parallel_deg <= 0.0 || theta_parallel_deg >= 90.0)
        throw std::invalid_argument("avoidance: theta_parallel_deg must be in (0, 90)");
    if (yield_margin_s < 0.0) throw std::invalid_argument("avoidance: yield_margin_s must be >= 0");
    if (!(forecast_horizon_s > 0.0))
        throw std::invalid_argument("avoidance: forecast_horizon_s must be > 0");
    if (yield_speed_scale <= 0.0 || yield_speed_scale > 1.0)
        throw std::invalid_argument("avoidance: yield_speed_scale must be in (0, 1]");
    if (on_course_width < 0.0) throw std::invalid_argument("avoidance: on_course_width must be >= 0");
    if (v_nominal_frac <= 0.0 || v_nominal_frac > 1.0)
        throw std::invalid_argument("avoidance: v_nominal_frac must be in (0, 1]");
}

ClosestApproach closest_approach(Vec2 pos_a, Vec2 vel_a, Vec2 pos_b, Vec2 vel_b, double t_max) {
    const Vec2 dp = pos_b - pos_a;
    const Vec2 dv = vel_b - vel_a;
    const double dv2 = dot(dv, dv);
    double t = 0.0;
    if (dv2 > 1e-18) t = std::clamp(-dot(dp, dv) / dv2, 0.0, t_max);
    return {t, norm(dp + dv * t)};
}

Encounter classify(Vec2 course, Vec2 obs_velocity, Vec2 rel_position, const AvoidanceConfig& cfg) {
    const double speed = norm(obs_velocity);
    if (speed <= 1e-12) return Encounter::None;

    const Vec2 u = normalized(course);
    const double phi = angle_between(u, obs_velocity);
    const double theta = deg_to_rad(cfg.theta_parallel_deg);
    if (phi >= theta && phi <= std::numbers::pi - theta) return Encounter::Lateral;

    // Along-track band: only counts when the obstacle sits ahead on (or
    // near) the course line.
    const double along = dot(rel_position, u);
    const double cross_track = std::abs(cross(u, rel_position));
    if (along > 0.0 && cross_track <= cfg.on_course_width) return Encounter::HeadOn;
    return Encounter::None;
}

CollisionForecast forecast(const RobotState& auv, Vec2 course, const DynamicObstacle& obs,
                           const RobotLimits& limits, double now, const AvoidanceConfig& cfg) {
    CollisionForecast fc;

    // Active portion of the forecast window, in seconds from now.
    const double w0 = std::max(0.0, obs.t_start - now);
    const double w1 = std::min(cfg.forecast_horizon_s, obs.t_end - now);
    if (w1 < w0) return fc;

    const Vec2 u = normalized(course);
    const double speed_auv = std::max(auv.v, cfg.v_nominal_frac * limits.v_max);
    const Vec2 a0 = auv.position();
    const Vec2 va = u * speed_auv;

    const Vec2 o_now{obs.x0 + obs.vx * now, obs.y0 + obs.vy * now};
    const Vec2 vo{obs.vx, obs.vy};
    const double speed_obs = norm(vo);

    fc.course_speed = speed_auv;
    fc.obs_along_course = dot(u, vo);
    fc.encounter = classify(u, vo, o_now - a0, cfg);

    // Minimum separation the two straight-line tracks reach inside the
    // window; this decides the threat.
    {
        const Vec2 dp = o_now - a0;
        const Vec2 dv = vo - va;
        const double dv2 = dot(dv, dv);
        double t = w0;
        if (dv2 > 1e-18) t = std::clamp(-dot(dp, dv) / dv2, w0, w1);
        fc.t_min_separation = t;
        fc.min_separation = norm(dp + dv * t);
    }
    const double threshold = limits.safe_distance + obs.radius + limits.radius;
    fc.threat = fc.min_separation < threshold;

    // Virtual crossing point and per-body arrival times. Crossing geometry
    // when the tracks intersect ahead of both bodies; otherwise the closest
    // point on the course to the obstacle stands in.
    const double theta = deg_to_rad(cfg.theta_parallel_deg);
    const double phi = speed_obs > 1e-12 ? angle_between(u, vo) : 0.0;
    bool crossing_point = false;
    if (speed_obs > 1e-12 && phi >= theta && phi <= std::numbers::pi - theta) {
        const Vec2 w = o_now - a0;
        const double denom = cross(u, vo);
        const double arc = cross(w, vo) / denom;   // meters along the course
        const double t_obs = cross(w, u) / denom;  // seconds for the obstacle
        if (arc >= 0.0 && t_obs >= 0.0) {
            crossing_point = true;
            fc.virtual_point = a0 + u * arc;
            fc.t_auv = arc / speed_auv;
            fc.t_obs = t_obs;
        }
    }
    if (!crossing_point) {
        const double arc = std::max(dot(o_now - a0, u), 0.0);
        const Vec2 p = a0 + u * arc;
        fc.t_auv = arc / speed_auv;
        fc.t_obs = speed_obs > 1e-12 ? distance(o_now, p) / speed_obs : 0.0;
        if (fc.threat) fc.virtual_point = p;
    }
    fc.separation_at_pass = distance(a0 + va * fc.t_auv, o_now + vo * fc.t_auv);
    return fc;
}

ManeuverIntent plan_maneuver(const CollisionForecast& fc, const RobotLimits& limits,
                             const AvoidanceConfig& cfg) {
    if (!fc.threat) return {ManeuverMode::TrackPath, 1.0, 0.0};
    switch (fc.encounter) {
        case Encounter::Lateral:
            if (fc.t_auv > fc.t_obs + cfg.yield_margin_s)
                return {ManeuverMode::YieldSlow, cfg.yield_speed_scale, 0.0};
            return {ManeuverMode::Detour, 1.0, limits.safe_distance};
        case Encounter::HeadOn:
            if (fc.obs_along_course > 0.0 && fc.obs_along_course < fc.course_speed)
                return {ManeuverMode::Overtake, 1.0, limits.safe_distance};
            return {ManeuverMode::Detour, 1.0, limits.safe_distance};
        case Encounter::None:
            break;
    }
    // Stationary obstacle or odd geometry: swing wide.
    return {ManeuverMode::Detour, 1.0, limits.safe_distance};
}

}  // namespace auvnav
