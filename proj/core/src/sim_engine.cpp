#include "auvnav/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace auvnav {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxRecoveryTicks = 20;

// Closest point on the polyline: returns (segment index, arc length from
// the path start to the projection).
struct PathAnchor {
    std::size_t segment = 0;
    double arc = 0.0;
};

PathAnchor closest_on_path(Vec2 p, const Path& path) {
    PathAnchor best;
    double best_dist = kInf;
    double arc_before = 0.0;
    if (path.waypoints.size() == 1) return best;
    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
        const Vec2 a = path.waypoints[i], b = path.waypoints[i + 1];
        const Vec2 ab = b - a;
        const double len = norm(ab);
        double t = len > 1e-12 ? std::clamp(dot(p - a, ab) / (len * len), 0.0, 1.0) : 0.0;
        const double d = distance(p, a + ab * t);
        if (d < best_dist) {
            best_dist = d;
            best.segment = i;
            best.arc = arc_before + t * len;
        }
        arc_before += len;
    }
    return best;
}

double cross_track_error(Vec2 p, const Path& path) {
    if (path.waypoints.size() == 1) return distance(p, path.waypoints[0]);
    double best = kInf;
    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i)
        best = std::min(best, point_segment_distance(p, path.waypoints[i], path.waypoints[i + 1]));
    return best;
}

bool robot_in_static_collision(const GridMap& map, Vec2 p) {
    if (p.x < 0.0 || p.y < 0.0 || p.x > map.width() * map.cell_size() ||
        p.y > map.height() * map.cell_size())
        return true;
    return map.occupied(map.cell_at(p));
}

// True when any remaining path segment (from the one the robot is on) got
// blocked, judged by the same visibility rule planning uses.
bool path_blocked(const GridMap& map, const Path& path, Vec2 position) {
    const PathAnchor anchor = closest_on_path(position, path);
    for (std::size_t i = anchor.segment; i + 1 < path.waypoints.size(); ++i) {
        const Cell a = map.cell_at(path.waypoints[i]);
        const Cell b = map.cell_at(path.waypoints[i + 1]);
        if (map.occupied(a) || map.occupied(b) || !line_of_sight(map, a, b)) return true;
    }
    return false;
}

}  // namespace

void ScenarioConfig::validate() const {
    limits.validate();
    dwa.validate();
    avoidance.validate();
    for (const DynamicObstacle& o : obstacles) o.validate();
    if (!(sim.dt > 0.0)) throw std::invalid_argument("scenario: sim dt must be > 0");
    if (!(sim.timeout > 0.0)) throw std::invalid_argument("scenario: timeout must be > 0");
    if (!(sim.goal_tolerance > 0.0))
        throw std::invalid_argument("scenario: goal_tolerance must be > 0");
    if (!(sim.lookahead > 0.0)) throw std::invalid_argument("scenario: lookahead must be > 0");
    if (start == goal) throw std::invalid_argument("scenario: start and goal must differ");
    if (!map.in_bounds(start) || !map.in_bounds(goal))
        throw std::invalid_argument("scenario: start or goal out of bounds");
    if (map.occupied(start)) throw std::invalid_argument("scenario: start cell is occupied");
    if (map.occupied(goal)) throw std::invalid_argument("scenario: goal cell is occupied");
    for (const StaticReveal& r : reveals) {
        if (r.t < 0.0) throw std::invalid_argument("scenario: reveal time must be >= 0");
        for (Cell c : r.cells)
            if (!map.in_bounds(c))
                throw std::invalid_argument("scenario: reveal cell out of bounds");
    }
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Reached: return "reached";
        case Outcome::Timeout: return "timeout";
        case Outcome::Collision: return "collision";
        case Outcome::Blocked: return "blocked";
    }
    return "unknown";
}

std::optional<PlanOutput> plan_global(const GridMap& map, Cell start, Cell goal,
                                      const SearchVariant& variant, bool smoothing) {
    const auto result = astar(map, start, goal, variant);
    if (!result) return std::nullopt;
    PlanOutput out;
    out.expansions = result->expansions;
    out.planning_time = result->planning_time;
    out.fallback_used = result->fallback_used;
    out.path = cells_to_world(result->path, map.cell_size());
    if (smoothing) out.path = floyd_smooth(out.path, map);
    return out;
}

Vec2 carrot_waypoint(Vec2 position, const Path& path, double lookahead) {
    if (path.waypoints.empty()) throw std::invalid_argument("carrot_waypoint: empty path");
    if (path.waypoints.size() == 1) return path.waypoints.front();

    const PathAnchor anchor = closest_on_path(position, path);
    double remaining = anchor.arc + lookahead;
    for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
        const double len = distance(path.waypoints[i], path.waypoints[i + 1]);
        if (remaining <= len)
            return path.waypoints[i] +
                   (path.waypoints[i + 1] - path.waypoints[i]) * (len > 1e-12 ? remaining / len : 0.0);
        remaining -= len;
    }
    return path.waypoints.back();
}

SimRunResult run(const ScenarioConfig& scenario) {
    scenario.validate();
    SimRunResult out;
    SimulationLog& log = out.log;
    MetricsReport& metrics = out.metrics;
    metrics.min_clearance = kInf;

    GridMap map = scenario.map;
    const double cell = map.cell_size();
    const Vec2 goal_point = map.cell_center(scenario.goal);

    const auto plan = plan_global(map, scenario.start, scenario.goal, scenario.variant,
                                  scenario.smoothing);
    if (!plan) {
        log.outcome = Outcome::Blocked;
        metrics.outcome = Outcome::Blocked;
        return out;
    }
    Path path = plan->path;
    log.plans.push_back(path);
    metrics.expansions = plan->expansions;
    metrics.planning_time = plan->planning_time;
    const PathMetrics pm = path_metrics(path);
    metrics.planned_path_length = pm.length;
    metrics.turning_points = pm.turning_points;
    metrics.total_turning_angle = pm.total_turning_angle;

    RobotState state;
    const Vec2 start_point = map.cell_center(scenario.start);
    state.x = start_point.x;
    state.y = start_point.y;
    state.heading = scenario.initial_heading
                        ? wrap_angle(*scenario.initial_heading)
                        : std::atan2(carrot_waypoint(start_point, path, scenario.sim.lookahead).y -
                                         start_point.y,
                                     carrot_waypoint(start_point, path, scenario.sim.lookahead).x -
                                         start_point.x);
    log.initial_state = state;

    // Reveals applied in time order.
    std::vector<StaticReveal> reveals = scenario.reveals;
    std::sort(reveals.begin(), reveals.end(),
              [](const StaticReveal& a, const StaticReveal& b) { return a.t < b.t; });
    std::size_t next_reveal = 0;

    const double dt = scenario.sim.dt;
    const long max_ticks = static_cast<long>(std::ceil(scenario.sim.timeout / dt)) + 1;
    int recovery_ticks = 0;
    Outcome outcome = Outcome::Timeout;

    for (long tick = 0; tick < max_ticks; ++tick) {
        if (distance(state.position(), goal_point) <= scenario.sim.goal_tolerance) {
            outcome = Outcome::Reached;
            break;
        }
        if (state.t >= scenario.sim.timeout) {
            outcome = Outcome::Timeout;
            break;
        }

        // Pop-up obstacles; a replan fires only when they cut the remaining path.
        bool map_changed = false;
        while (next_reveal < reveals.size() && reveals[next_reveal].t <= state.t) {
            map = map.with_obstacles(reveals[next_reveal].cells);
            ++next_reveal;
            map_changed = true;
        }
        if (map_changed) {
            if (robot_in_static_collision(map, state.position())) {
                outcome = Outcome::Collision;
                break;
            }
            if (path_blocked(map, path, state.position())) {
                const Cell here = map.cell_at(state.position());
                const auto replan =
                    map.occupied(here)
                        ? std::nullopt
                        : plan_global(map, here, scenario.goal, scenario.variant,
                                      scenario.smoothing);
                if (!replan) {
                    outcome = Outcome::Blocked;
                    break;
                }
                path = replan->path;
                log.plans.push_back(path);
                log.replans.push_back({state.t, replan->expansions});
                metrics.expansions += replan->expansions;
                metrics.planning_time += replan->planning_time;
            }
        }

        const Vec2 carrot = carrot_waypoint(state.position(), path, scenario.sim.lookahead);
        Vec2 course = carrot - state.position();
        if (norm(course) < 1e-9)
            course = {std::cos(state.heading), std::sin(state.heading)};

        // Forecast every mover, take the most severe response.
        ManeuverMode mode = ManeuverMode::TrackPath;
        double speed_scale = 1.0;
        std::vector<DynamicObstacle> adjusted;
        adjusted.reserve(scenario.obstacles.size());
        for (const DynamicObstacle& obs : scenario.obstacles) {
            const CollisionForecast fc =
                forecast(state, course, obs, scenario.limits, state.t, scenario.avoidance);
            const ManeuverIntent intent = plan_maneuver(fc, scenario.limits, scenario.avoidance);
            mode = std::max(mode, intent.mode);
            speed_scale = std::min(speed_scale, intent.target_speed_scale);
            DynamicObstacle adj = obs;
            adj.radius += intent.extra_keepout;
            adjusted.push_back(adj);
        }

        VelocityWindow window = dynamic_window(state, scenario.limits, dt);
        window.v_hi = std::max(window.v_lo,
                               std::min(window.v_hi, speed_scale * scenario.limits.v_max));

        VelocityCommand command;
        double score = 0.0;
        bool recovery = false;
        const auto selection =
            best_command(state, carrot, window, adjusted, scenario.dwa, scenario.limits);
        if (selection) {
            command = selection->command;
            score = selection->score;
            recovery_ticks = 0;
        } else {
            // Everything inadmissible: rotate in place toward the carrot and
            // try again next tick.
            recovery = true;
            if (++recovery_ticks > kMaxRecoveryTicks) {
                outcome = Outcome::Blocked;
                break;
            }
            const double bearing =
                std::atan2(carrot.y - state.y, carrot.x - state.x);
            const double err = wrap_angle(bearing - state.heading);
            command = {0.0, err >= 0.0 ? scenario.limits.omega_max : -scenario.limits.omega_max};
        }

        const Vec2 before = state.position();
        state = step(state, command, dt, scenario.limits);
        metrics.total_distance += distance(before, state.position());

        // Physical overlap ends the run; safe-distance shaves are only logged.
        double clearance = kInf;
        bool crashed = robot_in_static_collision(map, state.position());
        for (const DynamicObstacle& obs : scenario.obstacles) {
            const auto pos = obstacle_at(obs, state.t);
            if (!pos) continue;
            const double d =
                distance(state.position(), *pos) - obs.radius - scenario.limits.radius;
            clearance = std::min(clearance, d);
            if (distance(state.position(), *pos) < obs.radius + scenario.limits.radius)
                crashed = true;
        }
        metrics.min_clearance = std::min(metrics.min_clearance, clearance);

        TickRecord rec;
        rec.t = state.t;
        rec.state = state;
        rec.command = {state.v, state.omega};  // realized command
        rec.score = score;
        rec.mode = mode;
        rec.min_clearance = clearance;
        rec.cross_track = cross_track_error(state.position(), path);
        rec.recovery = recovery;
        log.ticks.push_back(rec);

        if (crashed) {
            outcome = Outcome::Collision;
            break;
        }
    }

    log.outcome = outcome;
    metrics.outcome = outcome;
    metrics.total_time = state.t;
    return out;
}

}  // namespace auvnav
