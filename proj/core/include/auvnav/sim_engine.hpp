#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "auvnav/avoidance.hpp"
#include "auvnav/dwa.hpp"
#include "auvnav/global_search.hpp"
#include "auvnav/grid_map.hpp"
#include "auvnav/kinematics.hpp"
#include "auvnav/path_toolkit.hpp"

namespace auvnav {

// Static obstacle cells that pop into the map at time t.
struct StaticReveal {
    double t = 0.0;
    std::vector<Cell> cells;
};

struct SimParams {
    double dt = 0.1;            // s
    double timeout = 1800.0;    // s
    double goal_tolerance = 0.5;  // m
    double lookahead = 3.0;     // m, carrot distance along the path
};

struct ScenarioConfig {
    GridMap map;
    Cell start{};
    Cell goal{};
    RobotLimits limits{};
    std::optional<double> initial_heading;  // radians; faces the first carrot when unset
    DwaConfig dwa{};
    AvoidanceConfig avoidance{};
    std::vector<DynamicObstacle> obstacles;
    std::vector<StaticReveal> reveals;
    SimParams sim{};
    SearchVariant variant = SearchVariant::improved5();
    bool smoothing = true;
    std::uint64_t seed = 0;
    std::string name = "scenario";

    explicit ScenarioConfig(GridMap m) : map(std::move(m)) {}
    void validate() const;
};

enum class Outcome { Reached, Timeout, Collision, Blocked };
const char* to_string(Outcome o);

struct TickRecord {
    double t = 0.0;           // after the step
    RobotState state;         // after the step
    VelocityCommand command;  // realized command over the tick
    double score = 0.0;       // chosen rollout score; 0 during recovery
    ManeuverMode mode = ManeuverMode::TrackPath;
    double min_clearance = 0.0;  // m to nearest active mover surface; +inf if none
    double cross_track = 0.0;    // m to the active global path
    bool recovery = false;
};

struct ReplanEvent {
    double t = 0.0;
    std::size_t expansions = 0;
};

struct SimulationLog {
    RobotState initial_state;
    std::vector<TickRecord> ticks;
    std::vector<ReplanEvent> replans;
    std::vector<Path> plans;  // initial smoothed plan, then one per replan
    Outcome outcome = Outcome::Blocked;
};

struct MetricsReport {
    std::size_t expansions = 0;        // summed over all global plans
    double planned_path_length = 0.0;  // m, initial smoothed plan
    std::size_t turning_points = 0;
    double total_turning_angle = 0.0;  // degrees
    double planning_time = 0.0;        // s, wall clock, summed over plans
    double total_time = 0.0;           // s, simulated
    double total_distance = 0.0;       // m traveled
    double min_clearance = 0.0;        // m; +inf when no mover was ever active
    Outcome outcome = Outcome::Blocked;
};

struct SimRunResult {
    SimulationLog log;
    MetricsReport metrics;
};

struct PlanOutput {
    Path path;  // smoothed (or raw when smoothing is off), world coordinates
    std::size_t expansions = 0;
    double planning_time = 0.0;
    bool fallback_used = false;
};

// Global planning step shared by the initial plan and mid-mission replans:
// A* with the given variant, then smoothing. nullopt when unreachable.
std::optional<PlanOutput> plan_global(const GridMap& map, Cell start, Cell goal,
                                      const SearchVariant& variant, bool smoothing);

// Moving lookahead target: the point `lookahead` meters of arc beyond the
// closest point on the path to `position`; the final goal once the path
// runs out.
Vec2 carrot_waypoint(Vec2 position, const Path& path, double lookahead);

// Full mission: plan, smooth, then tick the DWA tracker with encounter
// forecasting until the goal, a timeout, a collision, or a dead end.
SimRunResult run(const ScenarioConfig& scenario);

}  // namespace auvnav
