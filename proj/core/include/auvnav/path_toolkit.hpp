#pragma once

#include <vector>

#include "auvnav/geometry.hpp"
#include "auvnav/grid_map.hpp"

namespace auvnav {

enum class PathProvenance { RawSearch, Smoothed };

// World-coordinate waypoint sequence. At least one waypoint; consecutive
// waypoints never coincide.
struct Path {
    std::vector<Vec2> waypoints;
    PathProvenance provenance = PathProvenance::RawSearch;

    double length() const;
    bool operator==(const Path&) const = default;
};

struct PathMetrics {
    double length = 0.0;              // meters
    std::size_t turning_points = 0;
    double total_turning_angle = 0.0;  // degrees
    std::size_t expansions = 0;        // carried from search
    double planning_time = 0.0;        // seconds, carried from search
};

// Heading changes at or below this are treated as collinear, both for
// waypoint removal and for turn counting.
inline constexpr double kCollinearToleranceRad = 1e-6;

// Map grid cells to their world-space centers.
Path cells_to_world(const std::vector<Cell>& cells, double cell_size);

// Node-elimination smoothing: drop interior waypoints collinear with both
// neighbors, then greedily shortcut each anchor to the farthest later
// waypoint that line_of_sight allows. Endpoints are preserved and the
// result is collision-free under the same corner-safe visibility rule the
// search uses. Throws std::invalid_argument if the input path itself fails
// a visibility check.
Path floyd_smooth(const Path& path, const GridMap& map);

// Length, turn count and total turn angle (degrees). expansions and
// planning_time are left zero for the caller to fill.
PathMetrics path_metrics(const Path& path);

}  // namespace auvnav
