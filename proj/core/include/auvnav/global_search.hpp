#pragma once

#include <array>
#include <optional>
#include <vector>

#include "auvnav/grid_map.hpp"

namespace auvnav {

enum class WeightMode { ObstacleRate, FixedOne };
enum class LogBase { Base10, NaturalE };

// Which planner to run. Traditional8 is the plain admissible baseline;
// Improved5 inflates the heuristic by the map's obstacle rate and expands
// only the five directions facing the goal. directions and weight_mode are
// exposed separately so the ablations (8-direction improved, fixed weight)
// are the same engine with different knobs.
struct SearchVariant {
    enum class Kind { Traditional8, Improved5 };

    Kind kind = Kind::Traditional8;
    WeightMode weight_mode = WeightMode::FixedOne;
    LogBase log_base = LogBase::Base10;
    int directions = 8;  // 5 or 8

    static SearchVariant traditional8() { return {}; }
    static SearchVariant improved5(LogBase base = LogBase::Base10) {
        return {Kind::Improved5, WeightMode::ObstacleRate, base, 5};
    }

    const char* name() const {
        return kind == Kind::Traditional8 ? "traditional8" : "improved5";
    }
};

struct SearchNodeRecord {
    Cell cell;
    double g = 0.0;  // accumulated step cost, meters
    double h = 0.0;  // heuristic estimate, meters
    double f = 0.0;  // g + w*h
    std::optional<Cell> parent;
};

struct SearchResult {
    std::vector<Cell> path;  // start..goal inclusive
    std::size_t expansions = 0;
    double path_cost = 0.0;      // meters
    double planning_time = 0.0;  // seconds, wall clock
    bool fallback_used = false;  // 5-direction pass failed, retried with 8
};

// Euclidean distance between cell centers.
double heuristic(Cell a, Cell b, double cell_size);

// Heuristic multiplier 1 - log(max(P, 1e-3)); exactly 1 when P == 0 so an
// empty map degenerates to plain A*. Throws on P outside [0, 1].
double heuristic_weight(double obstacle_rate, LogBase base = LogBase::Base10);

// Octant index on the 8-ring (0 = E, counterclockwise) of the direction
// (dx, dy). A direction exactly between two octants resolves to the
// orthogonal one.
int principal_octant(double dx, double dy);

// The goal-facing octant and its two ring neighbors on each side, in ring
// order. current != goal required.
std::array<Direction, 5> select_directions(Cell current, Cell goal);

// A* over the corner-safe neighbor graph. Ties on f break toward larger g,
// then first-inserted. Improved5 retries once with all 8 directions when
// the restricted expansion dead-ends (fallback_used; expansions then count
// both passes). Throws std::invalid_argument on occupied or out-of-bounds
// endpoints; returns nullopt when no path exists. `trace`, when non-null,
// receives one record per expansion in pop order.
std::optional<SearchResult> astar(const GridMap& map, Cell start, Cell goal,
                                  const SearchVariant& variant,
                                  std::vector<SearchNodeRecord>* trace = nullptr);

// Exact shortest-path cost on the same corner-safe 8-neighbor graph.
std::optional<double> dijkstra_oracle(const GridMap& map, Cell start, Cell goal);

}  // namespace auvnav
