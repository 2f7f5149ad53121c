#include "auvnav/global_search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace auvnav {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kObstacleRateFloor = 1e-3;

struct OpenEntry {
    double f;
    double g;
    std::uint64_t seq;
    Cell cell;
};

struct OpenOrder {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        if (a.f != b.f) return a.f > b.f;       // min f
        if (a.g != b.g) return a.g < b.g;       // then max g
        return a.seq > b.seq;                   // then FIFO
    }
};

void check_endpoints(const GridMap& map, Cell start, Cell goal) {
    if (!map.in_bounds(start) || !map.in_bounds(goal))
        throw std::invalid_argument("search: start or goal out of bounds");
    if (map.occupied(start)) throw std::invalid_argument("search: start cell is occupied");
    if (map.occupied(goal)) throw std::invalid_argument("search: goal cell is occupied");
}

struct CorePass {
    std::vector<Cell> path;
    std::size_t expansions = 0;
    double path_cost = 0.0;
    bool found = false;
};

CorePass astar_pass(const GridMap& map, Cell start, Cell goal, double weight, int directions,
                    std::vector<SearchNodeRecord>* trace) {
    const std::size_t n = map.cell_count();
    std::vector<double> g_best(n, kInf);
    std::vector<std::uint8_t> closed(n, 0);
    std::vector<int> parent(n, -1);

    std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
    std::uint64_t seq = 0;

    g_best[map.index(start)] = 0.0;
    open.push({weight * heuristic(start, goal, map.cell_size()), 0.0, seq++, start});

    CorePass out;
    while (!open.empty()) {
        const OpenEntry top = open.top();
        open.pop();
        const std::size_t ci = map.index(top.cell);
        if (closed[ci]) continue;  // stale duplicate
        closed[ci] = 1;
        ++out.expansions;
        if (trace) {
            const int p = parent[ci];
            trace->push_back({top.cell, top.g, heuristic(top.cell, goal, map.cell_size()), top.f,
                              p < 0 ? std::optional<Cell>{}
                                    : std::optional<Cell>{{p % map.width(), p / map.width()}}});
        }

        if (top.cell == goal) {
            out.found = true;
            out.path_cost = top.g;
            Cell c = goal;
            while (true) {
                out.path.push_back(c);
                const int p = parent[map.index(c)];
                if (p < 0) break;
                c = {p % map.width(), p / map.width()};
            }
            std::reverse(out.path.begin(), out.path.end());
            return out;
        }

        std::array<Direction, 5> five{};
        std::span<const Direction> allowed = kAllDirections;
        if (directions == 5) {
            five = select_directions(top.cell, goal);
            allowed = five;
        }
        for (const Neighbor& nb : neighbors(map, top.cell, allowed)) {
            const std::size_t ni = map.index(nb.cell);
            if (closed[ni]) continue;
            const double g = top.g + nb.cost;
            if (g < g_best[ni]) {
                g_best[ni] = g;
                parent[ni] = static_cast<int>(ci);
                open.push({g + weight * heuristic(nb.cell, goal, map.cell_size()), g, seq++, nb.cell});
            }
        }
    }
    return out;
}

}  // namespace

double heuristic(Cell a, Cell b, double cell_size) {
    return cell_size * std::hypot(static_cast<double>(b.col - a.col),
                                  static_cast<double>(b.row - a.row));
}

double heuristic_weight(double obstacle_rate, LogBase base) {
    if (obstacle_rate < 0.0 || obstacle_rate > 1.0)
        throw std::invalid_argument("heuristic_weight: obstacle rate outside [0, 1]");
    if (obstacle_rate == 0.0) return 1.0;
    const double p = std::max(obstacle_rate, kObstacleRateFloor);
    return base == LogBase::Base10 ? 1.0 - std::log10(p) : 1.0 - std::log(p);
}

int principal_octant(double dx, double dy) {
    const double oct = std::atan2(dy, dx) / (std::numbers::pi / 4.0);  // in [-4, 4]
    const double lo = std::floor(oct);
    auto mod8 = [](int k) { return ((k % 8) + 8) % 8; };
    // Exactly between two octants: take the orthogonal (even) one.
    if (std::abs(oct - lo - 0.5) < 1e-12) {
        const int a = static_cast<int>(lo);
        return mod8(mod8(a) % 2 == 0 ? a : a + 1);
    }
    return mod8(static_cast<int>(std::lround(oct)));
}

std::array<Direction, 5> select_directions(Cell current, Cell goal) {
    const int k = principal_octant(static_cast<double>(goal.col - current.col),
                                   static_cast<double>(goal.row - current.row));
    std::array<Direction, 5> out{};
    for (int i = 0; i < 5; ++i)
        out[i] = static_cast<Direction>(((k - 2 + i) % 8 + 8) % 8);
    return out;
}

std::optional<SearchResult> astar(const GridMap& map, Cell start, Cell goal,
                                  const SearchVariant& variant,
                                  std::vector<SearchNodeRecord>* trace) {
    check_endpoints(map, start, goal);
    const auto t0 = std::chrono::steady_clock::now();

    const double weight = variant.weight_mode == WeightMode::ObstacleRate
                              ? heuristic_weight(obstacle_rate(map), variant.log_base)
                              : 1.0;

    CorePass pass = astar_pass(map, start, goal, weight, variant.directions, trace);

    SearchResult result;
    result.expansions = pass.expansions;
    if (!pass.found && variant.directions == 5) {
        // Restricted expansion can dead-end on solvable maps; retry wide.
        CorePass retry = astar_pass(map, start, goal, weight, 8, trace);
        result.expansions += retry.expansions;
        result.fallback_used = true;
        pass = std::move(retry);
    }

    const auto t1 = std::chrono::steady_clock::now();
    if (!pass.found) return std::nullopt;

    result.path = std::move(pass.path);
    result.path_cost = pass.path_cost;
    result.planning_time = std::chrono::duration<double>(t1 - t0).count();
    return result;
}

std::optional<double> dijkstra_oracle(const GridMap& map, Cell start, Cell goal) {
    check_endpoints(map, start, goal);
    const std::size_t n = map.cell_count();
    std::vector<double> dist(n, kInf);
    std::vector<std::uint8_t> done(n, 0);

    using Entry = std::pair<double, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    dist[map.index(start)] = 0.0;
    open.push({0.0, map.index(start)});

    while (!open.empty()) {
        const auto [d, i] = open.top();
        open.pop();
        if (done[i]) continue;
        done[i] = 1;
        const Cell cell{static_cast<int>(i) % map.width(), static_cast<int>(i) / map.width()};
        if (cell == goal) return d;
        for (const Neighbor& nb : neighbors(map, cell)) {
            const std::size_t ni = map.index(nb.cell);
            const double nd = d + nb.cost;
            if (nd < dist[ni]) {
                dist[ni] = nd;
                open.push({nd, ni});
            }
        }
    }
    return std::nullopt;
}

}  // namespace auvnav
