#include "auvnav/path_toolkit.hpp"

#include <cmath>
#include <stdexcept>

namespace auvnav {

namespace {

// Heading change at waypoint b between segments a->b and b->c, in [0, pi].
double turn_angle(Vec2 a, Vec2 b, Vec2 c) {
    return angle_between(b - a, c - b);
}

}  // namespace

double Path::length() const {
    double total = 0.0;
    for (std::size_t i = 1; i < waypoints.size(); ++i)
        total += distance(waypoints[i - 1], waypoints[i]);
    return total;
}

Path cells_to_world(const std::vector<Cell>& cells, double cell_size) {
    Path path;
    path.waypoints.reserve(cells.size());
    for (Cell c : cells)
        path.waypoints.push_back({(c.col + 0.5) * cell_size, (c.row + 0.5) * cell_size});
    return path;
}

Path floyd_smooth(const Path& path, const GridMap& map) {
    if (path.waypoints.empty()) throw std::invalid_argument("floyd_smooth: empty path");

    std::vector<Cell> cells;
    cells.reserve(path.waypoints.size());
    for (Vec2 p : path.waypoints) cells.push_back(map.cell_at(p));
    for (std::size_t i = 0; i + 1 < cells.size(); ++i)
        if (!line_of_sight(map, cells[i], cells[i + 1]))
            throw std::invalid_argument("floyd_smooth: input path is not collision-free");

    // Pass 1: drop interior waypoints collinear with both neighbors.
    std::vector<std::size_t> kept;
    kept.push_back(0);
    for (std::size_t i = 1; i + 1 < path.waypoints.size(); ++i) {
        if (turn_angle(path.waypoints[kept.back()], path.waypoints[i], path.waypoints[i + 1]) >
            kCollinearToleranceRad)
            kept.push_back(i);
    }
    if (path.waypoints.size() > 1) kept.push_back(path.waypoints.size() - 1);

    // Pass 2: from each anchor jump to the farthest visible later waypoint.
    Path out;
    out.provenance = PathProvenance::Smoothed;
    std::size_t anchor = 0;
    out.waypoints.push_back(path.waypoints[kept[anchor]]);
    while (anchor + 1 < kept.size()) {
        std::size_t next = anchor + 1;
        for (std::size_t j = kept.size() - 1; j > anchor + 1; --j) {
            if (line_of_sight(map, cells[kept[anchor]], cells[kept[j]])) {
                next = j;
                break;
            }
        }
        out.waypoints.push_back(path.waypoints[kept[next]]);
        anchor = next;
    }
    return out;
}

PathMetrics path_metrics(const Path& path) {
    PathMetrics m;
    m.length = path.length();
    for (std::size_t i = 1; i + 1 < path.waypoints.size(); ++i) {
        const double turn =
            turn_angle(path.waypoints[i - 1], path.waypoints[i], path.waypoints[i + 1]);
        if (turn > kCollinearToleranceRad) {
            ++m.turning_points;
            m.total_turning_angle += rad_to_deg(turn);
        }
    }
    return m;
}

}  // namespace auvnav
