#include "auvnav/grid_map.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace auvnav {

GridMap::GridMap(int width, int height, double cell_size, std::vector<std::uint8_t> occupancy)
    : width_(width), height_(height), cell_size_(cell_size), occupancy_(std::move(occupancy)) {
    if (width_ < 2 || height_ < 2)
        throw std::invalid_argument("GridMap: width and height must be >= 2");
    if (!(cell_size_ > 0.0))
        throw std::invalid_argument("GridMap: cell_size must be > 0");
    if (occupancy_.size() != static_cast<std::size_t>(width_) * height_)
        throw std::invalid_argument("GridMap: occupancy size must equal width*height");
}

Cell GridMap::cell_at(Vec2 p) const {
    int c = static_cast<int>(std::floor(p.x / cell_size_));
    int r = static_cast<int>(std::floor(p.y / cell_size_));
    c = std::clamp(c, 0, width_ - 1);
    r = std::clamp(r, 0, height_ - 1);
    return {c, r};
}

GridMap GridMap::with_obstacles(std::span<const Cell> cells) const {
    std::vector<std::uint8_t> occ = occupancy_;
    for (Cell c : cells) {
        if (!in_bounds(c))
            throw std::invalid_argument("with_obstacles: cell out of bounds");
        occ[index(c)] = 1;
    }
    return GridMap(width_, height_, cell_size_, std::move(occ));
}

double obstacle_rate(const GridMap& map) {
    std::size_t occupied = 0;
    for (std::uint8_t v : map.occupancy()) occupied += (v != 0);
    return static_cast<double>(occupied) / static_cast<double>(map.cell_count());
}

std::vector<Neighbor> neighbors(const GridMap& map, Cell at, std::span<const Direction> allowed) {
    if (!map.in_bounds(at))
        throw std::invalid_argument("neighbors: cell (" + std::to_string(at.col) + "," +
                                    std::to_string(at.row) + ") out of bounds");
    std::vector<Neighbor> out;
    out.reserve(allowed.size());
    for (Direction d : allowed) {
        const int dc = direction_dcol(d), dr = direction_drow(d);
        const Cell to{at.col + dc, at.row + dr};
        if (!map.in_bounds(to) || map.occupied(to)) continue;
        if (is_diagonal(d)) {
            // Corner-cut prohibition: both flanking orthogonal cells must be free.
            if (map.occupied({at.col + dc, at.row}) || map.occupied({at.col, at.row + dr}))
                continue;
        }
        out.push_back({to, step_cost(d, map.cell_size())});
    }
    return out;
}

// Integer supercover walk between cell centers. Error terms are kept in
// doubled units so an exact pass through a grid vertex is detectable as
// error + errorprev == 2*dx, in which case both flanking cells are emitted.
std::vector<Cell> supercover_cells(const GridMap& map, Cell a, Cell b) {
    if (!map.in_bounds(a) || !map.in_bounds(b))
        throw std::invalid_argument("supercover_cells: endpoint out of bounds");

    std::vector<Cell> cells;
    cells.push_back(a);

    long dx = b.col - a.col, dy = b.row - a.row;
    const int xstep = dx > 0 ? 1 : -1;
    const int ystep = dy > 0 ? 1 : -1;
    dx = std::labs(dx);
    dy = std::labs(dy);
    const long ddx = 2 * dx, ddy = 2 * dy;

    long x = a.col, y = a.row;
    if (ddx >= ddy) {
        long error = dx, errorprev = dx;
        for (long i = 0; i < dx; ++i) {
            x += xstep;
            error += ddy;
            if (error > ddx) {
                y += ystep;
                error -= ddx;
                if (error + errorprev < ddx) {
                    cells.push_back({static_cast<int>(x), static_cast<int>(y - ystep)});
                } else if (error + errorprev > ddx) {
                    cells.push_back({static_cast<int>(x - xstep), static_cast<int>(y)});
                } else {  // exact vertex crossing
                    cells.push_back({static_cast<int>(x), static_cast<int>(y - ystep)});
                    cells.push_back({static_cast<int>(x - xstep), static_cast<int>(y)});
                }
            }
            cells.push_back({static_cast<int>(x), static_cast<int>(y)});
            errorprev = error;
        }
    } else {
        long error = dy, errorprev = dy;
        for (long i = 0; i < dy; ++i) {
            y += ystep;
            error += ddx;
            if (error > ddy) {
                x += xstep;
                error -= ddy;
                if (error + errorprev < ddy) {
                    cells.push_back({static_cast<int>(x - xstep), static_cast<int>(y)});
                } else if (error + errorprev > ddy) {
                    cells.push_back({static_cast<int>(x), static_cast<int>(y - ystep)});
                } else {
                    cells.push_back({static_cast<int>(x - xstep), static_cast<int>(y)});
                    cells.push_back({static_cast<int>(x), static_cast<int>(y - ystep)});
                }
            }
            cells.push_back({static_cast<int>(x), static_cast<int>(y)});
            errorprev = error;
        }
    }
    return cells;
}

bool line_of_sight(const GridMap& map, Cell a, Cell b) {
    for (Cell c : supercover_cells(map, a, b))
        if (map.occupied(c)) return false;
    return true;
}

}  // namespace auvnav
