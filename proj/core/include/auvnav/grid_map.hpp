#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "auvnav/geometry.hpp"

namespace auvnav {

struct Cell {
    int col = 0;
    int row = 0;
    constexpr bool operator==(const Cell&) const = default;
};

// Compass moves on the 8-ring, ordered counterclockwise from east.
// Even values are orthogonal, odd values diagonal.
enum class Direction : std::uint8_t { E = 0, NE, N, NW, W, SW, S, SE };

inline constexpr std::array<Direction, 8> kAllDirections = {
    Direction::E,  Direction::NE, Direction::N, Direction::NW,
    Direction::W,  Direction::SW, Direction::S, Direction::SE};

constexpr int direction_dcol(Direction d) {
    constexpr int dc[8] = {1, 1, 0, -1, -1, -1, 0, 1};
    return dc[static_cast<int>(d)];
}
constexpr int direction_drow(Direction d) {
    constexpr int dr[8] = {0, 1, 1, 1, 0, -1, -1, -1};
    return dr[static_cast<int>(d)];
}
constexpr bool is_diagonal(Direction d) { return static_cast<int>(d) % 2 == 1; }

inline double step_cost(Direction d, double cell_size) {
    return is_diagonal(d) ? cell_size * std::numbers::sqrt2 : cell_size;
}

// Occupancy grid. Column index grows east, row index grows north; the
// center of cell (c, r) sits at world point ((c + 0.5), (r + 0.5)) * cell_size.
// Immutable after construction, so any number of planners may share one map.
class GridMap {
  public:
    // occupancy is row-major (row * width + col), true = obstacle.
    GridMap(int width, int height, double cell_size, std::vector<std::uint8_t> occupancy);

    int width() const { return width_; }
    int height() const { return height_; }
    double cell_size() const { return cell_size_; }
    std::size_t cell_count() const { return occupancy_.size(); }
    std::span<const std::uint8_t> occupancy() const { return occupancy_; }

    bool in_bounds(Cell c) const {
        return c.col >= 0 && c.col < width_ && c.row >= 0 && c.row < height_;
    }
    bool occupied(Cell c) const { return occupancy_[index(c)] != 0; }
    bool free(Cell c) const { return !occupied(c); }
    std::size_t index(Cell c) const {
        return static_cast<std::size_t>(c.row) * width_ + c.col;
    }

    Vec2 cell_center(Cell c) const {
        return {(c.col + 0.5) * cell_size_, (c.row + 0.5) * cell_size_};
    }
    // Cell containing a world point (points on a boundary belong to the
    // higher-index cell, clamped into bounds).
    Cell cell_at(Vec2 p) const;

    // Copy of this map with additional cells marked occupied.
    GridMap with_obstacles(std::span<const Cell> cells) const;

    bool operator==(const GridMap&) const = default;

  private:
    int width_;
    int height_;
    double cell_size_;
    std::vector<std::uint8_t> occupancy_;
};

struct Neighbor {
    Cell cell;
    double cost = 0.0;
};

// Occupied fraction of the whole grid, in [0, 1].
double obstacle_rate(const GridMap& map);

// One-step moves from `at` in the allowed directions. A diagonal move is
// dropped when either of its two flanking orthogonal cells is occupied, so
// a path can never slip between two diagonally touching obstacles.
// Throws std::invalid_argument when `at` is out of bounds.
std::vector<Neighbor> neighbors(const GridMap& map, Cell at,
                                std::span<const Direction> allowed = kAllDirections);

// Every cell touched by the segment between the centers of a and b, in
// traversal order. Supercover: when the segment passes exactly through a
// grid vertex both flanking cells are included, matching the diagonal rule
// in neighbors(). Throws std::invalid_argument on out-of-bounds endpoints.
std::vector<Cell> supercover_cells(const GridMap& map, Cell a, Cell b);

// True iff no cell touched by the center-to-center segment is occupied.
bool line_of_sight(const GridMap& map, Cell a, Cell b);

}  // namespace auvnav
