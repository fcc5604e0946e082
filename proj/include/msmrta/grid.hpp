#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msmrta {

struct Coord {
    int row = 0;
    int col = 0;

    friend bool operator==(const Coord&, const Coord&) = default;
    // (row, col) lexicographic; used for deterministic tie-breaking
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

int manhattan(Coord a, Coord b);
int chebyshev(Coord a, Coord b);

enum class Cell : std::uint8_t { Free = 0, Obstacle = 1 };

class MapFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable after load; safe to share read-only across threads.
class GridMap {
public:
    GridMap(int width, int height, Cell fill = Cell::Free);

    int width() const { return width_; }
    int height() const { return height_; }

    bool in_bounds(Coord c) const {
        return c.row >= 0 && c.row < height_ && c.col >= 0 && c.col < width_;
    }
    Cell at(Coord c) const { return cells_[index(c)]; }
    void set(Coord c, Cell v) { cells_[index(c)] = v; }
    bool is_free(Coord c) const { return in_bounds(c) && at(c) == Cell::Free; }

    int index(Coord c) const { return c.row * width_ + c.col; }
    int cell_count() const { return width_ * height_; }

    std::vector<Coord> free_cells() const;
    int free_cell_count() const;

    std::string to_text() const;

    friend bool operator==(const GridMap&, const GridMap&) = default;

private:
    int width_;
    int height_;
    std::vector<Cell> cells_;
};

// Map file grammar: rows of equal length, '.' = Free, '#' = Obstacle,
// optional trailing newline. Dimensions are inferred.
GridMap load_map(const std::string& text);
GridMap load_map_file(const std::string& path);

// Fixed neighbor order (up, down, left, right); all traversals use it so
// tie-breaking stays deterministic.
inline constexpr std::array<std::pair<int, int>, 4> kNeighborSteps{
    {{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

// Length of the shortest 4-connected obstacle-avoiding path, or nullopt if
// the goal is unreachable. Serves as the optimality oracle for A*.
std::optional<int> bfs_shortest_path(const GridMap& map, Coord start, Coord goal);

// True iff the straight segment between the two cell centers, traversed on
// the integer grid, touches no Obstacle cell. Exact corner crossings step
// diagonally.
bool line_of_sight(const GridMap& map, Coord from, Coord to);

// True iff every Free cell is reachable from every other Free cell.
bool free_region_connected(const GridMap& map);

}  // namespace msmrta
