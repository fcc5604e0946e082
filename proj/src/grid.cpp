#include "msmrta/grid.hpp"

#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>

namespace msmrta {

int manhattan(Coord a, Coord b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

int chebyshev(Coord a, Coord b) {
    return std::max(std::abs(a.row - b.row), std::abs(a.col - b.col));
}

GridMap::GridMap(int width, int height, Cell fill)
    : width_(width), height_(height), cells_(static_cast<std::size_t>(width) * height, fill) {
    if (width < 1 || height < 1) {
        throw MapFormatError("grid dimensions must be at least 1x1");
    }
}

std::vector<Coord> GridMap::free_cells() const {
    std::vector<Coord> out;
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c) {
            if (at({r, c}) == Cell::Free) out.push_back({r, c});
        }
    }
    return out;
}

int GridMap::free_cell_count() const {
    int n = 0;
    for (const Cell c : cells_) {
        if (c == Cell::Free) ++n;
    }
    return n;
}

std::string GridMap::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(height_) * (width_ + 1));
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c) {
            out += (at({r, c}) == Cell::Free) ? '.' : '#';
        }
        out += '\n';
    }
    return out;
}

GridMap load_map(const std::string& text) {
    std::vector<std::string> rows;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        rows.push_back(line);
    }
    // A trailing newline produces no extra row; an empty final line does.
    while (!rows.empty() && rows.back().empty()) rows.pop_back();

    if (rows.empty() || rows.front().empty()) {
        throw MapFormatError("map has zero dimensions");
    }
    const std::size_t width = rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width) {
            throw MapFormatError("ragged row " + std::to_string(i) + ": expected width " +
                                 std::to_string(width) + ", got " + std::to_string(rows[i].size()));
        }
    }

    GridMap map(static_cast<int>(width), static_cast<int>(rows.size()));
    for (int r = 0; r < map.height(); ++r) {
        for (int c = 0; c < map.width(); ++c) {
            const char ch = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (ch == '.') {
                map.set({r, c}, Cell::Free);
            } else if (ch == '#') {
                map.set({r, c}, Cell::Obstacle);
            } else {
                throw MapFormatError(std::string("unknown map character '") + ch + "'");
            }
        }
    }
    return map;
}

GridMap load_map_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MapFormatError("cannot open map file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_map(buf.str());
}

std::optional<int> bfs_shortest_path(const GridMap& map, Coord start, Coord goal) {
    if (!map.is_free(start) || !map.is_free(goal)) {
        throw std::invalid_argument("bfs_shortest_path: start and goal must be Free cells");
    }
    if (start == goal) return 0;

    std::vector<int> dist(static_cast<std::size_t>(map.cell_count()), -1);
    std::deque<Coord> queue;
    dist[static_cast<std::size_t>(map.index(start))] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
        const Coord cur = queue.front();
        queue.pop_front();
        const int d = dist[static_cast<std::size_t>(map.index(cur))];
        for (const auto& [dr, dc] : kNeighborSteps) {
            const Coord next{cur.row + dr, cur.col + dc};
            if (!map.is_free(next)) continue;
            int& slot = dist[static_cast<std::size_t>(map.index(next))];
            if (slot >= 0) continue;
            slot = d + 1;
            if (next == goal) return slot;
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

bool line_of_sight(const GridMap& map, Coord from, Coord to) {
    const int nr = std::abs(to.row - from.row);
    const int nc = std::abs(to.col - from.col);
    const int sr = (to.row > from.row) ? 1 : -1;
    const int sc = (to.col > from.col) ? 1 : -1;

    Coord cur = from;
    if (map.at(cur) == Cell::Obstacle) return false;
    int ir = 0;
    int ic = 0;
    while (ir < nr || ic < nc) {
        // Next grid-line crossing along each axis, compared in integer
        // arithmetic: (0.5+ic)/nc vs (0.5+ir)/nr.
        const long long col_next = (2LL * ic + 1) * nr;
        const long long row_next = (2LL * ir + 1) * nc;
        if (col_next < row_next) {
            cur.col += sc;
            ++ic;
        } else if (col_next > row_next) {
            cur.row += sr;
            ++ir;
        } else {
            cur.col += sc;
            cur.row += sr;
            ++ic;
            ++ir;
        }
        if (map.at(cur) == Cell::Obstacle) return false;
    }
    return true;
}

bool free_region_connected(const GridMap& map) {
    const int total = map.free_cell_count();
    if (total == 0) return true;

    Coord seed{-1, -1};
    for (int r = 0; r < map.height() && seed.row < 0; ++r) {
        for (int c = 0; c < map.width(); ++c) {
            if (map.at({r, c}) == Cell::Free) {
                seed = {r, c};
                break;
            }
        }
    }

    std::vector<char> seen(static_cast<std::size_t>(map.cell_count()), 0);
    std::deque<Coord> queue{seed};
    seen[static_cast<std::size_t>(map.index(seed))] = 1;
    int reached = 1;
    while (!queue.empty()) {
        const Coord cur = queue.front();
        queue.pop_front();
        for (const auto& [dr, dc] : kNeighborSteps) {
            const Coord next{cur.row + dr, cur.col + dc};
            if (!map.is_free(next)) continue;
            char& slot = seen[static_cast<std::size_t>(map.index(next))];
            if (slot) continue;
            slot = 1;
            ++reached;
            queue.push_back(next);
        }
    }
    return reached == total;
}

}  // namespace msmrta
