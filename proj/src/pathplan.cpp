#include "msmrta/pathplan.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace msmrta {

namespace {

struct OpenNode {
    int f;
    long long tick;  // insertion order, FIFO among equal f
    int idx;
    int g;
};

struct OpenNodeGreater {
    bool operator()(const OpenNode& a, const OpenNode& b) const {
        if (a.f != b.f) return a.f > b.f;
        return a.tick > b.tick;
    }
};

}  // namespace

std::optional<Path> astar(const GridMap& map, Coord start, Coord goal, AStarStats* stats) {
    if (!map.is_free(start) || !map.is_free(goal)) {
        throw std::invalid_argument("astar: start and goal must be Free cells");
    }

    const int cells = map.cell_count();
    std::vector<int> g(static_cast<std::size_t>(cells), std::numeric_limits<int>::max());
    std::vector<int> parent(static_cast<std::size_t>(cells), -1);
    std::vector<char> closed(static_cast<std::size_t>(cells), 0);

    std::priority_queue<OpenNode, std::vector<OpenNode>, OpenNodeGreater> open;
    long long tick = 0;
    const int start_idx = map.index(start);
    const int goal_idx = map.index(goal);
    g[static_cast<std::size_t>(start_idx)] = 0;
    open.push({manhattan(start, goal), tick++, start_idx, 0});

    while (!open.empty()) {
        const OpenNode node = open.top();
        open.pop();
        if (closed[static_cast<std::size_t>(node.idx)]) continue;
        if (node.g != g[static_cast<std::size_t>(node.idx)]) continue;  // stale entry
        closed[static_cast<std::size_t>(node.idx)] = 1;
        if (stats) {
            ++stats->expanded;
            stats->max_expanded_g = std::max(stats->max_expanded_g, node.g);
        }
        if (node.idx == goal_idx) {
            Path path;
            path.cost = node.g;
            for (int at = goal_idx; at != -1; at = parent[static_cast<std::size_t>(at)]) {
                path.waypoints.push_back({at / map.width(), at % map.width()});
            }
            std::reverse(path.waypoints.begin(), path.waypoints.end());
            return path;
        }

        const Coord cur{node.idx / map.width(), node.idx % map.width()};
        for (const auto& [dr, dc] : kNeighborSteps) {
            const Coord next{cur.row + dr, cur.col + dc};
            if (!map.is_free(next)) continue;
            const int next_idx = map.index(next);
            if (closed[static_cast<std::size_t>(next_idx)]) continue;
            const int tentative = node.g + 1;
            if (tentative < g[static_cast<std::size_t>(next_idx)]) {
                g[static_cast<std::size_t>(next_idx)] = tentative;
                parent[static_cast<std::size_t>(next_idx)] = node.idx;
                open.push({tentative + manhattan(next, goal), tick++, next_idx, tentative});
            }
        }
    }
    return std::nullopt;
}

std::optional<int> astar_cost(const GridMap& map, Coord start, Coord goal, PlanStats* stats) {
    if (stats) ++stats->astar_calls;
    const auto path = astar(map, start, goal);
    if (!path) return std::nullopt;
    return path->cost;
}

}  // namespace msmrta
