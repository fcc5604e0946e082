#pragma once

#include <optional>
#include <vector>

#include "msmrta/entities.hpp"

namespace msmrta {

struct Path {
    std::vector<Coord> waypoints;  // consecutive entries are 4-adjacent
    int cost = 0;                  // waypoint count - 1
};

struct AStarStats {
    long long expanded = 0;
    int max_expanded_g = 0;
};

// Counts A* invocations across a planning phase; the benchmark rows and the
// baseline's complexity check both read it.
struct PlanStats {
    long long astar_calls = 0;
};

// Minimum-cost 4-connected path with Manhattan heuristic. Open-list ties
// break on (f, insertion order) so the expansion order is deterministic.
// Returns nullopt when the goal is unreachable.
std::optional<Path> astar(const GridMap& map, Coord start, Coord goal,
                          AStarStats* stats = nullptr);

std::optional<int> astar_cost(const GridMap& map, Coord start, Coord goal,
                              PlanStats* stats = nullptr);

}  // namespace msmrta
