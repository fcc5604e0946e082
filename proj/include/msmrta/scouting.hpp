#pragma once

#include <cstdint>
#include <vector>

#include "msmrta/entities.hpp"
#include "msmrta/rng.hpp"

namespace msmrta {

struct Scout {
    int id = 0;
    Coord position;
    int vfd = 1;  // visual field depth, Chebyshev radius
};

// Visit counts shared by the whole scout team; obstacle cells stay at zero.
class SearchTable {
public:
    explicit SearchTable(const GridMap& map)
        : width_(map.width()), counts_(static_cast<std::size_t>(map.cell_count()), 0) {}

    int visits(Coord c) const { return counts_[static_cast<std::size_t>(c.row * width_ + c.col)]; }
    void record_visit(Coord c) { ++counts_[static_cast<std::size_t>(c.row * width_ + c.col)]; }

private:
    int width_;
    std::vector<int> counts_;
};

struct ScoutResult {
    std::vector<VictimRecord> found;  // sorted by victim id
    int steps_taken = 0;              // synchronous movement rounds executed
    bool complete = false;            // every Free cell observed
};

// Least-visited-neighbor move; ties break uniformly at random from the
// shared PRNG. Returns the current position when boxed in.
Coord step_policy(const Scout& scout, const SearchTable& table, const GridMap& map, Rng& rng);

// Victims within the scout's VFD square with unobstructed line of sight.
std::vector<VictimRecord> detect(const Scout& scout, const GridMap& map,
                                 const std::vector<VictimRecord>& victims);

// Runs the shared-table grid search until every Free cell has been within
// some scout's VFD with line of sight, or until step_limit rounds elapse
// (step_limit <= 0 means no limit). Scouts move synchronously, one cell per
// round, in ascending scout-id order.
ScoutResult scout_mission(const GridMap& map, std::vector<Scout> scouts,
                          const std::vector<VictimRecord>& ground_truth, std::uint64_t seed,
                          long step_limit);

}  // namespace msmrta
