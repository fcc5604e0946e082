#include "msmrta/scouting.hpp"

#include <algorithm>
#include <stdexcept>

namespace msmrta {

Coord step_policy(const Scout& scout, const SearchTable& table, const GridMap& map, Rng& rng) {
    Coord candidates[4];
    int counts[4];
    int n = 0;
    for (const auto& [dr, dc] : kNeighborSteps) {
        const Coord next{scout.position.row + dr, scout.position.col + dc};
        if (!map.is_free(next)) continue;
        candidates[n] = next;
        counts[n] = table.visits(next);
        ++n;
    }
    if (n == 0) return scout.position;  // boxed in

    int best = counts[0];
    for (int i = 1; i < n; ++i) best = std::min(best, counts[i]);
    Coord ties[4];
    int n_ties = 0;
    for (int i = 0; i < n; ++i) {
        if (counts[i] == best) ties[n_ties++] = candidates[i];
    }
    if (n_ties == 1) return ties[0];
    return ties[rng.index(static_cast<std::size_t>(n_ties))];
}

std::vector<VictimRecord> detect(const Scout& scout, const GridMap& map,
                                 const std::vector<VictimRecord>& victims) {
    std::vector<VictimRecord> out;
    for (const VictimRecord& v : victims) {
        if (chebyshev(scout.position, v.location) > scout.vfd) continue;
        if (!line_of_sight(map, scout.position, v.location)) continue;
        out.push_back(v);
    }
    return out;
}

ScoutResult scout_mission(const GridMap& map, std::vector<Scout> scouts,
                          const std::vector<VictimRecord>& ground_truth, std::uint64_t seed,
                          long step_limit) {
    if (scouts.empty()) throw std::invalid_argument("scout_mission: no scouts");
    for (const Scout& s : scouts) {
        if (!map.is_free(s.position)) {
            throw std::invalid_argument("scout_mission: scout start must be a Free cell");
        }
    }
    std::sort(scouts.begin(), scouts.end(),
              [](const Scout& a, const Scout& b) { return a.id < b.id; });

    // Victims indexed by cell so detection coincides exactly with the
    // cell-observation rule.
    std::vector<int> victim_at(static_cast<std::size_t>(map.cell_count()), -1);
    for (std::size_t i = 0; i < ground_truth.size(); ++i) {
        victim_at[static_cast<std::size_t>(map.index(ground_truth[i].location))] =
            static_cast<int>(i);
    }

    std::vector<char> observed(static_cast<std::size_t>(map.cell_count()), 0);
    std::vector<char> found(ground_truth.size(), 0);
    const int free_total = map.free_cell_count();
    int observed_free = 0;

    const auto observe_from = [&](const Scout& s) {
        for (int dr = -s.vfd; dr <= s.vfd; ++dr) {
            for (int dc = -s.vfd; dc <= s.vfd; ++dc) {
                const Coord cell{s.position.row + dr, s.position.col + dc};
                if (!map.in_bounds(cell)) continue;
                char& slot = observed[static_cast<std::size_t>(map.index(cell))];
                if (slot) continue;
                if (!line_of_sight(map, s.position, cell)) continue;
                slot = 1;
                if (map.at(cell) == Cell::Free) ++observed_free;
                const int vi = victim_at[static_cast<std::size_t>(map.index(cell))];
                if (vi >= 0) found[static_cast<std::size_t>(vi)] = 1;
            }
        }
    };

    Rng rng(seed);
    SearchTable table(map);
    for (const Scout& s : scouts) {
        table.record_visit(s.position);
        observe_from(s);
    }

    int rounds = 0;
    while (observed_free < free_total) {
        if (step_limit > 0 && rounds >= step_limit) break;
        for (Scout& s : scouts) {
            s.position = step_policy(s, table, map, rng);
            table.record_visit(s.position);
            observe_from(s);
        }
        ++rounds;
    }

    ScoutResult result;
    result.steps_taken = rounds;
    result.complete = (observed_free == free_total);
    for (std::size_t i = 0; i < ground_truth.size(); ++i) {
        if (found[i]) result.found.push_back(ground_truth[i]);
    }
    std::sort(result.found.begin(), result.found.end(),
              [](const VictimRecord& a, const VictimRecord& b) { return a.id < b.id; });
    return result;
}

}  // namespace msmrta
