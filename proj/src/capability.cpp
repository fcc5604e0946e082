#include "msmrta/capability.hpp"

#include <algorithm>
#include <stdexcept>

namespace msmrta {

int victim_pos(const std::vector<VictimRecord>& victims, int id) {
    const auto it = std::lower_bound(victims.begin(), victims.end(), id,
                                     [](const VictimRecord& v, int key) { return v.id < key; });
    if (it == victims.end() || it->id != id) {
        throw std::invalid_argument("unknown victim id " + std::to_string(id));
    }
    return static_cast<int>(it - victims.begin());
}

CapabilityMatrices build_matrices(const std::vector<VictimRecord>& victims,
                                  const std::vector<RescueRobot>& robots) {
    CapabilityMatrices mats;
    mats.q.reserve(victims.size());
    for (const VictimRecord& v : victims) mats.q.push_back(v.requirements);
    mats.p.reserve(robots.size());
    for (const RescueRobot& r : robots) mats.p.push_back(r.capabilities);
    return mats;
}

std::pair<ReqAnalysisResult, ReqAnalysisIntermediate> reqment_analysis(
    const CapabilityMatrices& mats, const std::vector<VictimRecord>& victims) {
    const int m = mats.victim_count();
    const int n = mats.robot_count();
    const int nr = mats.requirement_count();

    ReqAnalysisIntermediate inter;
    inter.u.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), 0));
    inter.s.assign(static_cast<std::size_t>(m), 0);

    for (int v = 0; v < m; ++v) {
        int total = 0;
        for (int j = 0; j < nr; ++j) total += mats.q[v][j];
        if (total == 0) {
            throw std::invalid_argument("victim " + std::to_string(victims[v].id) +
                                        " has an empty requirement vector");
        }
        inter.s[v] = total;
        for (int r = 0; r < n; ++r) {
            int dot = 0;
            for (int j = 0; j < nr; ++j) dot += mats.q[v][j] * mats.p[r][j];
            inter.u[v][r] = dot;
        }
    }

    ReqAnalysisResult res;
    res.l_full.assign(static_cast<std::size_t>(n), {});
    res.l_partial.assign(static_cast<std::size_t>(n), {});
    for (int r = 0; r < n; ++r) {
        for (int v = 0; v < m; ++v) {
            if (inter.u[v][r] == 0) continue;
            if (inter.u[v][r] == inter.s[v]) {
                res.l_full[r].push_back(victims[v].id);
            } else {
                res.l_partial[r].push_back(victims[v].id);
            }
        }
    }

    // Robot r is a candidate for (v, j) iff the victim needs j and the
    // robot has it; computed directly from the definition.
    res.l_potential.assign(static_cast<std::size_t>(m),
                           std::vector<std::vector<int>>(static_cast<std::size_t>(nr)));
    for (int v = 0; v < m; ++v) {
        for (int j = 0; j < nr; ++j) {
            if (!mats.q[v][j]) continue;
            for (int r = 0; r < n; ++r) {
                if (mats.p[r][j]) res.l_potential[v][j].push_back(r);
            }
        }
    }

    return {std::move(res), std::move(inter)};
}

UnavailableList missing_cap(const CapabilityMatrices& mats, const ReqAnalysisResult& result,
                            const std::vector<VictimRecord>& victims) {
    UnavailableList out;
    const int m = mats.victim_count();
    const int nr = mats.requirement_count();
    for (int v = 0; v < m; ++v) {
        for (int j = 0; j < nr; ++j) {
            if (mats.q[v][j] && result.l_potential[v][j].empty()) {
                out.entries.emplace_back(victims[v].id, j);
            }
        }
    }
    return out;
}

}  // namespace msmrta
