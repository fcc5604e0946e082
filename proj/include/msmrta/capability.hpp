#pragma once

#include <utility>
#include <vector>

#include "msmrta/entities.hpp"

namespace msmrta {

// Victim requirement matrix Q (one row per victim) and robot capability
// matrix P. P is stored robot-major (one row per robot); the comparison
// matrix is u[v][r] = q_v . p_r.
struct CapabilityMatrices {
    std::vector<CapVector> q;  // M x nr
    std::vector<CapVector> p;  // N x nr

    int victim_count() const { return static_cast<int>(q.size()); }
    int robot_count() const { return static_cast<int>(p.size()); }
    int requirement_count() const { return q.empty() ? (p.empty() ? 0 : static_cast<int>(p[0].size())) : static_cast<int>(q[0].size()); }
};

CapabilityMatrices build_matrices(const std::vector<VictimRecord>& victims,
                                  const std::vector<RescueRobot>& robots);

struct ReqAnalysisIntermediate {
    std::vector<std::vector<int>> u;  // M x N, requirements of v that robot r covers
    std::vector<int> s;               // per-victim total requirement count
};

// All id lists are sorted ascending. l_full / l_partial are indexed by
// robot and hold victim ids; l_potential is indexed by victim position and
// requirement kind and holds robot ids.
struct ReqAnalysisResult {
    std::vector<std::vector<int>> l_full;
    std::vector<std::vector<int>> l_partial;
    std::vector<std::vector<std::vector<int>>> l_potential;
};

struct UnavailableList {
    std::vector<std::pair<int, int>> entries;  // (victim id, requirement index)
};

// Matrix-form requirement analysis. Victim ids in the outputs are taken
// from `victims`, which must be sorted by id and row-aligned with mats.q.
std::pair<ReqAnalysisResult, ReqAnalysisIntermediate> reqment_analysis(
    const CapabilityMatrices& mats, const std::vector<VictimRecord>& victims);

UnavailableList missing_cap(const CapabilityMatrices& mats, const ReqAnalysisResult& result,
                            const std::vector<VictimRecord>& victims);

}  // namespace msmrta
