#pragma once

#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "msmrta/capability.hpp"
#include "msmrta/clustering.hpp"
#include "msmrta/pathplan.hpp"

namespace msmrta {

enum class LapSense { Minimize, Maximize };

struct LapResult {
    std::vector<std::pair<int, int>> pairs;  // (row, col), sorted by row
    double total = 0.0;                      // objective over the returned pairs
};

// Rectangular linear assignment with a skip predicate. Maximum cardinality
// over non-skipped pairs comes first, then the optimal total; remaining ties
// resolve to the lexicographically smallest sorted pair list.
LapResult solve_linear_assignment(const std::vector<std::vector<double>>& cost, LapSense sense,
                                  const std::function<bool(int, int)>& skip = {});

struct ClusterWeights {
    std::vector<std::vector<double>> w;       // N x K, requirements robot r covers in cluster c
    std::vector<std::vector<double>> w_full;  // N x K, victims in c fully satisfied by r
    double psi = 0.5;
};

ClusterWeights cluster_weights(const ClusterPlan& plan, const ReqAnalysisResult& req,
                               const ReqAnalysisIntermediate& inter,
                               const std::vector<VictimRecord>& victims, int n_robots, double psi);

struct B2Entry {
    int robot = 0;
    std::optional<int> cluster;
    std::vector<int> route;  // victim ids in cluster priority order
};

struct AssignmentBundle {
    std::vector<B2Entry> b2;                   // one entry per robot
    std::vector<std::pair<int, int>> b3;       // (robot id, victim id)
    std::vector<std::tuple<int, int, int>> b4; // (robot id, victim id, requirement)
    std::vector<int> v_bar_after_b2;           // victim ids, sorted
    std::vector<int> v_bar_after_b3;
};

// Stage B2: one-to-one robot/cluster matching maximizing
// (1-psi)*w + psi*w_full, skipping pairs with zero combined weight.
void clstr_asgn(const ClusterWeights& weights, const ClusterPlan& plan,
                const ReqAnalysisIntermediate& inter, const std::vector<VictimRecord>& victims,
                int n_robots, AssignmentBundle& bundle);

struct TimeCostMatrices {
    std::vector<int> victim_ids;                 // column order, ascending
    std::vector<std::vector<double>> t_success;  // N x |victim_ids|
    std::vector<std::vector<double>> t_failure;
    double beta = 0.5;
};

struct PerfParams {
    double t_serve = 1.0;
    double t_attempt = 1.0;
    double beta = 0.5;
};

// Replays each robot's B2 route to accumulate success/failure time, then
// prices every remaining victim for every robot. Unreachable pairs get an
// infinite success cost.
TimeCostMatrices perf_analysis(const GridMap& map, const std::vector<RescueRobot>& robots,
                               const AssignmentBundle& bundle, const ReqAnalysisIntermediate& inter,
                               const std::vector<VictimRecord>& victims, const PerfParams& params,
                               PlanStats* stats = nullptr);

// Stage B3: each remaining victim goes to the robot minimizing
// (1-beta)*t_success + beta*t_failure among robots covering at least one of
// its requirements; ties break to the lowest robot id.
void victim_assign(const TimeCostMatrices& costs, const ReqAnalysisIntermediate& inter,
                   const std::vector<VictimRecord>& victims, AssignmentBundle& bundle);

// Stage B4: sealed-bid auction over still-unmet (victim, requirement) pairs;
// the closest capable robot by Manhattan distance from its start wins.
void robot_assign(const std::vector<RescueRobot>& robots, const ReqAnalysisResult& req,
                  const CapabilityMatrices& mats, const std::vector<VictimRecord>& victims,
                  AssignmentBundle& bundle);

}  // namespace msmrta
