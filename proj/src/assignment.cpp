#include "msmrta/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace msmrta {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Square minimum-cost perfect matching via the potentials method (O(n^3)).
// Returns row -> col.
std::vector<int> hungarian_min_square(const std::vector<std::vector<double>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> rowsol(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j) {
        if (p[j]) rowsol[p[j] - 1] = j - 1;
    }
    return rowsol;
}

struct LapProblem {
    int rows = 0;
    int cols = 0;
    double sign = 1.0;  // +1 minimize, -1 maximize
    double large = 1.0; // cardinality incentive
    std::vector<std::vector<char>> allowed;
    const std::vector<std::vector<double>>* cost = nullptr;
};

// Optimal matching on the rows/cols not yet pinned down. `row_used` and
// `col_used` mark the pinned ones. Returns (cardinality, signed total).
std::pair<int, double> solve_free(const LapProblem& prob, const std::vector<char>& row_used,
                                  const std::vector<char>& col_used,
                                  std::vector<std::pair<int, int>>* out_pairs) {
    std::vector<int> rows;
    std::vector<int> cols;
    for (int r = 0; r < prob.rows; ++r) {
        if (!row_used[r]) rows.push_back(r);
    }
    for (int c = 0; c < prob.cols; ++c) {
        if (!col_used[c]) cols.push_back(c);
    }
    const int n = static_cast<int>(std::max(rows.size(), cols.size()));
    if (n == 0) return {0, 0.0};

    // Real allowed pairs are discounted by `large` so the solver prefers
    // cardinality first; dummy and skipped slots cost zero.
    std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (prob.allowed[rows[i]][cols[j]]) {
                a[i][j] = prob.sign * (*prob.cost)[rows[i]][cols[j]] - prob.large;
            }
        }
    }

    const std::vector<int> rowsol = hungarian_min_square(a);
    int cardinality = 0;
    double signed_total = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int j = rowsol[i];
        if (j < 0 || j >= static_cast<int>(cols.size())) continue;
        if (!prob.allowed[rows[i]][cols[j]]) continue;
        ++cardinality;
        signed_total += prob.sign * (*prob.cost)[rows[i]][cols[static_cast<std::size_t>(j)]];
        if (out_pairs) out_pairs->emplace_back(rows[i], cols[static_cast<std::size_t>(j)]);
    }
    return {cardinality, signed_total};
}

}  // namespace

LapResult solve_linear_assignment(const std::vector<std::vector<double>>& cost, LapSense sense,
                                  const std::function<bool(int, int)>& skip) {
    LapResult result;
    const int rows = static_cast<int>(cost.size());
    const int cols = rows > 0 ? static_cast<int>(cost[0].size()) : 0;
    if (rows == 0 || cols == 0) return result;

    LapProblem prob;
    prob.rows = rows;
    prob.cols = cols;
    prob.sign = (sense == LapSense::Minimize) ? 1.0 : -1.0;
    prob.cost = &cost;
    prob.allowed.assign(static_cast<std::size_t>(rows),
                        std::vector<char>(static_cast<std::size_t>(cols), 1));
    double abs_sum = 0.0;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (skip && skip(r, c)) {
                prob.allowed[r][c] = 0;
            } else {
                if (!std::isfinite(cost[r][c])) {
                    throw std::invalid_argument("solve_linear_assignment: non-finite cost entry");
                }
                abs_sum += std::abs(cost[r][c]);
            }
        }
    }
    prob.large = 2.0 * abs_sum + 1.0;

    std::vector<char> row_used(static_cast<std::size_t>(rows), 0);
    std::vector<char> col_used(static_cast<std::size_t>(cols), 0);
    const auto [best_card, best_total] = solve_free(prob, row_used, col_used, nullptr);
    const double eps = 1e-9 * std::max(1.0, std::abs(best_total));

    // Pin pairs in lexicographic order: a candidate survives if forcing it
    // still reaches the optimal cardinality and total.
    int fixed_card = 0;
    double fixed_total = 0.0;
    for (int r = 0; r < rows && fixed_card < best_card; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (col_used[c] || !prob.allowed[r][c]) continue;
            row_used[r] = 1;
            col_used[c] = 1;
            const double pair_cost = prob.sign * cost[r][c];
            const auto [sub_card, sub_total] = solve_free(prob, row_used, col_used, nullptr);
            if (fixed_card + 1 + sub_card == best_card &&
                fixed_total + pair_cost + sub_total <= best_total + eps) {
                ++fixed_card;
                fixed_total += pair_cost;
                result.pairs.emplace_back(r, c);
                break;
            }
            row_used[r] = 0;
            col_used[c] = 0;
        }
    }

    for (const auto& [r, c] : result.pairs) result.total += cost[r][c];
    return result;
}

ClusterWeights cluster_weights(const ClusterPlan& plan, const ReqAnalysisResult& req,
                               const ReqAnalysisIntermediate& inter,
                               const std::vector<VictimRecord>& victims, int n_robots, double psi) {
    const int k = static_cast<int>(plan.order.size());
    ClusterWeights weights;
    weights.psi = psi;
    weights.w.assign(static_cast<std::size_t>(n_robots),
                     std::vector<double>(static_cast<std::size_t>(k), 0.0));
    weights.w_full = weights.w;

    for (int c = 0; c < k; ++c) {
        for (const int vid : plan.order[c]) {
            const int pos = victim_pos(victims, vid);
            for (int r = 0; r < n_robots; ++r) {
                weights.w[r][c] += inter.u[pos][r];
                if (std::binary_search(req.l_full[r].begin(), req.l_full[r].end(), vid)) {
                    weights.w_full[r][c] += 1.0;
                }
            }
        }
    }
    return weights;
}

void clstr_asgn(const ClusterWeights& weights, const ClusterPlan& plan,
                const ReqAnalysisIntermediate& inter, const std::vector<VictimRecord>& victims,
                int n_robots, AssignmentBundle& bundle) {
    const int k = static_cast<int>(plan.order.size());
    const double psi = weights.psi;

    std::vector<std::vector<double>> combined(static_cast<std::size_t>(n_robots),
                                              std::vector<double>(static_cast<std::size_t>(k), 0.0));
    for (int r = 0; r < n_robots; ++r) {
        for (int c = 0; c < k; ++c) {
            combined[r][c] = (1.0 - psi) * weights.w[r][c] + psi * weights.w_full[r][c];
        }
    }

    // A robot is never dispatched to a cluster where it can serve nothing.
    const LapResult match = solve_linear_assignment(
        combined, LapSense::Maximize, [&combined](int r, int c) { return combined[r][c] <= 0.0; });

    bundle.b2.assign(static_cast<std::size_t>(n_robots), {});
    for (int r = 0; r < n_robots; ++r) bundle.b2[r].robot = r;
    std::vector<char> cluster_assigned(static_cast<std::size_t>(k), 0);
    for (const auto& [r, c] : match.pairs) {
        bundle.b2[r].cluster = c;
        bundle.b2[r].route = plan.order[c];
        cluster_assigned[c] = 1;
    }

    std::vector<int> v_bar = plan.excluded;
    for (int c = 0; c < k; ++c) {
        if (cluster_assigned[c]) continue;
        v_bar.insert(v_bar.end(), plan.order[c].begin(), plan.order[c].end());
    }
    for (const auto& [r, c] : match.pairs) {
        for (const int vid : plan.order[c]) {
            if (inter.u[victim_pos(victims, vid)][r] == 0) v_bar.push_back(vid);
        }
    }
    std::sort(v_bar.begin(), v_bar.end());
    v_bar.erase(std::unique(v_bar.begin(), v_bar.end()), v_bar.end());
    bundle.v_bar_after_b2 = std::move(v_bar);
}

TimeCostMatrices perf_analysis(const GridMap& map, const std::vector<RescueRobot>& robots,
                               const AssignmentBundle& bundle, const ReqAnalysisIntermediate& inter,
                               const std::vector<VictimRecord>& victims, const PerfParams& params,
                               PlanStats* stats) {
    const int n = static_cast<int>(robots.size());
    const int nr = victims.empty() ? 0 : static_cast<int>(victims[0].requirements.size());

    TimeCostMatrices costs;
    costs.beta = params.beta;
    costs.victim_ids = bundle.v_bar_after_b2;
    const int m_bar = static_cast<int>(costs.victim_ids.size());
    costs.t_success.assign(static_cast<std::size_t>(n),
                           std::vector<double>(static_cast<std::size_t>(m_bar), 0.0));
    costs.t_failure = costs.t_success;

    for (int r = 0; r < n; ++r) {
        double success_time = 0.0;
        double failure_time = 0.0;
        Coord pos = robots[r].start;

        for (const int vid : bundle.b2[r].route) {
            const VictimRecord& v = victims[static_cast<std::size_t>(victim_pos(victims, vid))];
            const auto travel = astar_cost(map, pos, v.location, stats);
            if (travel) {
                success_time += *travel;
                pos = v.location;
            }
            for (int j = 0; j < nr; ++j) {
                if (!v.requirements[j]) continue;
                if (robots[r].capabilities[j]) {
                    success_time += params.t_serve;
                } else {
                    failure_time += params.t_attempt;
                }
            }
        }

        for (int col = 0; col < m_bar; ++col) {
            const int pos_v = victim_pos(victims, costs.victim_ids[col]);
            const VictimRecord& v = victims[static_cast<std::size_t>(pos_v)];
            const int covered = inter.u[pos_v][r];
            const int uncovered = inter.s[pos_v] - covered;
            const auto travel = astar_cost(map, pos, v.location, stats);
            costs.t_success[r][col] =
                travel ? success_time + *travel + covered * params.t_serve : kInf;
            costs.t_failure[r][col] = failure_time + uncovered * params.t_attempt;
        }
    }
    return costs;
}

void victim_assign(const TimeCostMatrices& costs, const ReqAnalysisIntermediate& inter,
                   const std::vector<VictimRecord>& victims, AssignmentBundle& bundle) {
    const int n = static_cast<int>(costs.t_success.size());
    const double beta = costs.beta;

    bundle.b3.clear();
    bundle.v_bar_after_b3.clear();
    for (int col = 0; col < static_cast<int>(costs.victim_ids.size()); ++col) {
        const int vid = costs.victim_ids[col];
        const int pos_v = victim_pos(victims, vid);
        int best_robot = -1;
        double best_cost = kInf;
        for (int r = 0; r < n; ++r) {
            if (inter.u[pos_v][r] == 0) continue;
            if (!std::isfinite(costs.t_success[r][col])) continue;
            const double c = (1.0 - beta) * costs.t_success[r][col] + beta * costs.t_failure[r][col];
            if (c < best_cost) {
                best_cost = c;
                best_robot = r;
            }
        }
        if (best_robot >= 0) {
            bundle.b3.emplace_back(best_robot, vid);
        } else {
            bundle.v_bar_after_b3.push_back(vid);
        }
    }
}

void robot_assign(const std::vector<RescueRobot>& robots, const ReqAnalysisResult& req,
                  const CapabilityMatrices& mats, const std::vector<VictimRecord>& victims,
                  AssignmentBundle& bundle) {
    const int nr = mats.requirement_count();

    // Holder of each victim after B2/B3 (clusters are disjoint and B3 only
    // assigns victims outside every route, so there is at most one).
    std::vector<int> holder(victims.size(), -1);
    for (const B2Entry& entry : bundle.b2) {
        for (const int vid : entry.route) holder[victim_pos(victims, vid)] = entry.robot;
    }
    for (const auto& [r, vid] : bundle.b3) holder[victim_pos(victims, vid)] = r;

    bundle.b4.clear();
    for (std::size_t pos = 0; pos < victims.size(); ++pos) {
        const VictimRecord& v = victims[pos];
        const int h = holder[pos];
        if (h >= 0 && std::binary_search(req.l_full[h].begin(), req.l_full[h].end(), v.id)) {
            continue;  // fully satisfied holder; no other robot may take this victim
        }
        for (int j = 0; j < nr; ++j) {
            if (!v.requirements[j]) continue;
            if (h >= 0 && robots[h].capabilities[j]) continue;  // met in B2/B3
            const std::vector<int>& candidates = req.l_potential[pos][j];
            if (candidates.empty()) continue;  // stays on the unavailable list
            int winner = -1;
            int winner_dist = std::numeric_limits<int>::max();
            for (const int r : candidates) {
                const int d = manhattan(robots[r].start, v.location);
                if (d < winner_dist) {
                    winner_dist = d;
                    winner = r;
                }
            }
            bundle.b4.emplace_back(winner, v.id, j);
        }
    }
}

}  // namespace msmrta
