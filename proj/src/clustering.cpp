#include "msmrta/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "msmrta/rng.hpp"

namespace msmrta {

namespace {

double sq_dist(std::pair<double, double> a, std::pair<double, double> b) {
    const double dr = a.first - b.first;
    const double dc = a.second - b.second;
    return dr * dr + dc * dc;
}

std::pair<double, double> to_point(Coord c) {
    return {static_cast<double>(c.row), static_cast<double>(c.col)};
}

// Single-source BFS distance field; -1 marks unreachable cells.
std::vector<int> bfs_field(const GridMap& map, Coord src) {
    std::vector<int> dist(static_cast<std::size_t>(map.cell_count()), -1);
    dist[static_cast<std::size_t>(map.index(src))] = 0;
    std::deque<Coord> queue{src};
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
            queue.push_back(next);
        }
    }
    return dist;
}

}  // namespace

Clustering kmeans(const std::vector<VictimRecord>& victims, int k, std::uint64_t seed) {
    const int n = static_cast<int>(victims.size());
    if (n == 0) throw std::invalid_argument("kmeans: empty victim list");
    if (k < 1 || k > n) throw std::invalid_argument("kmeans: k must be in [1, victim count]");

    std::vector<std::pair<double, double>> pts;
    pts.reserve(victims.size());
    for (const VictimRecord& v : victims) pts.push_back(to_point(v.location));

    Rng rng(seed);

    // k-means++ seeding.
    std::vector<std::pair<double, double>> means;
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    {
        const std::size_t first = rng.index(static_cast<std::size_t>(n));
        means.push_back(pts[first]);
        chosen[first] = 1;
    }
    while (static_cast<int>(means.size()) < k) {
        std::vector<double> d2(static_cast<std::size_t>(n), 0.0);
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : means) best = std::min(best, sq_dist(pts[i], c));
            d2[i] = best;
            total += best;
        }
        int pick = -1;
        if (total <= 0.0) {
            // All remaining points coincide with chosen centers.
            for (int i = 0; i < n; ++i) {
                if (!chosen[i]) {
                    pick = i;
                    break;
                }
            }
        } else {
            const double x = rng.uniform01() * total;
            double acc = 0.0;
            for (int i = 0; i < n; ++i) {
                acc += d2[i];
                if (x < acc) {
                    pick = i;
                    break;
                }
            }
            if (pick < 0) {  // numeric edge: x landed on the last positive weight
                for (int i = n - 1; i >= 0; --i) {
                    if (d2[i] > 0.0) {
                        pick = i;
                        break;
                    }
                }
            }
        }
        means.push_back(pts[pick]);
        chosen[pick] = 1;
    }

    // Lloyd iterations until assignments are stable.
    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    constexpr int kMaxIters = 1000;
    for (int iter = 0; iter < kMaxIters; ++iter) {
        std::vector<int> next(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            int best_c = 0;
            for (int c = 0; c < k; ++c) {
                const double d = sq_dist(pts[i], means[c]);
                if (d < best) {
                    best = d;
                    best_c = c;
                }
            }
            next[i] = best_c;
        }

        // Re-seed empty clusters with the point farthest from its center,
        // drawn from clusters that keep at least one member.
        std::vector<int> count(static_cast<std::size_t>(k), 0);
        for (const int c : next) ++count[c];
        bool repaired = false;
        for (int c = 0; c < k; ++c) {
            if (count[c] > 0) continue;
            double far_d = -1.0;
            int far_i = -1;
            for (int i = 0; i < n; ++i) {
                if (count[next[i]] < 2) continue;
                const double d = sq_dist(pts[i], means[next[i]]);
                if (d > far_d) {
                    far_d = d;
                    far_i = i;
                }
            }
            --count[next[far_i]];
            next[far_i] = c;
            ++count[c];
            repaired = true;
        }

        const bool stable = (next == assign) && !repaired;
        assign = std::move(next);
        if (stable) break;

        for (int c = 0; c < k; ++c) means[c] = {0.0, 0.0};
        for (int i = 0; i < n; ++i) {
            means[assign[i]].first += pts[i].first;
            means[assign[i]].second += pts[i].second;
        }
        for (int c = 0; c < k; ++c) {
            means[c].first /= count[c];
            means[c].second /= count[c];
        }
    }

    Clustering out;
    out.k = k;
    out.assignment = std::move(assign);
    out.means = means;
    out.centers.reserve(means.size());
    for (const auto& m : means) {
        out.centers.push_back({static_cast<int>(std::lround(m.first)),
                               static_cast<int>(std::lround(m.second))});
    }
    return out;
}

void snap_centers(const GridMap& map, Clustering& clustering) {
    for (int c = 0; c < clustering.k; ++c) {
        const bool empty = std::none_of(clustering.assignment.begin(), clustering.assignment.end(),
                                        [c](int a) { return a == c; });
        if (empty) continue;

        Coord base = clustering.centers[c];
        base.row = std::clamp(base.row, 0, map.height() - 1);
        base.col = std::clamp(base.col, 0, map.width() - 1);

        const int max_radius = map.width() + map.height();
        for (int d = 0; d <= max_radius; ++d) {
            Coord found{-1, -1};
            for (int r = base.row - d; r <= base.row + d && found.row < 0; ++r) {
                const int rem = d - std::abs(r - base.row);
                for (const int col : {base.col - rem, base.col + rem}) {
                    const Coord cand{r, col};
                    if (map.is_free(cand)) {
                        found = cand;
                        break;
                    }
                    if (rem == 0) break;  // single candidate on this row
                }
            }
            if (found.row >= 0) {
                clustering.centers[c] = found;
                break;
            }
        }
    }
}

double clustering_sse(const Clustering& clustering, const std::vector<VictimRecord>& victims) {
    double sse = 0.0;
    for (std::size_t i = 0; i < victims.size(); ++i) {
        sse += sq_dist(to_point(victims[i].location), clustering.means[clustering.assignment[i]]);
    }
    return sse;
}

ClusterPlan obstacle_filter(const GridMap& map, const Clustering& clustering,
                            const std::vector<VictimRecord>& victims) {
    ClusterPlan plan;
    plan.order.assign(static_cast<std::size_t>(clustering.k), {});

    for (int c = 0; c < clustering.k; ++c) {
        std::vector<int> members;  // victim positions
        for (std::size_t i = 0; i < victims.size(); ++i) {
            if (clustering.assignment[i] == c) members.push_back(static_cast<int>(i));
        }
        if (members.empty()) continue;

        const Coord center = clustering.centers[c];
        if (!map.is_free(center)) {
            throw std::invalid_argument("obstacle_filter: cluster center not snapped to a Free cell");
        }
        const std::vector<int> dist = bfs_field(map, center);

        struct Entry {
            int m_dist;
            int id;
        };
        std::vector<Entry> kept;
        for (const int i : members) {
            const VictimRecord& v = victims[static_cast<std::size_t>(i)];
            const int m_dist = manhattan(center, v.location);
            const int true_dist = dist[static_cast<std::size_t>(map.index(v.location))];
            if (true_dist < 0 || true_dist > m_dist) {
                plan.excluded.push_back(v.id);
            } else {
                kept.push_back({m_dist, v.id});
            }
        }
        std::sort(kept.begin(), kept.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.m_dist, a.id) < std::tie(b.m_dist, b.id);
        });
        for (const Entry& e : kept) plan.order[c].push_back(e.id);
    }

    std::sort(plan.excluded.begin(), plan.excluded.end());
    return plan;
}

}  // namespace msmrta
