#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "msmrta/entities.hpp"

namespace msmrta {

struct Clustering {
    int k = 0;
    std::vector<int> assignment;                  // per victim position -> cluster index
    std::vector<std::pair<double, double>> means; // per cluster (row, col) means
    std::vector<Coord> centers;                   // rounded means; Free once snapped
};

// Lloyd's algorithm with k-means++ seeding, squared-Euclidean metric on
// (row, col). Empty clusters are re-seeded with the point farthest from its
// center. Returns rounded integer centers; call snap_centers before using
// them as navigation goals.
Clustering kmeans(const std::vector<VictimRecord>& victims, int k, std::uint64_t seed);

// Moves each non-empty cluster's center to the nearest Free cell (Manhattan
// distance, ties by (row, col) lexicographic order).
void snap_centers(const GridMap& map, Clustering& clustering);

// Sum over victims of squared Euclidean distance to their cluster mean.
double clustering_sse(const Clustering& clustering, const std::vector<VictimRecord>& victims);

struct ClusterPlan {
    std::vector<std::vector<int>> order;  // per cluster: victim ids in priority order
    std::vector<int> excluded;            // victim ids removed by the obstacle filter
};

// Excludes a victim when the obstacle-aware shortest path from its cluster
// center exceeds the Manhattan distance (or no path exists); orders the
// survivors by (manhattan-to-center, victim id). Centers must be snapped.
ClusterPlan obstacle_filter(const GridMap& map, const Clustering& clustering,
                            const std::vector<VictimRecord>& victims);

}  // namespace msmrta
