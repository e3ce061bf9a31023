#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vckm/rational.hpp"
#include "vckm/reduction.hpp"

namespace vckm {

// Partition of the instance's point indices. Cluster ids are dense 0..c-1
// with every cluster nonempty.
struct Clustering {
    std::vector<int> assignment;  // point index -> cluster id
    int cluster_count = 0;

    static Clustering from_assignment(std::vector<int> assignment);
    std::vector<std::vector<int>> clusters() const;
};

// Exact centroid-optimal cost of one cluster of edge-indicator points:
// numerator / denominator with denominator = cluster size.
struct ClusterCost {
    std::int64_t numerator = 0;    // 2*l^2 - sum of squared vertex multiplicities
    std::int64_t denominator = 1;  // l = cluster size
    Rational value() const { return Rational(numerator, denominator); }
};

// cost = 2l - (sum_v d_v^2)/l where d_v counts cluster edges at vertex v.
// This is the sum of squared distances to the centroid; it is cross-checked
// against dense_cost_oracle rather than trusted.
ClusterCost cluster_cost(const KMeansInstance& inst, std::span<const int> cluster);

Rational total_cost(const KMeansInstance& inst, const Clustering& c);

// All cluster edges share a vertex (a singleton counts as a 1-star).
bool is_star(const KMeansInstance& inst, std::span<const int> cluster);
// Exactly the three edges of a triangle.
bool is_triangle_cluster(const KMeansInstance& inst, std::span<const int> cluster);

struct PairCoverage {
    int v1 = -1;
    int v2 = -1;
    int covered = 0;
};

// Exhaustive best vertex pair by number of cluster edges covered, ties
// broken lexicographically. The result always covers at least
// ceil(2l - 1 - cost) edges; that floor is asserted.
PairCoverage best_pair_coverage(const KMeansInstance& inst, std::span<const int> cluster);

// "point_index cluster_id" lines, 0-indexed, ascending point order.
std::string serialize_clustering(const Clustering& c);
Clustering parse_clustering(std::string_view text, int expected_points);

}  // namespace vckm
