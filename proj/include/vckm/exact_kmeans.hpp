#pragma once

#include <vector>

#include "vckm/clustering.hpp"
#include "vckm/rational.hpp"
#include "vckm/reduction.hpp"

namespace vckm {

struct KMeansSolution {
    Clustering clustering;
    Rational cost;
};

// Globally optimal partition into at most inst.k nonempty clusters, by
// dynamic programming over edge subsets (the cluster holding the lowest
// unassigned point is enumerated canonically, so each partition is visited
// once). Costs are integers over a fixed common denominator lcm(1..m), so DP
// values compare exactly. Reconstruction ties pick the smallest cluster
// bitmask, making the result fully deterministic.
//
// Throws resource_error when #points exceeds cap (default 15, hard limit 18).
KMeansSolution exact_kmeans(const KMeansInstance& inst, int cap = 15);

// Optimal cost for every cluster budget in one pass: entry j (1-based) is
// the optimal cost over partitions into at most j nonempty clusters.
// Entry 0 is unused.
std::vector<Rational> exact_kmeans_profile(const KMeansInstance& inst, int cap = 15);

}  // namespace vckm
