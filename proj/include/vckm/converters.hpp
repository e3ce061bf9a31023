#pragma once

#include <array>
#include <vector>

#include "vckm/clustering.hpp"
#include "vckm/rational.hpp"
#include "vckm/reduction.hpp"
#include "vckm/vertex_cover.hpp"

namespace vckm {

// Cover direction: one star cluster per cover vertex. Each edge is assigned
// to a covering endpoint (the lower id when both are covered); when fewer
// than k clusters come out nonempty, the largest cluster repeatedly donates
// its highest point to a fresh singleton until exactly k remain. Every
// cluster is a star, so the total cost is #points - k exactly.
// Throws if sprime does not cover the split graph or |sprime| > k.
Clustering cover_to_clustering(const KMeansInstance& inst, const SplitGraph& sg,
                               const VertexCover& sprime);

// Accounting emitted by the clustering direction.
struct CoverExtraction {
    VertexCover cover;  // valid cover of the split graph
    int star_count = 0;
    int k_used = 0;                           // nonempty clusters
    std::vector<std::array<int, 2>> chosen;   // per cluster {v, v'}, v' = -1 for stars
    std::vector<int> leftover_edges;          // gprime edge indices no chosen vertex covers
    Rational size_bound;                      // s + 2(k_used - s) + sum(cost_i - (l_i - 1))
};

// Clustering direction: stars contribute their hub, other clusters the best
// covering pair, and every edge still uncovered contributes its lower
// endpoint. The returned cover always satisfies size <= size_bound.
CoverExtraction clustering_to_cover(const KMeansInstance& inst, const SplitGraph& sg,
                                    const Clustering& c);

}  // namespace vckm
