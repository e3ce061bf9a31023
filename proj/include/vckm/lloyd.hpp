#pragma once

#include <cstdint>

#include "vckm/clustering.hpp"
#include "vckm/rational.hpp"
#include "vckm/reduction.hpp"

namespace vckm {

struct LloydOutcome {
    Clustering clustering;
    Rational cost;
    int iterations = 0;
    bool converged = false;
};

// Deterministic Lloyd iteration on the instance's 0/1 points. Centers start
// from farthest-point traversal seeded at point (seed mod #points); each pass
// assigns every point to the nearest centroid (lowest cluster id on ties)
// and recomputes centroids. Distances are compared in exact integer
// arithmetic, so ties and the final cost are exact. A cluster left empty is
// reseeded with the point farthest from its own centroid.
LloydOutcome lloyd(const KMeansInstance& inst, std::uint64_t seed, int max_iters = 100);

}  // namespace vckm
