#include "vckm/lloyd.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace vckm {

namespace {

// Squared distance between two 0/1 indicator points: 4 - 2 * shared endpoints.
int point_dist2(const Edge& a, const Edge& b) {
    int shared = (a.u == b.u) + (a.u == b.v) + (a.v == b.u) + (a.v == b.v);
    return 4 - 2 * shared;
}

struct ClusterStats {
    std::int64_t size = 0;
    std::int64_t sumsq = 0;             // sum of squared coordinate multiplicities
    std::vector<std::int64_t> mult;     // vertex -> number of cluster edges there

    // squared distance from point (i, j) to the centroid, scaled by size^2
    std::int64_t scaled_dist(const Edge& p) const {
        return 2 * size * size - 2 * size * (mult[p.u] + mult[p.v]) + sumsq;
    }
};

std::vector<ClusterStats> compute_stats(const KMeansInstance& inst, const std::vector<int>& assignment,
                                        int k) {
    std::vector<ClusterStats> stats(k);
    for (auto& s : stats) s.mult.assign(inst.dimension, 0);
    for (int p = 0; p < (int)assignment.size(); ++p) {
        ClusterStats& s = stats[assignment[p]];
        const Edge& e = inst.points[p];
        s.size++;
        // maintain sumsq incrementally: (d+1)^2 - d^2 = 2d + 1
        s.sumsq += 2 * s.mult[e.u] + 1;
        s.mult[e.u]++;
        s.sumsq += 2 * s.mult[e.v] + 1;
        s.mult[e.v]++;
    }
    return stats;
}

// dist(a) < dist(b) with dist = scaled/size^2, compared exactly
bool closer(std::int64_t scaled_a, std::int64_t size_a, std::int64_t scaled_b, std::int64_t size_b) {
    return (__int128)scaled_a * size_b * size_b < (__int128)scaled_b * size_a * size_a;
}

}  // namespace

LloydOutcome lloyd(const KMeansInstance& inst, std::uint64_t seed, int max_iters) {
    int m = (int)inst.points.size();
    int k = inst.k;
    if (k < 1 || k > m) throw std::invalid_argument("lloyd: k outside [1, #points]");
    if (max_iters < 1) throw std::invalid_argument("lloyd: max_iters must be positive");

    // farthest-point start from the seeded point
    std::vector<int> centers{(int)(seed % (std::uint64_t)m)};
    std::vector<int> nearest(m, std::numeric_limits<int>::max());
    while ((int)centers.size() < k) {
        for (int p = 0; p < m; ++p)
            nearest[p] = std::min(nearest[p], point_dist2(inst.points[p], inst.points[centers.back()]));
        int pick = 0;
        for (int p = 1; p < m; ++p)
            if (nearest[p] > nearest[pick]) pick = p;
        centers.push_back(pick);
    }

    std::vector<int> assignment(m, -1);
    for (int p = 0; p < m; ++p) {
        int best = 0, best_d = point_dist2(inst.points[p], inst.points[centers[0]]);
        for (int c = 1; c < k; ++c) {
            int d = point_dist2(inst.points[p], inst.points[centers[c]]);
            if (d < best_d) {
                best = c;
                best_d = d;
            }
        }
        assignment[p] = best;
    }

    LloydOutcome out;
    for (int iter = 1; iter <= max_iters; ++iter) {
        out.iterations = iter;
        std::vector<ClusterStats> stats = compute_stats(inst, assignment, k);

        std::vector<int> next(m);
        for (int p = 0; p < m; ++p) {
            int best = -1;
            std::int64_t best_scaled = 0;
            for (int c = 0; c < k; ++c) {
                if (stats[c].size == 0) continue;
                std::int64_t scaled = stats[c].scaled_dist(inst.points[p]);
                if (best < 0 || closer(scaled, stats[c].size, best_scaled, stats[best].size)) {
                    best = c;
                    best_scaled = scaled;
                }
            }
            next[p] = best;
        }

        // reseed any cluster left empty with the point farthest from its own centroid
        std::vector<ClusterStats> nstats = compute_stats(inst, next, k);
        for (int c = 0; c < k; ++c) {
            if (nstats[c].size != 0) continue;
            int pick = -1;
            for (int p = 0; p < m; ++p) {
                const ClusterStats& s = nstats[next[p]];
                if (s.size < 2) continue;
                if (pick < 0 ||
                    closer(nstats[next[pick]].scaled_dist(inst.points[pick]), nstats[next[pick]].size,
                           s.scaled_dist(inst.points[p]), s.size))
                    pick = p;
            }
            if (pick < 0) throw std::logic_error("lloyd: cannot repair empty cluster");
            next[pick] = c;
            nstats = compute_stats(inst, next, k);
        }

        if (next == assignment) {
            out.converged = true;
            break;
        }
        assignment = std::move(next);
    }

    out.clustering = Clustering::from_assignment(std::move(assignment));
    out.cost = total_cost(inst, out.clustering);
    return out;
}

}  // namespace vckm
