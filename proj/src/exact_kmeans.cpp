#include "vckm/exact_kmeans.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

#include "vckm/errors.hpp"

namespace vckm {

namespace {

constexpr std::int64_t kInf = INT64_MAX / 4;

struct SubsetCosts {
    std::int64_t denom = 1;             // lcm of 1..m
    std::vector<std::int64_t> num;      // cost(mask) * denom, integral
};

// cost(mask) = 2l - sumsq/l with l = popcount(mask) and sumsq the sum of
// squared per-vertex edge multiplicities; scaled by lcm(1..m) it is integral.
SubsetCosts subset_costs(const KMeansInstance& inst) {
    int m = (int)inst.points.size();

    std::map<int, int> compact;
    for (const auto& p : inst.points) {
        compact.try_emplace(p.u, (int)compact.size());
        compact.try_emplace(p.v, (int)compact.size());
    }
    std::vector<std::uint32_t> inc(compact.size(), 0);
    std::vector<std::pair<int, int>> ends(m);
    for (int i = 0; i < m; ++i) {
        int cu = compact[inst.points[i].u], cv = compact[inst.points[i].v];
        inc[cu] |= 1u << i;
        inc[cv] |= 1u << i;
        ends[i] = {cu, cv};
    }

    SubsetCosts sc;
    for (int l = 2; l <= m; ++l) sc.denom = std::lcm(sc.denom, (std::int64_t)l);

    std::vector<std::int32_t> sumsq((std::size_t)1 << m, 0);
    sc.num.assign((std::size_t)1 << m, 0);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        int low = std::countr_zero(mask);
        std::uint32_t base = mask & (mask - 1);
        auto [cu, cv] = ends[low];
        sumsq[mask] = sumsq[base] + 2 * std::popcount(base & inc[cu]) + 2 * std::popcount(base & inc[cv]) + 2;
        std::int64_t l = std::popcount(mask);
        sc.num[mask] = (2 * l * l - sumsq[mask]) * (sc.denom / l);
    }
    return sc;
}

struct DpTables {
    SubsetCosts costs;
    // dp[j][S]: scaled optimal cost of partitioning S into exactly j clusters
    std::vector<std::vector<std::int64_t>> dp;
    std::vector<std::vector<std::uint32_t>> choice;  // empty when not recorded
};

DpTables run_dp(const KMeansInstance& inst, int cap, int max_clusters, bool record_choice) {
    int m = (int)inst.points.size();
    if (m > cap)
        throw resource_error("exact_kmeans: " + std::to_string(m) + " points exceeds cap " +
                             std::to_string(cap));
    if (m > 18) throw resource_error("exact_kmeans: hard limit of 18 points");

    DpTables t;
    t.costs = subset_costs(inst);
    std::size_t masks = (std::size_t)1 << m;
    t.dp.assign(max_clusters + 1, std::vector<std::int64_t>(masks, kInf));
    if (record_choice) t.choice.assign(max_clusters + 1, std::vector<std::uint32_t>(masks, 0));
    t.dp[0][0] = 0;

    for (int j = 1; j <= max_clusters; ++j) {
        const auto& prev = t.dp[j - 1];
        auto& cur = t.dp[j];
        for (std::uint32_t s = 1; s < masks; ++s) {
            std::uint32_t low = s & -s;
            std::uint32_t rest = s ^ low;
            std::int64_t best = kInf;
            std::uint32_t best_t = 0;
            std::uint32_t sub = rest;
            while (true) {
                std::uint32_t part = low | sub;
                std::int64_t before = prev[s ^ part];
                if (before < kInf) {
                    std::int64_t cand = before + t.costs.num[part];
                    if (cand < best || (cand == best && part < best_t)) {
                        best = cand;
                        best_t = part;
                    }
                }
                if (sub == 0) break;
                sub = (sub - 1) & rest;
            }
            cur[s] = best;
            if (record_choice) t.choice[j][s] = best_t;
        }
    }
    return t;
}

}  // namespace

KMeansSolution exact_kmeans(const KMeansInstance& inst, int cap) {
    int m = (int)inst.points.size();
    int k = inst.k;
    DpTables t = run_dp(inst, cap, k, true);
    std::uint32_t full = (m == 32) ? ~0u : (1u << m) - 1;

    int best_j = 1;
    for (int j = 2; j <= k; ++j)
        if (t.dp[j][full] < t.dp[best_j][full]) best_j = j;

    std::vector<int> assignment(m, -1);
    std::uint32_t s = full;
    for (int j = best_j, cid = 0; j >= 1; --j, ++cid) {
        std::uint32_t part = t.choice[j][s];
        for (int p = 0; p < m; ++p)
            if (part >> p & 1) assignment[p] = cid;
        s ^= part;
    }

    KMeansSolution sol;
    sol.clustering = Clustering::from_assignment(std::move(assignment));
    sol.cost = Rational(t.dp[best_j][full], t.costs.denom);
    return sol;
}

std::vector<Rational> exact_kmeans_profile(const KMeansInstance& inst, int cap) {
    int m = (int)inst.points.size();
    DpTables t = run_dp(inst, cap, m, false);
    std::uint32_t full = (m == 32) ? ~0u : (1u << m) - 1;

    std::vector<Rational> profile(m + 1, Rational(0));
    std::int64_t running = kInf;
    for (int j = 1; j <= m; ++j) {
        running = std::min(running, t.dp[j][full]);
        profile[j] = Rational(running, t.costs.denom);
    }
    return profile;
}

}  // namespace vckm
