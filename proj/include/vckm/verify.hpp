#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vckm/clustering.hpp"
#include "vckm/graph.hpp"
#include "vckm/rational.hpp"
#include "vckm/reduction.hpp"

namespace vckm {

enum class Verdict { pass, fail, not_applicable };

std::string verdict_name(Verdict v);

// One check over one instance. Failing reports carry a reproducible witness;
// everything recorded is exact, so reruns are byte-identical.
struct CheckReport {
    std::string name;
    std::string instance;
    Verdict verdict = Verdict::pass;
    std::vector<std::pair<std::string, std::string>> facts;
    std::string witness;
    std::vector<CheckReport> sub;

    void fact(const std::string& key, const std::string& value) { facts.push_back({key, value}); }
    void fail_with(const std::string& w) {
        verdict = Verdict::fail;
        if (witness.empty()) witness = w;
    }
    // pass or not_applicable, recursively
    bool ok() const;

    std::string to_text(int indent = 0) const;
    std::string to_json_string() const;
};

enum class SubsetMode { exhaustive, sampled };

// Override point for fault-injection tests; the default is the exact
// closed-form cluster cost.
using ClusterCostFn = std::function<Rational(const KMeansInstance&, std::span<const int>)>;

struct VerifyOptions {
    int kmeans_cap = 15;              // exact solver budget (#points)
    int vc_brute_cap = 20;            // subset-enumeration oracle budget (#vertices)
    long long vc_node_budget = 50'000'000;
    int samples_per_size = 20;        // sampled subset mode
    bool strict_resources = false;    // rethrow resource_error instead of reporting n/a
};

// Cost bounds, the star/triangle equality characterization, and two-vertex
// coverage, over all edge subsets (exhaustive needs |E| <= 12) or seeded
// samples per size.
CheckReport check_cost_lemma(const Graph& g, SubsetMode mode, std::uint64_t seed,
                             const VerifyOptions& opt = {}, const ClusterCostFn& cost_fn = {});

// Vertex/edge counts, triangle-freeness, and the degree bound of the gadget.
CheckReport check_gadget(const SplitGraph& sg);

// mvc(G') = mvc(G) + |E1|, established via both exact oracles and both
// cover converters.
CheckReport check_cover_shift(const SplitGraph& sg, const VerifyOptions& opt = {});

// Lift an optimal cover within budget t and verify the star clustering costs
// exactly #points - k. Not applicable when mvc(G) > t.
CheckReport check_completeness(const SplitGraph& sg, int t, const VerifyOptions& opt = {});

// The exact optimum respects points - k + max(0, mvc(G') - k)/3, and cover
// extraction from the optimal clustering is valid and within its size bound.
CheckReport check_soundness(const SplitGraph& sg, int t, const VerifyOptions& opt = {});

// partition -> split -> build -> completeness -> soundness -> cover shift,
// plus the gap identity: optimum == #points - k exactly when mvc(G') <= k.
CheckReport end_to_end(const Graph& g, int t, const VerifyOptions& opt = {});

}  // namespace vckm
