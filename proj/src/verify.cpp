#include "vckm/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "vckm/converters.hpp"
#include "vckm/errors.hpp"
#include "vckm/exact_kmeans.hpp"
#include "vckm/vertex_cover.hpp"

namespace vckm {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "not_applicable";
    }
}

bool CheckReport::ok() const {
    if (verdict == Verdict::fail) return false;
    for (const auto& s : sub)
        if (!s.ok()) return false;
    return true;
}

std::string CheckReport::to_text(int indent) const {
    std::string pad(indent, ' ');
    std::string out = pad + "== check " + name + " ==\n";
    out += pad + "instance: " + instance + "\n";
    out += pad + "verdict: " + verdict_name(verdict) + "\n";
    for (const auto& [key, value] : facts) out += pad + "  " + key + ": " + value + "\n";
    if (!witness.empty()) out += pad + "  witness: " + witness + "\n";
    for (const auto& s : sub) out += s.to_text(indent + 2);
    return out;
}

namespace {

nlohmann::ordered_json to_ordered(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.name;
    j["instance"] = r.instance;
    j["verdict"] = verdict_name(r.verdict);
    auto facts = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.facts) facts[key] = value;
    j["facts"] = facts;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.sub.empty()) {
        auto subs = nlohmann::ordered_json::array();
        for (const auto& s : r.sub) subs.push_back(to_ordered(s));
        j["sub"] = subs;
    }
    return j;
}

std::string graph_summary(const Graph& g) {
    return "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
}

std::string gadget_summary(const SplitGraph& sg) {
    return graph_summary(sg.base) + " e1=" + std::to_string(sg.partition.e1.size()) +
           " e2=" + std::to_string(sg.partition.e2.size());
}

std::string subset_to_string(const KMeansInstance& inst, std::span<const int> cluster) {
    std::string out = "{";
    for (std::size_t i = 0; i < cluster.size(); ++i) {
        const Edge& e = inst.points[cluster[i]];
        if (i) out += ",";
        out += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    }
    return out + "}";
}

// Runs f; on resource_error either rethrows (strict) or downgrades the
// report to not_applicable.
template <class F>
bool with_resources(CheckReport& r, const VerifyOptions& opt, F&& f) {
    try {
        f();
        return true;
    } catch (const resource_error& e) {
        if (opt.strict_resources) throw;
        r.verdict = Verdict::not_applicable;
        r.fact("resource", e.what());
        return false;
    }
}

}  // namespace

std::string CheckReport::to_json_string() const { return to_ordered(*this).dump(2) + "\n"; }

CheckReport check_cost_lemma(const Graph& g, SubsetMode mode, std::uint64_t seed,
                             const VerifyOptions& opt, const ClusterCostFn& cost_fn) {
    CheckReport r;
    r.name = "cost_lemma";
    r.instance = graph_summary(g) + (mode == SubsetMode::exhaustive ? " mode=exhaustive"
                                                                    : " mode=sampled seed=" + std::to_string(seed));
    if (g.edge_count() == 0) {
        r.verdict = Verdict::not_applicable;
        r.fact("reason", "graph has no edges");
        return r;
    }
    if (mode == SubsetMode::exhaustive && g.edge_count() > 12)
        throw std::invalid_argument("check_cost_lemma: exhaustive mode requires at most 12 edges");

    KMeansInstance inst = instance_from_graph(g, 1);
    ClusterCostFn cost = cost_fn;
    if (!cost)
        cost = [](const KMeansInstance& i, std::span<const int> cl) { return cluster_cost(i, cl).value(); };

    int m = g.edge_count();
    std::vector<std::vector<int>> subsets;
    if (mode == SubsetMode::exhaustive) {
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> cl;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) cl.push_back(i);
            subsets.push_back(std::move(cl));
        }
    } else {
        std::mt19937_64 rng(seed);
        std::vector<int> idx(m);
        for (int l = 1; l <= m; ++l) {
            for (int s = 0; s < opt.samples_per_size; ++s) {
                for (int i = 0; i < m; ++i) idx[i] = i;
                for (int i = 0; i < l; ++i) std::swap(idx[i], idx[i + (int)(rng() % (std::uint64_t)(m - i))]);
                std::vector<int> cl(idx.begin(), idx.begin() + l);
                std::sort(cl.begin(), cl.end());
                subsets.push_back(std::move(cl));
            }
        }
    }

    long long checked = 0, stars = 0, triangles = 0;
    for (const auto& cl : subsets) {
        ++checked;
        std::int64_t l = (std::int64_t)cl.size();
        Rational c = cost(inst, cl);
        bool star = is_star(inst, cl);
        bool tri = is_triangle_cluster(inst, cl);
        stars += star;
        triangles += tri;

        if (c < Rational(l - 1) || c > Rational(2 * l - 1)) {
            r.fail_with("cost bounds violated on " + subset_to_string(inst, cl) + ": cost=" + c.to_string() +
                        " l=" + std::to_string(l));
            break;
        }
        if ((c == Rational(l - 1)) != (star || tri)) {
            r.fail_with("star/triangle characterization violated on " + subset_to_string(inst, cl) +
                        ": cost=" + c.to_string() + " star=" + std::to_string(star) +
                        " triangle=" + std::to_string(tri));
            break;
        }
        if (c != Rational(l - 1) && c < Rational(2 * l - 1, 2)) {
            r.fail_with("cost gap violated on " + subset_to_string(inst, cl) + ": cost=" + c.to_string() +
                        " < l - 1/2");
            break;
        }
        PairCoverage pc = best_pair_coverage(inst, cl);
        std::int64_t need = (Rational(2 * l - 1) - c).ceil();
        if (pc.covered < need) {
            r.fail_with("two-vertex coverage violated on " + subset_to_string(inst, cl) +
                        ": covered=" + std::to_string(pc.covered) + " need=" + std::to_string(need));
            break;
        }
    }
    r.fact("subsets_checked", std::to_string(checked));
    r.fact("stars", std::to_string(stars));
    r.fact("triangles", std::to_string(triangles));
    return r;
}

CheckReport check_gadget(const SplitGraph& sg) {
    CheckReport r;
    r.name = "gadget_structure";
    r.instance = gadget_summary(sg);

    int n = sg.base.vertex_count();
    int e1 = (int)sg.partition.e1.size();
    int e2 = (int)sg.partition.e2.size();
    int want_v = n + 2 * e1;
    int want_e = e2 + 3 * e1;
    int deg_bound = std::max(max_degree(sg.base), e1 > 0 ? 2 : 0);
    bool tri_free = is_triangle_free(sg.gprime);

    r.fact("vprime", std::to_string(sg.gprime.vertex_count()));
    r.fact("eprime", std::to_string(sg.gprime.edge_count()));
    r.fact("max_degree", std::to_string(max_degree(sg.gprime)));
    r.fact("triangle_free", tri_free ? "yes" : "no");

    if (sg.gprime.vertex_count() != want_v)
        r.fail_with("vertex count " + std::to_string(sg.gprime.vertex_count()) + " != n + 2|E1| = " +
                    std::to_string(want_v));
    else if (sg.gprime.edge_count() != want_e)
        r.fail_with("edge count " + std::to_string(sg.gprime.edge_count()) + " != |E2| + 3|E1| = " +
                    std::to_string(want_e));
    else if (!tri_free)
        r.fail_with("split graph contains a triangle");
    else if (max_degree(sg.gprime) > deg_bound)
        r.fail_with("max degree " + std::to_string(max_degree(sg.gprime)) + " exceeds bound " +
                    std::to_string(deg_bound));
    return r;
}

CheckReport check_cover_shift(const SplitGraph& sg, const VerifyOptions& opt) {
    CheckReport r;
    r.name = "cover_shift";
    r.instance = gadget_summary(sg);
    int e1 = (int)sg.partition.e1.size();

    VertexCover base_bb, base_brute, prime_bb, prime_brute;
    if (!with_resources(r, opt, [&] {
            base_bb = min_vertex_cover_exact(sg.base, std::nullopt, opt.vc_node_budget);
            base_brute = min_vertex_cover_bruteforce(sg.base, opt.vc_brute_cap);
            prime_bb = min_vertex_cover_exact(sg.gprime, std::nullopt, opt.vc_node_budget);
            prime_brute = min_vertex_cover_bruteforce(sg.gprime, opt.vc_brute_cap);
        }))
        return r;

    r.fact("mvc_base", std::to_string(base_bb.size()));
    r.fact("mvc_prime", std::to_string(prime_bb.size()));
    r.fact("e1", std::to_string(e1));

    if (base_bb.size() != base_brute.size())
        r.fail_with("vertex cover oracles disagree on base graph: " + std::to_string(base_bb.size()) +
                    " vs " + std::to_string(base_brute.size()));
    else if (prime_bb.size() != prime_brute.size())
        r.fail_with("vertex cover oracles disagree on split graph: " + std::to_string(prime_bb.size()) +
                    " vs " + std::to_string(prime_brute.size()));
    else if (prime_bb.size() != base_bb.size() + e1)
        r.fail_with("cover shift violated: mvc(G') = " + std::to_string(prime_bb.size()) +
                    ", mvc(G) + |E1| = " + std::to_string(base_bb.size() + e1));

    if (r.verdict == Verdict::pass) {
        VertexCover lifted = lift_cover(sg, base_bb);
        if (!is_vertex_cover(sg.gprime, lifted) || lifted.size() != base_bb.size() + e1)
            r.fail_with("lift_cover produced size " + std::to_string(lifted.size()) + ", expected " +
                        std::to_string(base_bb.size() + e1));
        VertexCover projected = project_cover(sg, prime_bb);
        if (projected.size() > prime_bb.size() - e1)
            r.fail_with("project_cover produced size " + std::to_string(projected.size()) +
                        " above bound " + std::to_string(prime_bb.size() - e1));
    }
    return r;
}

CheckReport check_completeness(const SplitGraph& sg, int t, const VerifyOptions& opt) {
    CheckReport r;
    r.name = "completeness";
    r.instance = gadget_summary(sg) + " t=" + std::to_string(t);

    VertexCover cover;
    if (!with_resources(r, opt, [&] { cover = min_vertex_cover_exact(sg.base, std::nullopt, opt.vc_node_budget); }))
        return r;
    r.fact("mvc_base", std::to_string(cover.size()));
    if (cover.size() > t) {
        r.verdict = Verdict::not_applicable;
        r.fact("reason", "no cover of size at most t exists");
        return r;
    }

    KMeansInstance inst = build_instance(sg, t);
    VertexCover lifted = lift_cover(sg, cover);
    r.fact("points", std::to_string(inst.points.size()));
    r.fact("k", std::to_string(inst.k));
    r.fact("lifted_cover", std::to_string(lifted.size()));

    try {
        Clustering c = cover_to_clustering(inst, sg, lifted);
        Rational cost = total_cost(inst, c);
        r.fact("cost", cost.to_string());
        Rational expect((std::int64_t)inst.points.size() - inst.k);
        if (cost != expect)
            r.fail_with("clustering cost " + cost.to_string() + " != points - k = " + expect.to_string());
    } catch (const std::logic_error& e) {
        r.fail_with(e.what());
    }
    return r;
}

CheckReport check_soundness(const SplitGraph& sg, int t, const VerifyOptions& opt) {
    CheckReport r;
    r.name = "soundness";
    r.instance = gadget_summary(sg) + " t=" + std::to_string(t);

    KMeansInstance inst = build_instance(sg, t);
    r.fact("points", std::to_string(inst.points.size()));
    r.fact("k", std::to_string(inst.k));

    KMeansSolution sol;
    VertexCover prime_cover;
    if (!with_resources(r, opt, [&] {
            sol = exact_kmeans(inst, opt.kmeans_cap);
            prime_cover = min_vertex_cover_exact(sg.gprime, std::nullopt, opt.vc_node_budget);
        }))
        return r;

    int mvc_prime = prime_cover.size();
    Rational bound((std::int64_t)inst.points.size() - inst.k);
    if (mvc_prime > inst.k) bound += Rational(mvc_prime - inst.k, 3);

    r.fact("optimum", sol.cost.to_string());
    r.fact("bound", bound.to_string());
    r.fact("mvc_prime", std::to_string(mvc_prime));

    if (sol.cost < bound) {
        r.fail_with("optimum " + sol.cost.to_string() + " below lower bound " + bound.to_string());
        return r;
    }

    try {
        CoverExtraction ex = clustering_to_cover(inst, sg, sol.clustering);
        r.fact("stars", std::to_string(ex.star_count));
        r.fact("k_used", std::to_string(ex.k_used));
        r.fact("leftover", std::to_string(ex.leftover_edges.size()));
        r.fact("extracted_cover", std::to_string(ex.cover.size()));
        r.fact("cover_bound", ex.size_bound.to_string());
    } catch (const std::logic_error& e) {
        r.fail_with(e.what());
    }
    return r;
}

CheckReport end_to_end(const Graph& g, int t, const VerifyOptions& opt) {
    CheckReport r;
    r.name = "end_to_end";
    r.instance = graph_summary(g) + " t=" + std::to_string(t);

    EdgePartition p = partition_edges(g);
    validate_partition(g, p);
    SplitGraph sg = split_graph(g, p);
    r.fact("e1", std::to_string(p.e1.size()));
    r.fact("e2", std::to_string(p.e2.size()));

    r.sub.push_back(check_gadget(sg));
    r.sub.push_back(check_cover_shift(sg, opt));
    r.sub.push_back(check_completeness(sg, t, opt));
    r.sub.push_back(check_soundness(sg, t, opt));

    // gap identity: with mvc(G') <= k the optimum hits points - k exactly
    CheckReport gap;
    gap.name = "gap_identity";
    gap.instance = r.instance;
    KMeansInstance inst = build_instance(sg, t);
    KMeansSolution sol;
    VertexCover prime_cover;
    if (with_resources(gap, opt, [&] {
            sol = exact_kmeans(inst, opt.kmeans_cap);
            prime_cover = min_vertex_cover_exact(sg.gprime, std::nullopt, opt.vc_node_budget);
        })) {
        gap.fact("k", std::to_string(inst.k));
        gap.fact("mvc_prime", std::to_string(prime_cover.size()));
        gap.fact("optimum", sol.cost.to_string());
        Rational floor_cost((std::int64_t)inst.points.size() - inst.k);
        if (prime_cover.size() <= inst.k) {
            if (sol.cost != floor_cost)
                gap.fail_with("optimum " + sol.cost.to_string() + " != points - k = " + floor_cost.to_string());
        } else {
            gap.fact("note", "mvc(G') > k, identity not applicable");
            if (!(sol.cost > floor_cost))
                gap.fail_with("optimum " + sol.cost.to_string() + " not above points - k = " +
                              floor_cost.to_string());
        }
    }
    r.sub.push_back(std::move(gap));

    if (!r.ok()) r.verdict = Verdict::fail;
    return r;
}

}  // namespace vckm
