#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/test_oracles.hpp"
#include "vckm/errors.hpp"
#include "vckm/exact_kmeans.hpp"
#include "vckm/vertex_cover.hpp"

using namespace vckm;
using testing::brute_force_kmeans_cost;
using testing::complete_graph;

namespace {

SplitGraph k3_gadget() {
    Graph k3 = complete_graph(3);
    return split_graph(k3, partition_edges(k3));
}

}  // namespace

TEST_CASE("K3 gadget optima") {
    SplitGraph sg = k3_gadget();

    KMeansInstance at4 = build_instance(sg, 2);  // k = 4 = mvc(G')
    KMeansSolution sol4 = exact_kmeans(at4);
    CHECK(sol4.cost == Rational(3));  // #points - k
    CHECK(sol4.cost == brute_force_kmeans_cost(at4, 4));

    KMeansInstance at3 = build_instance(sg, 1);  // k = 3 < mvc(G')
    KMeansSolution sol3 = exact_kmeans(at3);
    CHECK(sol3.cost == Rational(14, 3));  // arcs of sizes 3+2+2 around the 7-cycle
    CHECK(sol3.cost == brute_force_kmeans_cost(at3, 3));
    CHECK(sol3.cost >= Rational(13, 3));  // the soundness floor 7 - 3 + 1/3
}

TEST_CASE("k = #points costs zero") {
    SplitGraph sg = k3_gadget();
    KMeansInstance inst = build_instance(sg, 5);  // k = 7
    KMeansSolution sol = exact_kmeans(inst);
    CHECK(sol.cost == Rational(0));
    CHECK(sol.clustering.cluster_count == 7);
}

TEST_CASE("solution cost equals the cost of the returned clustering") {
    SplitGraph sg = k3_gadget();
    for (int t = 1; t <= 5; ++t) {
        KMeansInstance inst = build_instance(sg, t);
        KMeansSolution sol = exact_kmeans(inst);
        CHECK(sol.clustering.cluster_count <= inst.k);
        CHECK(total_cost(inst, sol.clustering) == sol.cost);
    }
}

TEST_CASE("DP matches full set-partition enumeration on small instances") {
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 30) {
        int n = 3 + (int)(rng() % 4);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.push_back({u, v});
        if (edges.empty() || edges.size() > 8) continue;
        Graph g(n, std::move(edges));
        int k = 1 + (int)(rng() % (std::uint64_t)g.edge_count());
        KMeansInstance inst = instance_from_graph(g, k);
        CHECK(exact_kmeans(inst).cost == brute_force_kmeans_cost(inst, k));
        ++done;
    }
}

TEST_CASE("deterministic reconstruction") {
    SplitGraph sg = k3_gadget();
    KMeansInstance inst = build_instance(sg, 1);
    KMeansSolution a = exact_kmeans(inst);
    KMeansSolution b = exact_kmeans(inst);
    CHECK(a.clustering.assignment == b.clustering.assignment);
    CHECK(a.cost == b.cost);
}

TEST_CASE("cap raises a resource error") {
    Graph k5 = complete_graph(5);
    SplitGraph sg = split_graph(k5, partition_edges(k5));
    KMeansInstance inst = build_instance(sg, 4);  // 20 points
    CHECK_THROWS_AS(exact_kmeans(inst, 15), resource_error);
    CHECK_THROWS_AS(exact_kmeans(inst, 40), resource_error);  // above the hard limit too
}

TEST_CASE("profile is monotone and consistent with single solves") {
    SplitGraph sg = k3_gadget();
    KMeansInstance inst = build_instance(sg, 2);
    std::vector<Rational> profile = exact_kmeans_profile(inst);
    REQUIRE((int)profile.size() == 8);
    for (int j = 2; j <= 7; ++j) CHECK(profile[j] <= profile[j - 1]);
    CHECK(profile[7] == Rational(0));
    for (int k = 1; k <= 7; ++k) {
        KMeansInstance at = inst;
        at.k = k;
        CHECK(exact_kmeans(at).cost == profile[k]);
    }
}
