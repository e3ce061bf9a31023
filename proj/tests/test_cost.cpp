#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support/test_oracles.hpp"
#include "vckm/clustering.hpp"
#include "vckm/dense_oracle.hpp"
#include "vckm/errors.hpp"
#include "vckm/graph.hpp"

using namespace vckm;
using testing::complete_graph;
using testing::cycle_graph;

namespace {

// cluster given by explicit edges of g
std::vector<int> pick(const KMeansInstance& inst, const Graph& g, const std::vector<Edge>& edges) {
    std::vector<int> cluster;
    for (const auto& e : edges) cluster.push_back(inst.edge_to_point[*g.edge_index(e.u, e.v)]);
    return cluster;
}

}  // namespace

TEST_CASE("closed-form costs on the canonical shapes") {
    Graph k5 = complete_graph(5);
    KMeansInstance inst = instance_from_graph(k5, 1);

    auto triangle = pick(inst, k5, {{0, 1}, {1, 2}, {0, 2}});
    ClusterCost tc = cluster_cost(inst, triangle);
    CHECK(tc.numerator == 6);
    CHECK(tc.denominator == 3);
    CHECK(tc.value() == Rational(2));  // l - 1

    auto star = pick(inst, k5, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(cluster_cost(inst, star).value() == Rational(2));  // l - 1 again

    auto matching = pick(inst, k5, {{0, 1}, {2, 3}});
    CHECK(cluster_cost(inst, matching).value() == Rational(2));  // within [1, 3]

    auto singleton = pick(inst, k5, {{0, 1}});
    CHECK(cluster_cost(inst, singleton).value() == Rational(0));

    CHECK_THROWS_AS(cluster_cost(inst, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("dense oracle on hand-computed points") {
    std::vector<std::vector<double>> tri = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    std::vector<int> all = {0, 1, 2};
    CHECK(std::abs(dense_cost_oracle(tri, all) - 2.0) <= 1e-9);  // centroid (2/3, 2/3, 2/3)

    std::vector<std::vector<double>> same = {{1, 2}, {1, 2}};
    std::vector<int> both = {0, 1};
    CHECK(dense_cost_oracle(same, both) == 0.0);

    std::vector<std::vector<double>> match = {{1, 1, 0, 0}, {0, 0, 1, 1}};
    CHECK(std::abs(dense_cost_oracle(match, both) - 2.0) <= 1e-9);  // centroid (1/2, .., 1/2)

    std::vector<std::vector<double>> bad = {{1, 0}, {1, 0, 0}};
    CHECK_THROWS_AS(dense_cost_oracle(bad, both), std::invalid_argument);
    CHECK_THROWS_AS(dense_cost_oracle(tri, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("closed form matches the dense oracle on random clusters") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 1000) {
        int n = 3 + (int)(rng() % 8);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.push_back({u, v});
        if (edges.empty()) continue;
        Graph g(n, std::move(edges));
        KMeansInstance inst = instance_from_graph(g, 1);
        auto coords = dense_points(inst);

        int l = 1 + (int)(rng() % g.edge_count());
        std::vector<int> idx(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) idx[i] = i;
        for (int i = 0; i < l; ++i) std::swap(idx[i], idx[i + (int)(rng() % (std::uint64_t)(g.edge_count() - i))]);
        std::vector<int> cluster(idx.begin(), idx.begin() + l);

        double exact = cluster_cost(inst, cluster).value().to_double();
        double oracle = dense_cost_oracle(coords, cluster);
        CHECK(std::abs(exact - oracle) <= 1e-9);
        ++done;
    }
}

TEST_CASE("cost bounds, the equality characterization, and pair coverage over all subsets") {
    for (const Graph& g : {complete_graph(4), complete_graph(5), cycle_graph(7), testing::path_graph(5)}) {
        KMeansInstance inst = instance_from_graph(g, 1);
        int m = g.edge_count();
        REQUIRE(m <= 12);
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<int> cluster;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) cluster.push_back(i);
            std::int64_t l = (std::int64_t)cluster.size();
            Rational c = cluster_cost(inst, cluster).value();

            CHECK(Rational(l - 1) <= c);
            CHECK(c <= Rational(2 * l - 1));
            bool flat = c == Rational(l - 1);
            CHECK(flat == (is_star(inst, cluster) || is_triangle_cluster(inst, cluster)));
            if (!flat) CHECK(c >= Rational(2 * l - 1, 2));

            PairCoverage pc = best_pair_coverage(inst, cluster);
            CHECK(pc.covered >= (Rational(2 * l - 1) - c).ceil());
        }
    }
}

TEST_CASE("shape predicates") {
    Graph k5 = complete_graph(5);
    KMeansInstance inst = instance_from_graph(k5, 1);

    CHECK(is_star(inst, pick(inst, k5, {{1, 2}})));  // a 1-star
    auto tri = pick(inst, k5, {{1, 2}, {2, 3}, {1, 3}});
    CHECK_FALSE(is_star(inst, tri));
    CHECK(is_triangle_cluster(inst, tri));
    auto matching = pick(inst, k5, {{1, 2}, {3, 4}});
    CHECK_FALSE(is_star(inst, matching));
    CHECK_FALSE(is_triangle_cluster(inst, matching));
    auto star4 = pick(inst, k5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(is_star(inst, star4));
    CHECK_FALSE(is_triangle_cluster(inst, star4));
}

TEST_CASE("best pair coverage on the canonical shapes") {
    Graph k5 = complete_graph(5);
    KMeansInstance inst = instance_from_graph(k5, 1);

    CHECK(best_pair_coverage(inst, pick(inst, k5, {{0, 1}, {1, 2}, {0, 2}})).covered == 3);
    CHECK(best_pair_coverage(inst, pick(inst, k5, {{0, 1}, {2, 3}})).covered == 2);
    auto star = pick(inst, k5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(best_pair_coverage(inst, star).covered == 4);  // the hub covers everything
}

TEST_CASE("total cost") {
    Graph c7 = cycle_graph(7);
    KMeansInstance inst = instance_from_graph(c7, 1);

    std::vector<int> assign(7, 0);
    Clustering one = Clustering::from_assignment(assign);
    CHECK(total_cost(inst, one) == Rational(10));  // 14 - 28/7

    std::vector<int> each(7);
    for (int i = 0; i < 7; ++i) each[i] = i;
    CHECK(total_cost(inst, Clustering::from_assignment(each)) == Rational(0));
}

TEST_CASE("clustering type validation and serialization") {
    CHECK_THROWS_AS(Clustering::from_assignment({}), std::invalid_argument);
    CHECK_THROWS_AS(Clustering::from_assignment({0, 2}), std::invalid_argument);  // id 1 empty
    CHECK_THROWS_AS(Clustering::from_assignment({-1}), std::invalid_argument);

    Clustering c = Clustering::from_assignment({0, 1, 0, 2});
    CHECK(c.cluster_count == 3);
    CHECK(c.clusters() == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});

    std::string doc = serialize_clustering(c);
    Clustering back = parse_clustering(doc, 4);
    CHECK(back.assignment == c.assignment);
    CHECK_THROWS_AS(parse_clustering("0 0\n", 2), parse_error);  // point 1 unassigned
    CHECK_THROWS_AS(parse_clustering("0 0\n0 0\n1 1\n", 2), parse_error);
}

TEST_CASE("perturbing the centroid never lowers the dense cost") {
    std::mt19937_64 rng(41);
    Graph g = complete_graph(5);
    KMeansInstance inst = instance_from_graph(g, 1);
    auto coords = dense_points(inst);
    for (int trial = 0; trial < 40; ++trial) {
        int l = 1 + (int)(rng() % g.edge_count());
        std::vector<int> idx(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i) idx[i] = i;
        for (int i = 0; i < l; ++i) std::swap(idx[i], idx[i + (int)(rng() % (std::uint64_t)(g.edge_count() - i))]);
        std::vector<int> cluster(idx.begin(), idx.begin() + l);

        auto centroid = dense_centroid(coords, cluster);
        double at_centroid = dense_cost_about(coords, cluster, centroid);
        for (std::size_t c = 0; c < centroid.size(); ++c) {
            for (double delta : {1e-3, -1e-3}) {
                auto moved = centroid;
                moved[c] += delta;
                CHECK(dense_cost_about(coords, cluster, moved) >= at_centroid);
            }
        }
    }
}
