#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "support/test_oracles.hpp"
#include "vckm/clustering.hpp"
#include "vckm/errors.hpp"
#include "vckm/exact_kmeans.hpp"
#include "vckm/verify.hpp"
#include "vckm/vertex_cover.hpp"

using namespace vckm;
using testing::complete_graph;
using testing::cycle_graph;

TEST_CASE("cost lemma check passes exhaustively on the named graphs") {
    CheckReport k5 = check_cost_lemma(complete_graph(5), SubsetMode::exhaustive, 1);
    CHECK(k5.verdict == Verdict::pass);

    CheckReport c7 = check_cost_lemma(cycle_graph(7), SubsetMode::exhaustive, 1);
    CHECK(c7.verdict == Verdict::pass);
    for (const auto& [key, value] : c7.facts)
        if (key == "triangles") CHECK(value == "0");  // no triangle clusters in a 7-cycle
}

TEST_CASE("cost lemma check in sampled mode is deterministic") {
    Graph g = random_regular_graph(8, 4, 5);
    CheckReport a = check_cost_lemma(g, SubsetMode::sampled, 42);
    CheckReport b = check_cost_lemma(g, SubsetMode::sampled, 42);
    CHECK(a.verdict == Verdict::pass);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json_string() == b.to_json_string());
}

TEST_CASE("cost lemma check catches a corrupted cost function") {
    ClusterCostFn corrupted = [](const KMeansInstance& inst, std::span<const int> cluster) {
        Rational real = cluster_cost(inst, cluster).value();
        return cluster.size() >= 2 ? real + Rational(1, 7) : real;
    };
    CheckReport r = check_cost_lemma(complete_graph(3), SubsetMode::exhaustive, 1, {}, corrupted);
    CHECK(r.verdict == Verdict::fail);
    CHECK_FALSE(r.witness.empty());

    ClusterCostFn deflated = [](const KMeansInstance& inst, std::span<const int> cluster) {
        return cluster_cost(inst, cluster).value() - Rational(1, 2);
    };
    CheckReport r2 = check_cost_lemma(complete_graph(3), SubsetMode::exhaustive, 1, {}, deflated);
    CHECK(r2.verdict == Verdict::fail);
}

TEST_CASE("exhaustive mode refuses large graphs") {
    CHECK_THROWS_AS(check_cost_lemma(random_regular_graph(10, 4, 1), SubsetMode::exhaustive, 1),
                    std::invalid_argument);
}

TEST_CASE("gadget check reports the expected shape") {
    Graph k5 = complete_graph(5);
    CheckReport r5 = check_gadget(split_graph(k5, partition_edges(k5)));
    CHECK(r5.verdict == Verdict::pass);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(r5.to_json_string());
    CHECK(j["facts"]["vprime"] == "15");
    CHECK(j["facts"]["eprime"] == "20");
    CHECK(j["facts"]["max_degree"] == "4");

    Graph k3 = complete_graph(3);
    CheckReport r3 = check_gadget(split_graph(k3, partition_edges(k3)));
    CHECK(r3.verdict == Verdict::pass);
    nlohmann::ordered_json j3 = nlohmann::ordered_json::parse(r3.to_json_string());
    CHECK(j3["facts"]["vprime"] == "7");
    CHECK(j3["facts"]["eprime"] == "7");
    CHECK(j3["facts"]["max_degree"] == "2");
}

TEST_CASE("gadget check fails on a tampered gadget") {
    Graph k3 = complete_graph(3);
    SplitGraph sg = split_graph(k3, partition_edges(k3));
    SplitGraph broken = sg;
    broken.gprime = sg.base;  // wrong vertex count
    CheckReport r = check_gadget(broken);
    CHECK(r.verdict == Verdict::fail);
    CHECK_FALSE(r.witness.empty());
}

TEST_CASE("cover shift check") {
    Graph k3 = complete_graph(3);
    CheckReport r3 = check_cover_shift(split_graph(k3, partition_edges(k3)));
    CHECK(r3.verdict == Verdict::pass);  // 4 = 2 + 2

    Graph k5 = complete_graph(5);
    CheckReport r5 = check_cover_shift(split_graph(k5, partition_edges(k5)));
    CHECK(r5.verdict == Verdict::pass);  // 9 = 4 + 5

    // e1 empty: trivially holds
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    EdgePartition p;
    p.e2 = {0, 1, 2};
    p.coloring = {1, 0, 0, 0};
    CheckReport rt = check_cover_shift(split_graph(star, p));
    CHECK(rt.verdict == Verdict::pass);
}

TEST_CASE("cover shift reports not_applicable beyond the oracle budget") {
    Graph g = random_regular_graph(10, 4, 2);
    SplitGraph sg = split_graph(g, partition_edges(g));  // 30 vertices
    CheckReport r = check_cover_shift(sg);
    CHECK(r.verdict == Verdict::not_applicable);

    VerifyOptions strict;
    strict.strict_resources = true;
    CHECK_THROWS_AS(check_cover_shift(sg, strict), resource_error);
}

TEST_CASE("completeness check") {
    Graph k5 = complete_graph(5);
    SplitGraph sg5 = split_graph(k5, partition_edges(k5));
    CheckReport r5 = check_completeness(sg5, 4);
    CHECK(r5.verdict == Verdict::pass);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(r5.to_json_string());
    CHECK(j["facts"]["cost"] == "11");  // 20 - 9

    Graph k3 = complete_graph(3);
    SplitGraph sg3 = split_graph(k3, partition_edges(k3));
    CheckReport r3 = check_completeness(sg3, 2);
    CHECK(r3.verdict == Verdict::pass);

    CheckReport na = check_completeness(sg3, 1);  // mvc(K3) = 2 > 1
    CHECK(na.verdict == Verdict::not_applicable);
}

TEST_CASE("soundness check") {
    Graph k3 = complete_graph(3);
    SplitGraph sg = split_graph(k3, partition_edges(k3));

    CheckReport tight = check_soundness(sg, 2);  // k = mvc(G') = 4
    CHECK(tight.verdict == Verdict::pass);
    nlohmann::ordered_json jt = nlohmann::ordered_json::parse(tight.to_json_string());
    CHECK(jt["facts"]["optimum"] == "3");
    CHECK(jt["facts"]["bound"] == "3");

    CheckReport below = check_soundness(sg, 1);  // k = 3 < mvc(G') = 4
    CHECK(below.verdict == Verdict::pass);
    nlohmann::ordered_json jb = nlohmann::ordered_json::parse(below.to_json_string());
    CHECK(jb["facts"]["optimum"] == "14/3");
    CHECK(jb["facts"]["bound"] == "13/3");

    CheckReport zero = check_soundness(sg, 5);  // k = #points
    CHECK(zero.verdict == Verdict::pass);
}

TEST_CASE("end to end on K3 and the single-edge graph") {
    Graph k3 = complete_graph(3);
    for (int t : {1, 2, 3}) {
        CheckReport r = end_to_end(k3, t);
        CHECK(r.ok());
    }

    Graph single(2, {{0, 1}});
    CheckReport r = end_to_end(single, 1);  // e2 empty, gadget is a 3-edge path
    CHECK(r.ok());
}

TEST_CASE("end to end over a small random corpus") {
    for (auto [n, d] : {std::pair{4, 3}, {5, 2}, {6, 3}}) {
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            Graph g = random_regular_graph(n, d, seed);
            for (int t = 0; t <= n; ++t) {
                int k = t + (g.edge_count() - g.edge_count() / 2);
                if (k < 1 || k > g.edge_count() / 2 + 3 * (g.edge_count() - g.edge_count() / 2)) continue;
                CheckReport r = end_to_end(g, t);
                CHECK(r.ok());
            }
        }
    }
}

TEST_CASE("gap ratio between adjacent budgets respects the formula pattern") {
    // optimum at t = mvc(G)-1 over the tight bound at t = mvc(G), compared to
    // 1 + (mvc(G') - k)/(3(#points - k)) at k = mvc(G') - 1
    for (auto [n, d, seed] : {std::tuple{3, 2, 1}, {4, 3, 1}, {5, 2, 2}, {6, 2, 3}}) {
        Graph g = random_regular_graph(n, d, (std::uint64_t)seed);
        SplitGraph sg = split_graph(g, partition_edges(g));
        if (sg.gprime.edge_count() > 15) continue;
        int mvc_prime = min_vertex_cover_exact(sg.gprime).size();
        int points = sg.gprime.edge_count();
        int k = mvc_prime - 1;
        if (k < 1 || mvc_prime >= points) continue;
        KMeansInstance inst = instance_from_graph(sg.gprime, k);
        Rational opt = exact_kmeans(inst).cost;
        Rational ratio = opt / Rational(points - mvc_prime);
        Rational pattern = Rational(1) + Rational(mvc_prime - k) / (Rational(3) * Rational(points - k));
        CHECK(ratio >= pattern);
    }
}

TEST_CASE("reports are byte-identical across runs") {
    Graph g = complete_graph(3);
    CheckReport a = end_to_end(g, 2);
    CheckReport b = end_to_end(g, 2);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json_string() == b.to_json_string());
    CHECK(nlohmann::json::parse(a.to_json_string()).is_object());
}
