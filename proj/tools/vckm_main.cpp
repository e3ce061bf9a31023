// vckm: build k-means instances from vertex-cover graphs via the
// edge-splitting reduction, solve them exactly or with Lloyd's heuristic,
// and verify the reduction's cost and cover properties instance by instance.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vckm/constants.hpp"
#include "vckm/converters.hpp"
#include "vckm/errors.hpp"
#include "vckm/exact_kmeans.hpp"
#include "vckm/graph.hpp"
#include "vckm/lloyd.hpp"
#include "vckm/rational.hpp"
#include "vckm/reduction.hpp"
#include "vckm/verify.hpp"
#include "vckm/vertex_cover.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw vckm::parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw vckm::parse_error("cannot write '" + path + "'");
    out << content;
}

std::string format_decimal(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

struct VerifyArgs {
    std::string graph_path;
    int t = 0;
    int cap = 15;
    int vc_cap = 20;
    std::string mode = "auto";
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out_path;
    bool strict = false;
};

int run_verify(const VerifyArgs& a) {
    vckm::Graph g = vckm::parse_graph(read_file(a.graph_path));

    vckm::VerifyOptions opt;
    opt.kmeans_cap = a.cap;
    opt.vc_brute_cap = a.vc_cap;
    opt.strict_resources = a.strict;

    vckm::SubsetMode mode = vckm::SubsetMode::sampled;
    if (a.mode == "exhaustive" || (a.mode == "auto" && g.edge_count() <= 12))
        mode = vckm::SubsetMode::exhaustive;

    std::vector<vckm::CheckReport> reports;
    reports.push_back(vckm::check_cost_lemma(g, mode, a.seed, opt));
    reports.push_back(vckm::end_to_end(g, a.t, opt));

    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.ok();

    std::string doc;
    if (a.format == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto& r : reports) j.push_back(nlohmann::ordered_json::parse(r.to_json_string()));
        nlohmann::ordered_json root;
        root["reports"] = j;
        root["overall"] = all_ok ? "pass" : "fail";
        doc = root.dump(2) + "\n";
    } else {
        for (const auto& r : reports) doc += r.to_text();
        doc += "summary:\n";
        for (const auto& r : reports) doc += "  " + r.name + ": " + vckm::verdict_name(r.verdict) + "\n";
        doc += "overall: " + std::string(all_ok ? "pass" : "fail") + "\n";
    }
    std::cout << doc;
    if (!a.out_path.empty()) write_file(a.out_path, doc);
    return all_ok ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-cover to k-means reduction toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random d-regular graph");
    int gen_n = 0, gen_d = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--d", gen_d, "degree")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--out", gen_out, "output graph file")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build the k-means instance for a graph");
    std::string red_graph, red_out, red_dense;
    int red_t = 0;
    reduce->add_option("--graph", red_graph, "input graph file")->required();
    reduce->add_option("--t", red_t, "cover budget (k = t + |E1|)")->required();
    reduce->add_option("--out", red_out, "output prefix (<prefix>.instance, <prefix>.gadget)")->required();
    reduce->add_option("--dense", red_dense, "also write a dense 0/1 matrix table");

    // verify
    auto* verify = app.add_subcommand("verify", "run the per-instance checks");
    VerifyArgs va;
    verify->add_option("--graph", va.graph_path, "input graph file")->required();
    verify->add_option("--t", va.t, "cover budget")->required();
    verify->add_option("--cap", va.cap, "exact k-means point cap");
    verify->add_option("--vc-cap", va.vc_cap, "vertex cover enumeration cap");
    verify->add_option("--mode", va.mode, "subset mode: auto|exhaustive|sampled")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
    verify->add_option("--seed", va.seed, "sampling seed");
    verify->add_option("--format", va.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", va.out_path, "also write the report here");
    verify->add_flag("--exact", va.strict, "treat oracle budget overruns as errors");

    // ratio
    auto* ratio = app.add_subcommand("ratio", "print the hardness constants for a given mu");
    std::string ratio_mu, ratio_format = "text";
    ratio->add_option("--mu", ratio_mu, "mu as a fraction or decimal, e.g. 21.7")->required();
    ratio->add_option("--format", ratio_format, "text|json")->check(CLI::IsMember({"text", "json"}));

    // solve
    auto* solve = app.add_subcommand("solve", "cluster an instance file");
    std::string sol_instance, sol_method = "exact", sol_out;
    std::uint64_t sol_seed = 1;
    int sol_cap = 15, sol_iters = 100;
    solve->add_option("--instance", sol_instance, "instance file")->required();
    solve->add_option("--method", sol_method, "exact|lloyd")->check(CLI::IsMember({"exact", "lloyd"}));
    solve->add_option("--seed", sol_seed, "lloyd seed");
    solve->add_option("--cap", sol_cap, "exact solver point cap");
    solve->add_option("--iters", sol_iters, "lloyd iteration cap");
    solve->add_option("--out", sol_out, "write the clustering here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            vckm::Graph g = vckm::random_regular_graph(gen_n, gen_d, gen_seed);
            write_file(gen_out, vckm::serialize_graph(g));
            std::cout << "wrote " << gen_out << " (n=" << g.vertex_count() << " m=" << g.edge_count()
                      << ")\n";
        } else if (reduce->parsed()) {
            vckm::Graph g = vckm::parse_graph(read_file(red_graph));
            vckm::EdgePartition p = vckm::partition_edges(g);
            vckm::SplitGraph sg = vckm::split_graph(g, p);
            vckm::KMeansInstance inst = vckm::build_instance(sg, red_t);

            std::string provenance = "c reduce t=" + std::to_string(red_t) +
                                     " e1=" + std::to_string(p.e1.size()) +
                                     " e2=" + std::to_string(p.e2.size()) +
                                     " k=" + std::to_string(inst.k) + "\n";
            std::string gadget_doc = provenance;
            for (const auto& gp : sg.gadget_map) {
                const vckm::Edge& e = g.edge(gp.e1_edge);
                gadget_doc += "c split " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
                              std::to_string(gp.vprime_u + 1) + " " + std::to_string(gp.vprime_v + 1) + "\n";
            }
            gadget_doc += vckm::serialize_graph(sg.gprime);
            write_file(red_out + ".gadget", gadget_doc);
            write_file(red_out + ".instance", provenance + vckm::serialize_instance(inst));
            if (!red_dense.empty()) write_file(red_dense, vckm::dense_matrix_table(inst));
            std::cout << "points: " << inst.points.size() << "\n"
                      << "dimension: " << inst.dimension << "\n"
                      << "k: " << inst.k << "\n";
        } else if (verify->parsed()) {
            return run_verify(va);
        } else if (ratio->parsed()) {
            vckm::Rational mu = vckm::Rational::parse(ratio_mu);
            vckm::HardnessConstants c = vckm::constants(mu);
            if (ratio_format == "json") {
                nlohmann::ordered_json j;
                j["mu"] = c.mu.to_string();
                j["alpha_min"] = c.alpha_min_display();
                j["alpha_max"] = c.alpha_max_display();
                j["ratio"] = c.ratio.to_string();
                j["ratio_decimal"] = format_decimal(c.ratio.to_double());
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "mu: " << c.mu.to_string() << "\n"
                          << "alpha_min: " << c.alpha_min_display() << "\n"
                          << "alpha_max: " << c.alpha_max_display() << "\n"
                          << "ratio: " << c.ratio.to_string() << "\n"
                          << "ratio_decimal: " << format_decimal(c.ratio.to_double()) << "\n";
            }
        } else if (solve->parsed()) {
            vckm::KMeansInstance inst = vckm::parse_instance(read_file(sol_instance));
            vckm::Clustering clustering;
            vckm::Rational cost;
            if (sol_method == "exact") {
                vckm::KMeansSolution sol = vckm::exact_kmeans(inst, sol_cap);
                clustering = sol.clustering;
                cost = sol.cost;
                std::cout << "method: exact\n";
            } else {
                vckm::LloydOutcome out = vckm::lloyd(inst, sol_seed, sol_iters);
                clustering = out.clustering;
                cost = out.cost;
                std::cout << "method: lloyd\n"
                          << "iterations: " << out.iterations << "\n"
                          << "converged: " << (out.converged ? "yes" : "no") << "\n";
            }
            std::cout << "clusters: " << clustering.cluster_count << "\n"
                      << "cost: " << cost.to_string() << "\n";
            if (!sol_out.empty())
                write_file(sol_out, "c cost " + cost.to_string() + "\n" + vckm::serialize_clustering(clustering));
        }
    } catch (const vckm::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const vckm::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitPass;
}
