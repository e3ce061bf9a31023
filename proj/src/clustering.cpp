#include "vckm/clustering.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "vckm/errors.hpp"

namespace vckm {

Clustering Clustering::from_assignment(std::vector<int> assignment) {
    if (assignment.empty()) throw std::invalid_argument("Clustering: empty assignment");
    int c = *std::max_element(assignment.begin(), assignment.end()) + 1;
    std::vector<int> sizes(c, 0);
    for (int a : assignment) {
        if (a < 0) throw std::invalid_argument("Clustering: negative cluster id");
        sizes[a]++;
    }
    for (int i = 0; i < c; ++i)
        if (sizes[i] == 0)
            throw std::invalid_argument("Clustering: cluster ids not dense, id " + std::to_string(i) +
                                        " is empty");
    Clustering r;
    r.assignment = std::move(assignment);
    r.cluster_count = c;
    return r;
}

std::vector<std::vector<int>> Clustering::clusters() const {
    std::vector<std::vector<int>> out(cluster_count);
    for (int p = 0; p < (int)assignment.size(); ++p) out[assignment[p]].push_back(p);
    return out;
}

ClusterCost cluster_cost(const KMeansInstance& inst, std::span<const int> cluster) {
    if (cluster.empty()) throw std::invalid_argument("cluster_cost: empty cluster");
    std::map<int, std::int64_t> mult;  // vertex -> number of cluster edges there
    for (int p : cluster) {
        if (p < 0 || p >= (int)inst.points.size())
            throw std::invalid_argument("cluster_cost: point index out of range");
        mult[inst.points[p].u]++;
        mult[inst.points[p].v]++;
    }
    std::int64_t l = (std::int64_t)cluster.size();
    std::int64_t sum_sq = 0;
    for (auto [v, d] : mult) sum_sq += d * d;
    return ClusterCost{2 * l * l - sum_sq, l};
}

Rational total_cost(const KMeansInstance& inst, const Clustering& c) {
    if ((int)c.assignment.size() != (int)inst.points.size())
        throw std::invalid_argument("total_cost: clustering does not match instance");
    Rational sum = 0;
    for (const auto& cluster : c.clusters()) sum += cluster_cost(inst, cluster).value();
    return sum;
}

bool is_star(const KMeansInstance& inst, std::span<const int> cluster) {
    if (cluster.empty()) throw std::invalid_argument("is_star: empty cluster");
    const Edge& first = inst.points[cluster[0]];
    for (int hub : {first.u, first.v}) {
        bool all = true;
        for (int p : cluster) {
            const Edge& e = inst.points[p];
            if (e.u != hub && e.v != hub) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

bool is_triangle_cluster(const KMeansInstance& inst, std::span<const int> cluster) {
    if (cluster.empty()) throw std::invalid_argument("is_triangle_cluster: empty cluster");
    if (cluster.size() != 3) return false;
    std::vector<int> verts;
    for (int p : cluster) {
        verts.push_back(inst.points[p].u);
        verts.push_back(inst.points[p].v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.size() != 3) return false;
    // 3 distinct edges on 3 vertices form exactly the triangle
    std::vector<Edge> want = {{verts[0], verts[1]}, {verts[0], verts[2]}, {verts[1], verts[2]}};
    std::vector<Edge> have;
    for (int p : cluster) have.push_back(inst.points[p]);
    std::sort(have.begin(), have.end());
    return have == want;
}

PairCoverage best_pair_coverage(const KMeansInstance& inst, std::span<const int> cluster) {
    if (cluster.empty()) throw std::invalid_argument("best_pair_coverage: empty cluster");
    std::vector<int> verts;
    for (int p : cluster) {
        verts.push_back(inst.points[p].u);
        verts.push_back(inst.points[p].v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    PairCoverage best;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int covered = 0;
            for (int p : cluster) {
                const Edge& e = inst.points[p];
                if (e.u == verts[i] || e.v == verts[i] || e.u == verts[j] || e.v == verts[j]) ++covered;
            }
            if (covered > best.covered) best = {verts[i], verts[j], covered};
        }

    std::int64_t l = (std::int64_t)cluster.size();
    Rational need = Rational(2 * l - 1) - cluster_cost(inst, cluster).value();
    if (best.covered < need.ceil())
        throw std::logic_error("best_pair_coverage: coverage guarantee violated");
    return best;
}

std::string serialize_clustering(const Clustering& c) {
    std::string out;
    for (int p = 0; p < (int)c.assignment.size(); ++p)
        out += std::to_string(p) + " " + std::to_string(c.assignment[p]) + "\n";
    return out;
}

Clustering parse_clustering(std::string_view text, int expected_points) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::vector<int> assignment(expected_points, -1);
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        int p, cid;
        if (!(ls >> p >> cid))
            throw parse_error("line " + std::to_string(lineno) + ": malformed clustering entry '" + line + "'");
        if (p < 0 || p >= expected_points)
            throw parse_error("line " + std::to_string(lineno) + ": point index out of range");
        if (assignment[p] != -1)
            throw parse_error("line " + std::to_string(lineno) + ": point assigned twice");
        assignment[p] = cid;
    }
    for (int p = 0; p < expected_points; ++p)
        if (assignment[p] == -1)
            throw parse_error("clustering: point " + std::to_string(p) + " unassigned");
    return Clustering::from_assignment(std::move(assignment));
}

}  // namespace vckm
