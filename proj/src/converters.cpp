#include "vckm/converters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vckm {

Clustering cover_to_clustering(const KMeansInstance& inst, const SplitGraph& sg,
                               const VertexCover& sprime) {
    if (!is_vertex_cover(sg.gprime, sprime))
        throw std::invalid_argument("cover_to_clustering: not a vertex cover of the split graph");
    if (sprime.size() > inst.k)
        throw std::invalid_argument("cover_to_clustering: cover larger than k");
    if ((int)inst.points.size() != sg.gprime.edge_count())
        throw std::invalid_argument("cover_to_clustering: instance does not match split graph");

    // one cluster per cover vertex that actually receives an edge
    std::map<int, int> cluster_of_vertex;
    std::vector<int> assignment(inst.points.size(), -1);
    std::vector<std::vector<int>> members;
    for (int p = 0; p < (int)inst.points.size(); ++p) {
        const Edge& e = inst.points[p];
        int host = sprime.contains(e.u) ? e.u : e.v;
        auto [it, fresh] = cluster_of_vertex.try_emplace(host, (int)members.size());
        if (fresh) members.push_back({});
        assignment[p] = it->second;
        members[it->second].push_back(p);
    }

    // split stars until exactly k clusters
    while ((int)members.size() < inst.k) {
        int donor = 0;
        for (int i = 1; i < (int)members.size(); ++i)
            if (members[i].size() > members[donor].size()) donor = i;
        if (members[donor].size() < 2)
            throw std::logic_error("cover_to_clustering: cannot reach k clusters");
        int point = members[donor].back();
        members[donor].pop_back();
        assignment[point] = (int)members.size();
        members.push_back({point});
    }

    Clustering c = Clustering::from_assignment(std::move(assignment));
    // every cluster is a star and the total cost telescopes to points - k
    for (const auto& cluster : c.clusters())
        if (!is_star(inst, cluster)) throw std::logic_error("cover_to_clustering: non-star cluster");
    Rational expect((std::int64_t)inst.points.size() - inst.k);
    if (total_cost(inst, c) != expect)
        throw std::logic_error("cover_to_clustering: cost is not points - k");
    return c;
}

CoverExtraction clustering_to_cover(const KMeansInstance& inst, const SplitGraph& sg,
                                    const Clustering& c) {
    if ((int)c.assignment.size() != (int)inst.points.size())
        throw std::invalid_argument("clustering_to_cover: clustering does not match instance");
    if ((int)inst.points.size() != sg.gprime.edge_count())
        throw std::invalid_argument("clustering_to_cover: instance does not match split graph");
    if (c.cluster_count > inst.k)
        throw std::invalid_argument("clustering_to_cover: more than k clusters");

    CoverExtraction out;
    out.k_used = c.cluster_count;
    std::vector<int> picked;
    Rational excess = 0;  // sum over non-star clusters of cost - (l - 1)

    for (const auto& cluster : c.clusters()) {
        if (is_star(inst, cluster)) {
            // lowest-id hub
            const Edge& first = inst.points[cluster[0]];
            int hub = -1;
            for (int cand : {std::min(first.u, first.v), std::max(first.u, first.v)}) {
                bool all = true;
                for (int p : cluster) {
                    const Edge& e = inst.points[p];
                    if (e.u != cand && e.v != cand) all = false;
                }
                if (all) {
                    hub = cand;
                    break;
                }
            }
            out.star_count++;
            out.chosen.push_back({hub, -1});
            picked.push_back(hub);
        } else {
            PairCoverage pc = best_pair_coverage(inst, cluster);
            out.chosen.push_back({pc.v1, pc.v2});
            picked.push_back(pc.v1);
            picked.push_back(pc.v2);
            std::int64_t l = (std::int64_t)cluster.size();
            excess += cluster_cost(inst, cluster).value() - Rational(l - 1);
        }
    }

    std::vector<char> in(sg.gprime.vertex_count(), 0);
    for (int v : picked) in[v] = 1;
    for (int p = 0; p < (int)inst.points.size(); ++p) {
        const Edge& e = inst.points[p];
        if (!in[e.u] && !in[e.v]) {
            out.leftover_edges.push_back(inst.point_to_edge[p]);
            picked.push_back(e.u);  // lower endpoint: points store u < v
            in[e.u] = 1;
        }
    }
    std::sort(out.leftover_edges.begin(), out.leftover_edges.end());

    out.cover = VertexCover::of(std::move(picked));
    if (!is_vertex_cover(sg.gprime, out.cover))
        throw std::logic_error("clustering_to_cover: extraction failed to cover the split graph");

    out.size_bound = Rational(out.star_count + 2 * (out.k_used - out.star_count)) + excess;
    if (Rational(out.cover.size()) > out.size_bound)
        throw std::logic_error("clustering_to_cover: size bound violated");
    return out;
}

}  // namespace vckm
