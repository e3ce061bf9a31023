#include "vckm/reduction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vckm/errors.hpp"

namespace vckm {

SplitGraph split_graph(const Graph& g, const EdgePartition& p) {
    validate_partition(g, p);

    SplitGraph sg;
    sg.base = g;
    sg.partition = p;

    int next_id = g.vertex_count();
    std::vector<std::pair<Edge, EdgeOrigin>> built;
    built.reserve(p.e2.size() + 3 * p.e1.size());
    for (int ei : p.e2) built.push_back({g.edge(ei), {EdgeOrigin::Kind::kept, ei}});
    for (int ei : p.e1) {
        const Edge& e = g.edge(ei);  // e.u < e.v
        GadgetPair gp{ei, next_id, next_id + 1};
        next_id += 2;
        sg.gadget_map.push_back(gp);
        built.push_back({Edge{e.v, gp.vprime_v}, {EdgeOrigin::Kind::side_v, ei}});
        built.push_back({Edge{gp.vprime_v, gp.vprime_u}, {EdgeOrigin::Kind::middle, ei}});
        built.push_back({Edge{gp.vprime_u, e.u}, {EdgeOrigin::Kind::side_u, ei}});
    }
    for (auto& [e, origin] : built)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(built.begin(), built.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Edge> edges;
    edges.reserve(built.size());
    sg.origin_map.reserve(built.size());
    for (const auto& [e, origin] : built) {
        edges.push_back(e);
        sg.origin_map.push_back(origin);
    }
    sg.gprime = Graph(next_id, std::move(edges));
    return sg;
}

KMeansInstance build_instance(const SplitGraph& sg, int cover_budget) {
    int k = cover_budget + (int)sg.partition.e1.size();
    int points = sg.gprime.edge_count();
    if (k < 1 || k > points)
        throw std::invalid_argument("build_instance: k = " + std::to_string(k) +
                                    " outside [1, " + std::to_string(points) + "]");
    return instance_from_graph(sg.gprime, k);
}

KMeansInstance instance_from_graph(const Graph& g, int k) {
    if (g.edge_count() == 0) throw std::invalid_argument("instance_from_graph: graph has no edges");
    if (k < 1 || k > g.edge_count())
        throw std::invalid_argument("instance_from_graph: k outside [1, #points]");
    KMeansInstance inst;
    inst.dimension = g.vertex_count();
    inst.k = k;
    inst.points = g.edges();
    inst.point_to_edge.resize(inst.points.size());
    inst.edge_to_point.resize(inst.points.size());
    for (int i = 0; i < (int)inst.points.size(); ++i) {
        inst.point_to_edge[i] = i;
        inst.edge_to_point[i] = i;
    }
    return inst;
}

VertexCover lift_cover(const SplitGraph& sg, const VertexCover& s) {
    if (!is_vertex_cover(sg.base, s))
        throw std::invalid_argument("lift_cover: not a vertex cover of the base graph");
    std::vector<int> out = s.vertices;
    for (const auto& gp : sg.gadget_map) {
        const Edge& e = sg.base.edge(gp.e1_edge);
        // the chosen gadget vertex covers the middle edge plus the side
        // opposite a covering endpoint
        out.push_back(s.contains(e.v) ? gp.vprime_u : gp.vprime_v);
    }
    return VertexCover::of(std::move(out));
}

VertexCover project_cover(const SplitGraph& sg, const VertexCover& sprime) {
    if (!is_vertex_cover(sg.gprime, sprime))
        throw std::invalid_argument("project_cover: not a vertex cover of the split graph");
    std::set<int> working(sprime.vertices.begin(), sprime.vertices.end());
    for (const auto& gp : sg.gadget_map) {
        const Edge& e = sg.base.edge(gp.e1_edge);
        if (working.count(gp.vprime_u) && working.count(gp.vprime_v)) {
            working.erase(gp.vprime_u);
            working.insert(e.u);
        }
    }
    std::vector<int> out;
    for (int v : working)
        if (v < sg.base.vertex_count()) out.push_back(v);
    VertexCover s = VertexCover::of(std::move(out));
    if (!is_vertex_cover(sg.base, s))
        throw std::logic_error("project_cover: projection failed to cover the base graph");
    return s;
}

std::string serialize_instance(const KMeansInstance& inst) {
    std::string out = "i " + std::to_string(inst.dimension) + " " + std::to_string(inst.points.size()) +
                      " " + std::to_string(inst.k) + "\n";
    for (const auto& p : inst.points)
        out += "x " + std::to_string(p.u + 1) + " " + std::to_string(p.v + 1) + "\n";
    for (int i = 0; i < (int)inst.point_to_edge.size(); ++i)
        out += "m " + std::to_string(i + 1) + " " + std::to_string(inst.point_to_edge[i] + 1) + "\n";
    return out;
}

KMeansInstance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    KMeansInstance inst;
    int npoints = -1;
    std::vector<std::pair<int, int>> maps;

    auto fail = [&](const std::string& what) {
        throw parse_error("line " + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "i") {
            if (npoints >= 0) fail("duplicate header");
            if (!(ls >> inst.dimension >> npoints >> inst.k)) fail("malformed header '" + line + "'");
            if (inst.dimension < 0 || npoints < 1) fail("bad dimensions in '" + line + "'");
        } else if (tag == "x") {
            if (npoints < 0) fail("point before header");
            int u, v;
            if (!(ls >> u >> v)) fail("malformed point '" + line + "'");
            if (u < 1 || u > inst.dimension || v < 1 || v > inst.dimension || u == v)
                fail("bad point coordinates in '" + line + "'");
            Edge e{u - 1, v - 1};
            if (e.u > e.v) std::swap(e.u, e.v);
            inst.points.push_back(e);
        } else if (tag == "m") {
            int p, e;
            if (!(ls >> p >> e)) fail("malformed map entry '" + line + "'");
            if (p < 1 || p > npoints || e < 1) fail("bad map entry in '" + line + "'");
            maps.push_back({p - 1, e - 1});
        } else {
            fail("unknown record '" + line + "'");
        }
    }
    if (npoints < 0) throw parse_error("line " + std::to_string(lineno) + ": missing 'i' header");
    if ((int)inst.points.size() != npoints)
        throw parse_error("instance: expected " + std::to_string(npoints) + " points, found " +
                          std::to_string(inst.points.size()));
    if (inst.k < 1 || inst.k > npoints) throw parse_error("instance: k outside [1, #points]");
    {
        auto sorted = inst.points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw parse_error("instance: duplicate point");
    }
    if ((int)maps.size() != npoints) throw parse_error("instance: edge map incomplete");
    inst.point_to_edge.assign(npoints, -1);
    for (auto [p, e] : maps) {
        if (inst.point_to_edge[p] != -1) throw parse_error("instance: duplicate edge map entry");
        inst.point_to_edge[p] = e;
    }
    int max_edge = *std::max_element(inst.point_to_edge.begin(), inst.point_to_edge.end());
    inst.edge_to_point.assign(max_edge + 1, -1);
    for (int p = 0; p < npoints; ++p) {
        int e = inst.point_to_edge[p];
        if (e < (int)inst.edge_to_point.size() && inst.edge_to_point[e] != -1)
            throw parse_error("instance: edge map not injective");
        inst.edge_to_point[e] = p;
    }
    return inst;
}

std::string dense_matrix_table(const KMeansInstance& inst) {
    std::string out;
    for (const auto& p : inst.points) {
        for (int c = 0; c < inst.dimension; ++c) {
            if (c) out += ' ';
            out += (c == p.u || c == p.v) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

}  // namespace vckm
