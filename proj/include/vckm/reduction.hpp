#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vckm/graph.hpp"
#include "vckm/vertex_cover.hpp"

namespace vckm {

// Gadget vertices created for one split edge e = (u, v), u < v.
struct GadgetPair {
    int e1_edge = 0;   // edge index in the base graph
    int vprime_u = 0;  // new vertex adjacent to u
    int vprime_v = 0;  // new vertex adjacent to v
};

struct EdgeOrigin {
    enum class Kind { kept, side_u, middle, side_v };
    Kind kind = Kind::kept;
    int base_edge = 0;  // edge index in the base graph
};

// The split construction: every e1 edge (u, v) becomes the 3-edge path
// u - v'_{e,u} - v'_{e,v} - v, e2 edges are kept. The result has
// |V| + 2|e1| vertices, |e2| + 3|e1| edges, and is triangle-free because
// every odd cycle of the base graph loses an edge to splitting.
struct SplitGraph {
    Graph base;
    EdgePartition partition;
    Graph gprime;
    std::vector<GadgetPair> gadget_map;  // ascending e1 edge order
    std::vector<EdgeOrigin> origin_map;  // per gprime edge index
};

// New vertex ids are handed out in ascending e1 edge order, v'_{e,u} before
// v'_{e,v}. Throws std::invalid_argument if p does not partition g's edges.
SplitGraph split_graph(const Graph& g, const EdgePartition& p);

// One 0/1 point per graph edge: point (i, j) stands for the indicator vector
// with ones at coordinates i and j.
struct KMeansInstance {
    int dimension = 0;
    int k = 0;
    std::vector<Edge> points;
    std::vector<int> point_to_edge;
    std::vector<int> edge_to_point;
};

// k = cover_budget + |e1|. Throws if k falls outside [1, #points].
KMeansInstance build_instance(const SplitGraph& sg, int cover_budget);

// Instance over an arbitrary graph's edges (used by the subset checks).
KMeansInstance instance_from_graph(const Graph& g, int k);

// Adds, per split edge, the gadget vertex opposite a covering endpoint;
// the result covers gprime and has size |s| + |e1|. Throws if s is not a
// cover of the base graph.
VertexCover lift_cover(const SplitGraph& sg, const VertexCover& s);

// Normalizes sprime so each gadget pair contributes exactly one vertex
// (swapping v'_{e,u} for u when both are present), then restricts to the
// base vertices. The result covers the base graph with size at most
// |sprime| - |e1|. Throws if sprime is not a cover of gprime.
VertexCover project_cover(const SplitGraph& sg, const VertexCover& sprime);

// Document form: 'c' comments, "i <dimension> <points> <k>", one
// "x <u> <v>" line per point (1-indexed), one "m <point> <edge>" line per
// point (1-indexed). serialize/parse round-trip exactly.
std::string serialize_instance(const KMeansInstance& inst);
KMeansInstance parse_instance(std::string_view text);

// Dense 0/1 coordinate table, one row per point, for third-party tools.
std::string dense_matrix_table(const KMeansInstance& inst);

}  // namespace vckm
