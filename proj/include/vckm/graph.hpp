#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vckm {

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Edges are normalized to
/// u < v and kept sorted, so edge indices are stable and lexicographic.
class Graph {
public:
    Graph() = default;
    // Normalizes endpoint order, sorts the edge list, and rejects
    // self-loops, duplicates, and out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[index]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<int>& incident_edges(int v) const { return inc_[v]; }
    int degree(int v) const { return (int)adj_[v].size(); }
    bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }
    std::optional<int> edge_index(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

// Edge-list document: optional 'c' comment lines, a "p <n> <m>" header, then
// exactly m lines "e <u> <v>" with 1-indexed endpoints. Errors name the line.
Graph parse_graph(std::string_view text);

// Canonical form: header plus sorted 1-indexed edges. parse(serialize(g)) == g
// and serialize is a fixpoint of parse+serialize.
std::string serialize_graph(const Graph& g);

bool is_triangle_free(const Graph& g);
int max_degree(const Graph& g);
bool is_regular(const Graph& g, int d);

struct CutResult {
    std::vector<int> side;       // vertex -> 0/1
    std::vector<int> cut_edges;  // ascending indices of edges crossing the cut
};

// Single-flip local search from the all-zeros assignment, flipping vertices
// in ascending id until a full pass yields no improvement. At the local
// optimum every vertex has at least half its incident edges in the cut,
// hence |cut_edges| >= |E|/2.
CutResult local_search_cut(const Graph& g);

struct EdgePartition {
    std::vector<int> e1;        // ascending edge indices; these get split
    std::vector<int> e2;        // ascending edge indices; bipartite cut half
    std::vector<int> coloring;  // vertex -> 0/1; proper 2-coloring of (V, e2)
};

// e2 = the floor(|E|/2) lexicographically smallest cut edges from
// local_search_cut, e1 = everything else, coloring = the cut sides.
EdgePartition partition_edges(const Graph& g);

// Throws std::invalid_argument unless p is a consistent partition of g's
// edges whose coloring properly 2-colors every e2 edge.
void validate_partition(const Graph& g, const EdgePartition& p);

// Pairing-model generator: d stubs per vertex, shuffle, pair consecutive;
// reject and reshuffle on self-loops or duplicates. Deterministic per seed.
Graph random_regular_graph(int n, int d, std::uint64_t seed);

}  // namespace vckm
