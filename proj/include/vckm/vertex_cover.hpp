#pragma once

#include <optional>
#include <vector>

#include "vckm/graph.hpp"

namespace vckm {

struct VertexCover {
    std::vector<int> vertices;  // sorted, unique

    int size() const { return (int)vertices.size(); }
    bool contains(int v) const;
    static VertexCover of(std::vector<int> vertices);  // sorts + dedups
};

// True iff every edge of g has an endpoint in s. Out-of-range ids throw.
bool is_vertex_cover(const Graph& g, const VertexCover& s);

// Maximal-matching 2-approximation, scanning edges in ascending index order.
VertexCover greedy_cover_2approx(const Graph& g);

// Exact minimum vertex cover by branch and bound: branch on a maximum-degree
// vertex (lowest id on ties), include-it vs include-all-neighbors, with
// degree-0/1 (and adjacent degree-2) eliminations and a maximal-matching
// lower bound. Incumbent seeded from greedy_cover_2approx. Deterministic.
//
// With upper_bound set, only covers of at most that size are searched; if the
// minimum exceeds it the call throws std::invalid_argument. Search effort is
// capped by node_budget; exceeding it throws resource_error, never returning
// a possibly suboptimal answer.
VertexCover min_vertex_cover_exact(const Graph& g, std::optional<int> upper_bound = std::nullopt,
                                   long long node_budget = 50'000'000);

// Independent oracle: full subset enumeration, returning the lexicographically
// smallest minimum cover. Throws resource_error above max_vertices.
VertexCover min_vertex_cover_bruteforce(const Graph& g, int max_vertices = 20);

}  // namespace vckm
