#include "vckm/vertex_cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "vckm/errors.hpp"

namespace vckm {

bool VertexCover::contains(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

VertexCover VertexCover::of(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return VertexCover{std::move(vertices)};
}

bool is_vertex_cover(const Graph& g, const VertexCover& s) {
    for (int v : s.vertices)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("is_vertex_cover: vertex " + std::to_string(v) + " out of range");
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : s.vertices) in[v] = 1;
    for (const auto& e : g.edges())
        if (!in[e.u] && !in[e.v]) return false;
    return true;
}

VertexCover greedy_cover_2approx(const Graph& g) {
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<int> cover;
    for (const auto& e : g.edges()) {
        if (used[e.u] || used[e.v]) continue;
        used[e.u] = used[e.v] = 1;
        cover.push_back(e.u);
        cover.push_back(e.v);
    }
    return VertexCover::of(std::move(cover));
}

namespace {

struct BnB {
    const Graph& g;
    std::vector<std::uint64_t> inc;  // vertex -> bitmask of incident edge indices
    long long budget;
    long long nodes = 0;
    int best_size;
    std::optional<std::vector<int>> best;
    std::vector<int> chosen;

    explicit BnB(const Graph& graph, long long node_budget) : g(graph), budget(node_budget) {
        inc.assign(g.vertex_count(), 0);
        for (int i = 0; i < g.edge_count(); ++i) {
            inc[g.edge(i).u] |= 1ULL << i;
            inc[g.edge(i).v] |= 1ULL << i;
        }
        best_size = g.vertex_count() + 1;
    }

    int rem_degree(std::uint64_t rem, int v) const { return std::popcount(rem & inc[v]); }

    // Greedy maximal matching over remaining edges in ascending index order;
    // its size lower-bounds the cover size of the remaining graph.
    int matching_lower_bound(std::uint64_t rem) const {
        int count = 0;
        while (rem) {
            int e = std::countr_zero(rem);
            ++count;
            rem &= ~(inc[g.edge(e).u] | inc[g.edge(e).v]);
        }
        return count;
    }

    void take(std::uint64_t& rem, int v) {
        chosen.push_back(v);
        rem &= ~inc[v];
    }

    void search(std::uint64_t rem) {
        if (++nodes > budget) throw resource_error("min_vertex_cover_exact: node budget exceeded");

        // eliminations: degree-1 takes the neighbor, adjacent degree-2 takes both
        std::size_t mark = chosen.size();
        bool changed = true;
        while (changed && rem) {
            changed = false;
            for (int v = 0; v < g.vertex_count() && !changed; ++v) {
                int d = rem_degree(rem, v);
                if (d == 1) {
                    std::uint64_t e_mask = rem & inc[v];
                    const Edge& e = g.edge(std::countr_zero(e_mask));
                    take(rem, e.u == v ? e.v : e.u);
                    changed = true;
                } else if (d == 2) {
                    std::uint64_t two = rem & inc[v];
                    int e1 = std::countr_zero(two);
                    int e2 = 63 - std::countl_zero(two);
                    int a = g.edge(e1).u == v ? g.edge(e1).v : g.edge(e1).u;
                    int b = g.edge(e2).u == v ? g.edge(e2).v : g.edge(e2).u;
                    auto uw = g.edge_index(a, b);
                    if (uw && (rem >> *uw & 1)) {  // triangle: take both far vertices
                        take(rem, a);
                        take(rem, b);
                        changed = true;
                    }
                }
            }
        }

        int used = (int)chosen.size();
        if (rem == 0) {
            if (used < best_size) {
                best_size = used;
                best = chosen;
            }
        } else if (used + matching_lower_bound(rem) < best_size) {
            // branch vertex: maximum remaining degree, lowest id on ties
            int pick = -1, pick_deg = -1;
            for (int v = 0; v < g.vertex_count(); ++v) {
                int d = rem_degree(rem, v);
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            {
                std::uint64_t r2 = rem;
                std::size_t m2 = chosen.size();
                take(r2, pick);
                search(r2);
                chosen.resize(m2);
            }
            {
                std::uint64_t r2 = rem;
                std::size_t m2 = chosen.size();
                for (int e = 0; e < g.edge_count(); ++e)
                    if (rem >> e & 1) {
                        const Edge& ed = g.edge(e);
                        if (ed.u == pick) take(r2, ed.v);
                        if (ed.v == pick) take(r2, ed.u);
                    }
                if ((int)chosen.size() < best_size) search(r2);
                chosen.resize(m2);
            }
        }
        chosen.resize(mark);
    }
};

}  // namespace

VertexCover min_vertex_cover_exact(const Graph& g, std::optional<int> upper_bound, long long node_budget) {
    if (g.edge_count() > 64)
        throw resource_error("min_vertex_cover_exact: more than 64 edges");
    if (g.edge_count() == 0) return VertexCover{};

    BnB bnb(g, node_budget);
    VertexCover greedy = greedy_cover_2approx(g);
    bnb.best_size = greedy.size();
    bnb.best = greedy.vertices;
    if (upper_bound && *upper_bound < bnb.best_size) {
        bnb.best_size = *upper_bound + 1;
        bnb.best.reset();
    }

    std::uint64_t all = g.edge_count() == 64 ? ~0ULL : (1ULL << g.edge_count()) - 1;
    bnb.search(all);

    if (!bnb.best)
        throw std::invalid_argument("min_vertex_cover_exact: no cover within upper bound " +
                                    std::to_string(*upper_bound));
    return VertexCover::of(std::move(*bnb.best));
}

VertexCover min_vertex_cover_bruteforce(const Graph& g, int max_vertices) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw resource_error("min_vertex_cover_bruteforce: " + std::to_string(n) + " vertices exceeds cap " +
                             std::to_string(max_vertices));
    if (n > 30) throw resource_error("min_vertex_cover_bruteforce: cap too large");

    std::vector<std::uint32_t> edge_bits;
    edge_bits.reserve(g.edge_count());
    for (const auto& e : g.edges()) edge_bits.push_back((1u << e.u) | (1u << e.v));

    int best_size = n + 1;
    std::vector<int> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best_size + 1) continue;
        bool covers = true;
        for (std::uint32_t eb : edge_bits)
            if (!(mask & eb)) {
                covers = false;
                break;
            }
        if (!covers) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) verts.push_back(v);
        if (size < best_size || (size == best_size && verts < best)) {
            best_size = size;
            best = std::move(verts);
        }
    }
    return VertexCover{std::move(best)};
}

}  // namespace vckm
