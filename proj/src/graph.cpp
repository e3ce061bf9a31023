#include "vckm/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "vckm/errors.hpp"

namespace vckm {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("Graph: endpoint out of range in edge (" + std::to_string(e.u) +
                                        "," + std::to_string(e.v) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");
    adj_.assign(n_, {});
    inc_.assign(n_, {});
    for (int i = 0; i < (int)edges_.size(); ++i) {
        adj_[edges_[i].u].push_back(edges_[i].v);
        adj_[edges_[i].v].push_back(edges_[i].u);
        inc_[edges_[i].u].push_back(i);
        inc_[edges_[i].v].push_back(i);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it != edges_.end() && *it == key) return (int)(it - edges_.begin());
    return std::nullopt;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;

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
        if (tag == "p") {
            if (n >= 0) fail("duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed header '" + line + "'");
        } else if (tag == "e") {
            if (n < 0) fail("edge before header");
            int u, v;
            if (!(ls >> u >> v)) fail("malformed edge '" + line + "'");
            std::string extra;
            if (ls >> extra) fail("trailing tokens in '" + line + "'");
            if (u < 1 || u > n || v < 1 || v > n) fail("endpoint out of range in '" + line + "'");
            if (u == v) fail("self-loop in '" + line + "'");
            Edge e{u - 1, v - 1};
            if (e.u > e.v) std::swap(e.u, e.v);
            for (const auto& prev : edges)
                if (prev == e) fail("duplicate edge in '" + line + "'");
            edges.push_back(e);
        } else {
            fail("unknown record '" + line + "'");
        }
    }
    if (n < 0) throw parse_error("line " + std::to_string(lineno) + ": missing 'p' header");
    if ((int)edges.size() != m)
        throw parse_error("line " + std::to_string(lineno) + ": expected " + std::to_string(m) +
                          " edges, found " + std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& e : g.edges())
        out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
    return out;
}

bool is_triangle_free(const Graph& g) {
    // For each edge, look for a common neighbor of its endpoints.
    for (const auto& e : g.edges()) {
        const auto& a = g.neighbors(e.u);
        const auto& b = g.neighbors(e.v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            if (a[i] < b[j])
                ++i;
            else
                ++j;
        }
    }
    return true;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_regular(const Graph& g, int d) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

CutResult local_search_cut(const Graph& g) {
    CutResult r;
    r.side.assign(g.vertex_count(), 0);
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int cut = 0, uncut = 0;
            for (int u : g.neighbors(v)) (r.side[u] != r.side[v] ? cut : uncut)++;
            if (uncut > cut) {
                r.side[v] ^= 1;
                improved = true;
            }
        }
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (r.side[g.edge(i).u] != r.side[g.edge(i).v]) r.cut_edges.push_back(i);
    return r;
}

EdgePartition partition_edges(const Graph& g) {
    CutResult cut = local_search_cut(g);
    EdgePartition p;
    p.coloring = cut.side;
    int want = g.edge_count() / 2;
    // cut_edges is ascending, i.e. already lexicographic by (u, v).
    p.e2.assign(cut.cut_edges.begin(), cut.cut_edges.begin() + want);
    std::vector<char> in_e2(g.edge_count(), 0);
    for (int i : p.e2) in_e2[i] = 1;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!in_e2[i]) p.e1.push_back(i);
    return p;
}

void validate_partition(const Graph& g, const EdgePartition& p) {
    std::vector<int> seen(g.edge_count(), 0);
    for (int i : p.e1) {
        if (i < 0 || i >= g.edge_count()) throw std::invalid_argument("partition: e1 index out of range");
        seen[i]++;
    }
    for (int i : p.e2) {
        if (i < 0 || i >= g.edge_count()) throw std::invalid_argument("partition: e2 index out of range");
        seen[i]++;
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (seen[i] != 1) throw std::invalid_argument("partition: edge " + std::to_string(i) + " not covered exactly once");
    if ((int)p.coloring.size() != g.vertex_count())
        throw std::invalid_argument("partition: coloring size mismatch");
    for (int c : p.coloring)
        if (c != 0 && c != 1) throw std::invalid_argument("partition: coloring not 0/1");
    for (int i : p.e2) {
        const Edge& e = g.edge(i);
        if (p.coloring[e.u] == p.coloring[e.v])
            throw std::invalid_argument("partition: e2 edge " + std::to_string(i) + " not bichromatic");
    }
}

Graph random_regular_graph(int n, int d, std::uint64_t seed) {
    if (n <= 0 || d < 0) throw std::invalid_argument("random_regular_graph: bad parameters");
    if (d >= n) throw std::invalid_argument("random_regular_graph: d must be < n");
    if ((std::int64_t)n * d % 2 != 0)
        throw std::invalid_argument("random_regular_graph: n*d must be even");

    std::vector<int> stubs;
    stubs.reserve((std::size_t)n * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);

    std::mt19937_64 rng(seed);
    // Explicit Fisher-Yates so the result depends only on the seed, not on
    // the standard library's shuffle implementation.
    auto shuffle = [&rng](std::vector<int>& a) {
        for (std::size_t i = a.size(); i > 1; --i) std::swap(a[i - 1], a[rng() % i]);
    };

    const int max_attempts = 1000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        shuffle(stubs);
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            if (u > v) std::swap(u, v);
            edges.push_back({u, v});
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph(n, std::move(edges));
    }
    throw resource_error("random_regular_graph: no simple graph after " + std::to_string(max_attempts) +
                         " pairing attempts (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

}  // namespace vckm
