#include "cwd/graph.hpp"

#include <algorithm>

namespace cwd {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph Graph::path(int k) {
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::complete(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("add_edge: vertex out of range");
    if (u == v) throw Error("add_edge: no loops");
    adj[u].set(v);
    adj[v].set(u);
}

int Graph::edge_count() const {
    int c = 0;
    for (int v = 0; v < n; ++v) c += adj[v].count();
    return c / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        adj[u].for_each([&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

bool Graph::same_edges(const Graph& o) const {
    if (n != o.n) return false;
    for (int v = 0; v < n; ++v)
        if (!(adj[v] == o.adj[v])) return false;
    return true;
}

void VertexSet::normalize() {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

bool VertexSet::disjoint_with(const VertexSet& o) const {
    for (int v : members)
        if (o.contains(v)) return false;
    return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.n) throw Error("induced_subgraph: vertex out of range");
    Graph h((int)s.size());
    h.names.reserve(s.size());
    for (int v : s) h.names.push_back(g.name_of(v));
    for (int i = 0; i < h.n; ++i)
        for (int j = i + 1; j < h.n; ++j)
            if (g.edge(s[i], s[j])) h.add_edge(i, j);
    return h;
}

Graph complement(const Graph& g) {
    Graph h(g.n);
    h.names = g.names;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.edge(u, v)) h.add_edge(u, v);
    return h;
}

Relation relation_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (!a.disjoint_with(b)) throw Error("relation_between: sets overlap");
    Relation r;
    Bitset bmask(g.n), amask(g.n);
    for (int v : b) bmask.set(v);
    for (int v : a) amask.set(v);
    for (int v : a) {
        int k = g.adj[v].count_and(bmask);
        r.max_nbrs_a_in_b = std::max(r.max_nbrs_a_in_b, k);
        r.max_nonnbrs_a_in_b = std::max(r.max_nonnbrs_a_in_b, b.size() - k);
    }
    for (int v : b) {
        int k = g.adj[v].count_and(amask);
        r.max_nbrs_b_in_a = std::max(r.max_nbrs_b_in_a, k);
        r.max_nonnbrs_b_in_a = std::max(r.max_nonnbrs_b_in_a, a.size() - k);
    }
    r.join = !a.empty() && !b.empty() && r.max_nonnbrs_a_in_b == 0 && r.max_nonnbrs_b_in_a == 0;
    r.cojoin = r.max_nbrs_a_in_b == 0 && r.max_nbrs_b_in_a == 0;
    return r;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.edge(vs[i], vs[j])) return false;
    return true;
}

}  // namespace cwd
