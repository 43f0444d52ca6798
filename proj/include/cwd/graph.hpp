#ifndef CWD_GRAPH_HPP
#define CWD_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwd/util.hpp"

namespace cwd {

// Simple undirected graph over dense vertex indices 0..n-1. Adjacency kept
// as bitset rows; symmetric, empty diagonal. Treat as immutable once built:
// everything downstream takes const Graph&.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;
    std::vector<std::string> names;  // empty, or one external name per vertex

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, Bitset(n_)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph cycle(int k);
    static Graph path(int k);
    static Graph complete(int k);
    static Graph empty_graph(int k) { return Graph(k); }

    void add_edge(int u, int v);
    bool edge(int u, int v) const { return u != v && adj[u].test(v); }
    int degree(int v) const { return adj[v].count(); }
    const Bitset& neighbours(int v) const { return adj[v]; }

    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;
    std::string name_of(int v) const { return names.empty() ? std::to_string(v) : names[v]; }

    bool same_edges(const Graph& o) const;  // equality on n and edge set
};

// Sorted, duplicate-free vertex list.
struct VertexSet {
    std::vector<int> members;

    VertexSet() = default;
    VertexSet(std::initializer_list<int> init) : members(init) { normalize(); }
    explicit VertexSet(std::vector<int> v) : members(std::move(v)) { normalize(); }

    void normalize();
    bool contains(int v) const;
    int size() const { return (int)members.size(); }
    bool empty() const { return members.empty(); }
    bool disjoint_with(const VertexSet& o) const;

    auto begin() const { return members.begin(); }
    auto end() const { return members.end(); }
    int operator[](int i) const { return members[i]; }
    bool operator==(const VertexSet& o) const { return members == o.members; }
};

// Both orientations of the relation between two disjoint sets. join/cojoin
// are the uniform cases; otherwise the max neighbour/non-neighbour counts
// per direction give the tightest "<= k" forms.
struct Relation {
    bool join = false;
    bool cojoin = false;
    int max_nbrs_a_in_b = 0;     // max over a in A of |N(a) & B|
    int max_nonnbrs_a_in_b = 0;  // max over a in A of |B \ N(a)|
    int max_nbrs_b_in_a = 0;
    int max_nonnbrs_b_in_a = 0;

    bool le1_adj_both() const { return max_nbrs_a_in_b <= 1 && max_nbrs_b_in_a <= 1; }
    bool le1_nonadj_both() const { return max_nonnbrs_a_in_b <= 1 && max_nonnbrs_b_in_a <= 1; }
    bool uniform() const { return join || cojoin; }
};

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
Relation relation_between(const Graph& g, const VertexSet& a, const VertexSet& b);

bool is_clique(const Graph& g, const std::vector<int>& vs);

}  // namespace cwd

#endif
