#include "cwd/patterns.hpp"

#include <algorithm>
#include <array>

namespace cwd {

namespace {

Graph tmpl_from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Vertex 0 is the claw centre. In the 6-vertex patterns the numbering keeps
// the high-degree vertices first so the matcher binds the most constrained
// roles early.
Graph make_template(PatternKind k) {
    switch (k) {
        case PatternKind::Claw:
            return tmpl_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        case PatternKind::FourK1:
            return Graph(4);
        case PatternKind::Bridge:
            // two K4s glued on the edge {0,1}: pair {2,3} on one side,
            // pair {4,5} on the other, no edges between the pairs
            return tmpl_from_edges(6, {{0, 1},
                                       {0, 2},
                                       {0, 3},
                                       {1, 2},
                                       {1, 3},
                                       {2, 3},
                                       {0, 4},
                                       {0, 5},
                                       {1, 4},
                                       {1, 5},
                                       {4, 5}});
        case PatternKind::C4Twin:
            // C4 0-2-1-3-0 plus vertex 4 duplicating 0 (adjacent 2,3) with
            // the extra edge 4-0
            return tmpl_from_edges(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {0, 1}});
        case PatternKind::P5Twin:
            return tmpl_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 1}, {3, 2}, {1, 4}, {2, 5}});
        case PatternKind::C5Twin:
            return tmpl_from_edges(6,
                                   {{0, 1}, {0, 2}, {3, 1}, {3, 2}, {1, 4}, {2, 5}, {4, 5}, {0, 3}});
        case PatternKind::CoR:
            return tmpl_from_edges(
                6, {{0, 1}, {0, 2}, {0, 3}, {3, 1}, {3, 2}, {0, 4}, {1, 4}, {3, 4}, {2, 5}});
        case PatternKind::CoA:
            return tmpl_from_edges(
                6, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
        case PatternKind::FiveWheel:
            return tmpl_from_edges(6,
                                   {{0, 1},
                                    {0, 2},
                                    {0, 3},
                                    {0, 4},
                                    {0, 5},
                                    {1, 2},
                                    {1, 5},
                                    {2, 3},
                                    {3, 4},
                                    {4, 5}});
        case PatternKind::K5MinusE:
            return tmpl_from_edges(
                5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
        case PatternKind::Cycle:
            throw Error("cycle pattern needs a length");
    }
    throw Error("unknown pattern kind");
}

}  // namespace

Pattern Pattern::of(PatternKind k) {
    if (k == PatternKind::Cycle) throw Error("use cycle_pattern(k)");
    return Pattern{k, 0, make_template(k)};
}

Pattern Pattern::cycle_pattern(int k) {
    if (k < 4) throw Error("cycle_pattern: k >= 4");
    return Pattern{PatternKind::Cycle, k, Graph::cycle(k)};
}

std::string Pattern::name() const {
    switch (kind) {
        case PatternKind::Claw: return "claw";
        case PatternKind::FourK1: return "4K1";
        case PatternKind::Bridge: return "bridge";
        case PatternKind::C4Twin: return "C4-twin";
        case PatternKind::P5Twin: return "P5-twin";
        case PatternKind::C5Twin: return "C5-twin";
        case PatternKind::CoR: return "co-R";
        case PatternKind::CoA: return "co-A";
        case PatternKind::FiveWheel: return "5-wheel";
        case PatternKind::K5MinusE: return "K5-e";
        case PatternKind::Cycle: return "C" + std::to_string(cycle_len);
    }
    return "?";
}

bool Occurrence::verify(const Graph& g) const {
    const Graph& t = pattern.tmpl;
    if ((int)vertices.size() != t.n) return false;
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j)
            if (g.edge(vertices[i], vertices[j]) != t.edge(i, j)) return false;
    return true;
}

namespace {

// Backtracking induced-subgraph matcher. Template vertices are assigned in a
// static order that keeps each new vertex connected to the already-assigned
// prefix when possible; candidate sets are whole bitset rows intersected
// step by step (adjacency rows for template edges, complement rows for
// template non-edges). Graph vertices come out in ascending order, so the
// first hit is the lexicographically smallest witness tuple in template
// order.
struct Matcher {
    const Graph& g;
    const Graph& t;
    std::vector<int> order;      // template vertices in assignment order
    std::vector<int> assigned;   // template vertex -> graph vertex or -1
    std::vector<Bitset> non_adj;  // complement rows, self excluded
    std::vector<Bitset> degree_ok;  // per template vertex: degree prefilter

    Matcher(const Graph& g_, const Graph& t_) : g(g_), t(t_), assigned(t_.n, -1) {
        std::vector<bool> placed(t.n, false);
        for (int step = 0; step < t.n; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < t.n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int u = 0; u < t.n; ++u)
                    if (placed[u] && t.edge(u, v)) ++links;
                int deg = t.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed[best] = true;
        }
        non_adj.assign(g.n, Bitset(g.n));
        for (int v = 0; v < g.n; ++v) {
            for (std::size_t w = 0; w < non_adj[v].w.size(); ++w)
                non_adj[v].w[w] = ~g.adj[v].w[w];
            int tail = g.n & 63;
            if (tail) non_adj[v].w.back() &= (1ULL << tail) - 1;
            non_adj[v].reset(v);
        }
        degree_ok.assign(t.n, Bitset(g.n));
        for (int tv = 0; tv < t.n; ++tv)
            for (int gv = 0; gv < g.n; ++gv)
                if (g.degree(gv) >= t.degree(tv)) degree_ok[tv].set(gv);
    }

    bool extend(std::size_t step, Bitset& used, std::vector<int>& out) {
        if (step == order.size()) {
            out = assigned;
            return true;
        }
        int tv = order[step];
        Bitset cand = degree_ok[tv];
        cand.and_not(used);
        for (std::size_t s = 0; s < step && cand.any(); ++s) {
            int tu = order[s];
            cand &= t.edge(tu, tv) ? g.adj[assigned[tu]] : non_adj[assigned[tu]];
        }
        for (int gv = cand.first(); gv != -1; gv = cand.next_after(gv)) {
            assigned[tv] = gv;
            used.set(gv);
            if (extend(step + 1, used, out)) return true;
            used.reset(gv);
            assigned[tv] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Occurrence> find_induced(const Graph& g, const Pattern& p) {
    if (p.order() > g.n) return std::nullopt;
    Matcher m(g, p.tmpl);
    std::vector<int> out;
    Bitset used(g.n);
    if (!m.extend(0, used, out)) return std::nullopt;
    return Occurrence{p, out};
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cyc) {
    int k = (int)cyc.size();
    if (k < 4) return false;
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.edge(cyc[i], cyc[j]) != consecutive) return false;
        }
    return true;
}

namespace {

// Canonical induced-path extension: the hole's smallest vertex starts the
// path, later vertices are all larger than it, candidates are tried in
// ascending order. First closure found is the canonical witness.
bool hole_dfs(const Graph& g, int k, std::vector<int>& path, Bitset& banned) {
    int len = (int)path.size();
    if (len == k) return true;  // closure validated when the last vertex entered
    int last = path.back();
    for (int w = path.front() + 1; w < g.n; ++w) {
        if (banned.test(w) || !g.edge(last, w)) continue;
        bool ok = true;
        for (int i = 1; i + 1 < len && ok; ++i)
            if (g.edge(path[i], w)) ok = false;  // internal vertices stay untouched
        if (ok && len >= 2 && g.edge(path.front(), w) != (len == k - 1)) ok = false;
        if (!ok) continue;
        path.push_back(w);
        banned.set(w);
        if (hole_dfs(g, k, path, banned)) return true;
        banned.reset(w);
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Hole> find_hole(const Graph& g, int k) {
    if (k < 4 || g.n < k) return std::nullopt;
    for (int s = 0; s <= g.n - k; ++s) {
        std::vector<int> path{s};
        Bitset banned(g.n);
        banned.set(s);
        if (hole_dfs(g, k, path, banned)) return path;
    }
    return std::nullopt;
}

std::optional<Occurrence> MembershipReport::first_witness() const {
    if (claw) return claw;
    if (four_k1) return four_k1;
    if (bridge) return bridge;
    if (c4_twin) return c4_twin;
    return std::nullopt;
}

MembershipReport is_class_member(const Graph& g) {
    MembershipReport r;
    r.claw = find_induced(g, Pattern::of(PatternKind::Claw));
    r.four_k1 = find_induced(g, Pattern::of(PatternKind::FourK1));
    r.bridge = find_induced(g, Pattern::of(PatternKind::Bridge));
    r.c4_twin = find_induced(g, Pattern::of(PatternKind::C4Twin));
    return r;
}

PerfectionReport is_perfect_in_class(const Graph& g) {
    auto mem = is_class_member(g);
    if (!mem.member())
        throw NotInClass(*mem.first_witness(),
                         "is_perfect_in_class: graph contains " + mem.first_witness()->pattern.name());
    PerfectionReport r;
    r.c5_witness = find_hole(g, 5);
    r.c7_witness = find_hole(g, 7);
    r.perfect = !r.c5_witness && !r.c7_witness;
    return r;
}

}  // namespace cwd
