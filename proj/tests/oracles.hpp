// Brute-force reference implementations used only by the test suites. These
// stay independent of the library's search strategies: subsets and
// permutations all the way down.
#ifndef CWD_TEST_ORACLES_HPP
#define CWD_TEST_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "cwd/graph.hpp"
#include "cwd/patterns.hpp"
#include "cwd/util.hpp"

namespace cwd_test {

inline cwd::Graph random_graph(int n, double p, cwd::Rng& rng) {
    cwd::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(p)) g.add_edge(u, v);
    return g;
}

template <typename F>
void for_each_subset(int n, int k, F&& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline bool induced_matches(const cwd::Graph& g, const std::vector<int>& vs,
                            const cwd::Graph& tmpl) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.edge(vs[i], vs[j]) != tmpl.edge((int)i, (int)j)) return false;
    return true;
}

// all subsets of size order, all permutations
inline std::optional<std::vector<int>> brute_find_induced(const cwd::Graph& g,
                                                          const cwd::Pattern& p) {
    std::optional<std::vector<int>> hit;
    int k = p.order();
    if (k > g.n) return std::nullopt;
    for_each_subset(g.n, k, [&](const std::vector<int>& subset) {
        if (hit) return;
        std::vector<int> perm = subset;
        std::sort(perm.begin(), perm.end());
        do {
            if (induced_matches(g, perm, p.tmpl)) {
                hit = perm;
                return;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    return hit;
}

// a k-subset carries a hole iff its induced subgraph is a connected 2-regular
// graph
inline bool brute_has_hole(const cwd::Graph& g, int k) {
    bool found = false;
    for_each_subset(g.n, k, [&](const std::vector<int>& vs) {
        if (found) return;
        std::vector<int> deg(vs.size(), 0);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (g.edge(vs[i], vs[j])) {
                    ++deg[i];
                    ++deg[j];
                }
        for (int d : deg)
            if (d != 2) return;
        // connected?
        std::vector<char> seen(vs.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (!seen[j] && g.edge(vs[i], vs[j])) {
                    seen[j] = 1;
                    ++cnt;
                    stack.push_back((int)j);
                }
        }
        if (cnt == (int)vs.size()) found = true;
    });
    return found;
}

inline bool brute_k_colourable_rec(const cwd::Graph& g, int k, std::vector<int>& col, int v) {
    if (v == g.n) return true;
    int limit = std::min(k, v == 0 ? 1 : k);  // first vertex fixed to colour 0
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.edge(u, v) && col[u] == c) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (brute_k_colourable_rec(g, k, col, v + 1)) return true;
    }
    return false;
}

inline bool brute_k_colourable(const cwd::Graph& g, int k) {
    if (g.n == 0) return true;
    if (k <= 0) return g.n == 0;
    std::vector<int> col(g.n, -1);
    return brute_k_colourable_rec(g, k, col, 0);
}

inline int brute_chi(const cwd::Graph& g) {
    for (int k = 1; k <= g.n; ++k)
        if (brute_k_colourable(g, k)) return k;
    return g.n == 0 ? 0 : g.n;
}

inline int brute_max_clique(const cwd::Graph& g) {
    int best = 0;
    for (int k = 1; k <= g.n; ++k) {
        bool found = false;
        for_each_subset(g.n, k, [&](const std::vector<int>& vs) {
            if (found) return;
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    if (!g.edge(vs[i], vs[j])) return;
            found = true;
        });
        if (found) best = k;
    }
    return best;
}

// ------------------------------------------------------------------
// Exact clique-width decision for tiny graphs. States are labelled partial
// constructions (vertex subset, labelling with at most k classes, built-edge
// set); subsets are processed by size, with the union transition combining
// two disjoint states under every injective alignment of label classes, and
// a relabel/join closure inside each subset. Two vertices sharing a label
// keep it forever, so a pending edge at one of them demands the matching
// edge at the other; states violating that die early.
// ------------------------------------------------------------------

struct CwdOracle {
    const cwd::Graph& g;
    int k;
    int n;
    std::vector<std::vector<int>> edge_id;  // -1 for non-edges
    int m = 0;

    explicit CwdOracle(const cwd::Graph& g_, int k_) : g(g_), k(k_), n(g_.n) {
        edge_id.assign(n, std::vector<int>(n, -1));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.edge(u, v)) edge_id[u][v] = edge_id[v][u] = m++;
    }

    // per-vertex label (k = vertex absent) + built-edge bitmask
    using Key = std::pair<std::vector<int>, std::uint64_t>;

    bool viable(const std::vector<int>& lab, std::uint64_t built) const {
        for (int u = 0; u < n; ++u) {
            if (lab[u] == k) continue;
            for (int v = u + 1; v < n; ++v) {
                if (lab[v] != lab[u]) continue;
                // same class: the pair's own edge can never be added later
                if (edge_id[u][v] != -1 && !(built >> edge_id[u][v] & 1)) return false;
                for (int w = 0; w < n; ++w) {
                    if (w == u || w == v) continue;
                    bool eu = g.edge(u, w), ev = g.edge(v, w);
                    if (lab[w] == k) {
                        if (eu != ev) return false;  // future joins hit both
                    } else {
                        bool pu = eu && !(built >> edge_id[u][w] & 1);
                        bool pv = ev && !(built >> edge_id[v][w] & 1);
                        if (pu && !ev) return false;  // the join would forge vw
                        if (pv && !eu) return false;
                    }
                }
            }
        }
        return true;
    }

    std::vector<int> canon(std::vector<int> lab) const {
        std::vector<int> remap(k + 1, -1);
        remap[k] = k;
        int next = 0;
        for (int v = 0; v < n; ++v) {
            if (lab[v] == k) continue;
            if (remap[lab[v]] == -1) remap[lab[v]] = next++;
            lab[v] = remap[lab[v]];
        }
        return lab;
    }

    static int classes_of(const std::vector<int>& lab, int absent) {
        int c = 0;
        for (int l : lab)
            if (l != absent) c = std::max(c, l + 1);
        return c;
    }

    // relabel/join closure within one subset
    void close(std::set<Key>& states) const {
        std::vector<Key> queue(states.begin(), states.end());
        auto push = [&](std::vector<int> lab, std::uint64_t built) {
            lab = canon(lab);
            if (!viable(lab, built)) return;
            Key key{std::move(lab), built};
            if (states.insert(key).second) queue.push_back(key);
        };
        for (std::size_t i = 0; i < queue.size(); ++i) {
            auto [lab, built] = queue[i];
            int classes = classes_of(lab, k);
            for (int a = 0; a < classes; ++a)
                for (int b = 0; b < classes; ++b) {
                    if (a == b) continue;
                    auto lab2 = lab;
                    for (int v = 0; v < n; ++v)
                        if (lab2[v] == a) lab2[v] = b;
                    push(lab2, built);
                }
            for (int a = 0; a < classes; ++a)
                for (int b = a + 1; b < classes; ++b) {
                    std::uint64_t built2 = built;
                    bool legal = true, added = false;
                    for (int u = 0; u < n && legal; ++u) {
                        if (lab[u] != a) continue;
                        for (int v = 0; v < n && legal; ++v) {
                            if (lab[v] != b) continue;
                            if (!g.edge(u, v))
                                legal = false;
                            else if (!(built2 >> edge_id[u][v] & 1)) {
                                built2 |= 1ULL << edge_id[u][v];
                                added = true;
                            }
                        }
                    }
                    if (legal && added) push(lab, built2);
                }
        }
    }

    bool decide() {
        if (n == 0) return true;
        if (k <= 0) return false;
        std::vector<std::set<Key>> by_subset(1u << n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> lab(n, k);
            lab[v] = 0;
            by_subset[1u << v].insert({lab, 0});
        }
        std::uint64_t all_edges = m >= 64 ? ~0ULL : ((1ULL << m) - 1);
        std::vector<unsigned> order;
        for (unsigned s = 1; s < (1u << n); ++s) order.push_back(s);
        std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
            int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (unsigned s : order) {
            auto& states = by_subset[s];
            if (__builtin_popcount(s) > 1) {
                // unions over proper bipartitions; fix the lowest bit on the
                // left side to take each split once
                unsigned low = s & (~s + 1);
                for (unsigned a = (s - 1) & s; a; a = (a - 1) & s) {
                    if (!(a & low)) continue;
                    unsigned b = s ^ a;
                    if (!b) continue;
                    for (const auto& [la, built_a] : by_subset[a])
                        for (const auto& [lb, built_b] : by_subset[b]) {
                            int cb = classes_of(lb, k);
                            // all injective placements of the right classes
                            std::vector<int> target(cb, -1);
                            std::vector<char> used(k, 0);
                            std::uint64_t built = built_a | built_b;
                            std::function<void(int)> place = [&](int c) {
                                if (c == cb) {
                                    auto lab = la;
                                    for (int v = 0; v < n; ++v)
                                        if (lb[v] != k) lab[v] = target[lb[v]];
                                    lab = canon(lab);
                                    if (!viable(lab, built)) return;
                                    states.insert({lab, built});
                                    return;
                                }
                                for (int t = 0; t < k; ++t) {
                                    if (used[t]) continue;
                                    used[t] = 1;
                                    target[c] = t;
                                    place(c + 1);
                                    used[t] = 0;
                                }
                            };
                            place(0);
                        }
                }
            }
            close(states);
            if (s == (1u << n) - 1)
                for (const auto& [lab, built] : states)
                    if (built == all_edges) return true;
        }
        return false;
    }
};

inline bool cwd_at_most(const cwd::Graph& g, int k) { return CwdOracle(g, k).decide(); }

inline int min_cwd(const cwd::Graph& g) {
    if (g.n == 0) return 0;
    for (int k = 1; k <= g.n; ++k)
        if (cwd_at_most(g, k)) return k;
    return g.n;
}

// connected graphs on <= max_n vertices, one representative per isomorphism
// class (canonical form = lexicographically smallest adjacency bitstring
// over all vertex permutations)
inline std::vector<cwd::Graph> connected_graphs_up_to(int max_n) {
    std::vector<cwd::Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> idx;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) idx.emplace_back(u, v);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::set<std::uint64_t> seen;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            cwd::Graph g(n);
            for (int e = 0; e < pairs; ++e)
                if (mask >> e & 1) g.add_edge(idx[e].first, idx[e].second);
            // connectivity
            std::vector<char> vis(n, 0);
            std::vector<int> stack{0};
            vis[0] = 1;
            int cnt = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                g.adj[u].for_each([&](int v) {
                    if (!vis[v]) {
                        vis[v] = 1;
                        ++cnt;
                        stack.push_back(v);
                    }
                });
            }
            if (cnt != n) continue;
            // canonical form
            std::uint64_t best = ~0ULL;
            std::vector<int> p = perm;
            do {
                std::uint64_t m2 = 0;
                for (int e = 0; e < pairs; ++e)
                    if (g.edge(p[idx[e].first], p[idx[e].second])) m2 |= 1ULL << e;
                best = std::min(best, m2);
            } while (std::next_permutation(p.begin(), p.end()));
            if (seen.insert(best).second) out.push_back(g);
        }
    }
    return out;
}

}  // namespace cwd_test

#endif
