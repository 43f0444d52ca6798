#include "cwd/colour.hpp"

#include <algorithm>

namespace cwd {

namespace {

struct CliqueSearch {
    const Graph& g;
    std::vector<int> best;
    std::vector<int> cur;

    void expand(Bitset cand) {
        if ((int)cur.size() + cand.count() <= (int)best.size()) return;
        if (!cand.any()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        // pivot on the candidate with most candidate-neighbours
        int pivot = -1, pdeg = -1;
        cand.for_each([&](int v) {
            int k = g.adj[v].count_and(cand);
            if (k > pdeg) {
                pdeg = k;
                pivot = v;
            }
        });
        Bitset branch = cand;
        branch.and_not(g.adj[pivot]);
        std::vector<int> order;
        branch.for_each([&](int v) { order.push_back(v); });
        for (int v : order) {
            cur.push_back(v);
            Bitset next = cand;
            next &= g.adj[v];
            expand(next);
            cur.pop_back();
            cand.reset(v);
            if ((int)cur.size() + cand.count() <= (int)best.size()) return;
        }
    }
};

}  // namespace

CliqueResult max_clique(const Graph& g) {
    if (g.n == 0) return {0, {}};
    CliqueSearch s{g, {}, {}};
    Bitset all(g.n);
    for (int v = 0; v < g.n; ++v) all.set(v);
    s.expand(all);
    return {(int)s.best.size(), VertexSet(s.best)};
}

int ChromaticResult::chi() const {
    if (!exact) throw Error("chromatic number is only bounded, not exact");
    return upper;
}

namespace {

struct Dsatur {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> colour, best_assign;
    int best = 0;       // current upper bound (colours in best_assign)
    int lower = 1;
    bool exhausted = false;

    Dsatur(const Graph& g_, std::uint64_t budget_) : g(g_), budget(budget_), colour(g_.n, -1) {}

    int pick_vertex() const {
        int best_v = -1, best_sat = -1, best_deg = -1;
        std::vector<char> seen(g.n + 1);
        for (int v = 0; v < g.n; ++v) {
            if (colour[v] != -1) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0;
            g.adj[v].for_each([&](int u) {
                if (colour[u] != -1 && !seen[colour[u]]) {
                    seen[colour[u]] = 1;
                    ++sat;
                }
            });
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_v = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best_v;
    }

    void solve(int coloured, int used) {
        if (used >= best) return;  // can no longer improve
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (coloured == g.n) {
            best = used;
            best_assign = colour;
            return;
        }
        int v = pick_vertex();
        std::vector<char> forbidden(g.n + 1, 0);
        g.adj[v].for_each([&](int u) {
            if (colour[u] != -1) forbidden[colour[u]] = 1;
        });
        int limit = std::min(used + 1, best - 1);
        for (int c = 0; c < limit; ++c) {
            if (forbidden[c]) continue;
            colour[v] = c;
            solve(coloured + 1, std::max(used, c + 1));
            colour[v] = -1;
            if (exhausted || best <= lower) return;
        }
    }
};

std::vector<int> greedy_dsatur(const Graph& g, int& used) {
    std::vector<int> colour(g.n, -1);
    used = 0;
    for (int step = 0; step < g.n; ++step) {
        int best_v = -1, best_sat = -1, best_deg = -1;
        std::vector<char> seen(g.n + 1);
        for (int v = 0; v < g.n; ++v) {
            if (colour[v] != -1) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0;
            g.adj[v].for_each([&](int u) {
                if (colour[u] != -1 && !seen[colour[u]]) {
                    seen[colour[u]] = 1;
                    ++sat;
                }
            });
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_v = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        std::vector<char> forbidden(g.n + 1, 0);
        g.adj[best_v].for_each([&](int u) {
            if (colour[u] != -1) forbidden[colour[u]] = 1;
        });
        int c = 0;
        while (forbidden[c]) ++c;
        colour[best_v] = c;
        used = std::max(used, c + 1);
    }
    return colour;
}

std::vector<int> canonical_colours(const std::vector<int>& assign) {
    std::vector<int> remap(assign.size() + 1, -1);
    std::vector<int> out(assign.size());
    int next = 0;
    for (std::size_t v = 0; v < assign.size(); ++v) {
        if (remap[assign[v]] == -1) remap[assign[v]] = next++;
        out[v] = remap[assign[v]];
    }
    return out;
}

}  // namespace

ChromaticResult exact_chromatic(const Graph& g, int lower_hint, std::uint64_t node_budget) {
    ChromaticResult r;
    if (g.n == 0) {
        r.lower = r.upper = 0;
        r.exact = true;
        return r;
    }
    int greedy_used = 0;
    std::vector<int> greedy = greedy_dsatur(g, greedy_used);
    int lower = std::max(lower_hint, g.edge_count() > 0 ? 2 : 1);
    if (lower_hint <= 0) lower = std::max(lower, max_clique(g).omega);

    Dsatur bb(g, node_budget);
    bb.best = greedy_used;
    bb.best_assign = greedy;
    bb.lower = lower;
    if (greedy_used > lower) bb.solve(0, 0);
    r.lower = bb.exhausted ? lower : bb.best;
    r.upper = bb.best;
    r.exact = !bb.exhausted || bb.best == lower;
    r.lower = std::min(std::max(r.lower, lower), r.upper);
    if (r.exact) r.lower = r.upper;
    r.assignment = canonical_colours(bb.best_assign);
    r.nodes_used = bb.nodes;
    return r;
}

ColouringResult colour_class_member(const Graph& g, int threshold) {
    ColouringResult out;
    auto clique = max_clique(g);
    out.omega = clique.omega;
    SynthesisOutcome syn = synthesize(g, threshold);  // throws NotInClass on non-members
    ChromaticResult chrom = exact_chromatic(g, clique.omega);
    if (!chrom.exact) throw Error("colouring budget exhausted on a desk-scale instance");
    out.chi = chrom.chi();
    out.assignment = chrom.assignment;
    if (std::holds_alternative<PerfectCertificate>(syn)) {
        out.branch = ColourBranch::Perfect;
        if (out.chi != out.omega)
            throw Error("perfect-branch member with chi != omega: dichotomy violated");
    } else {
        out.branch = ColourBranch::BoundedCliqueWidth;
        out.certificate = std::get<SynthesisResult>(std::move(syn));
    }
    return out;
}

}  // namespace cwd
