#include "cwd/gen.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "cwd/patterns.hpp"

namespace cwd {

namespace {

int norm(int i, int L) { return ((i % L) + L) % L; }

struct ReqKey {
    Family f;
    int i;
    bool operator<(const ReqKey& o) const { return f != o.f ? f < o.f : i < o.i; }
};

enum class GenRel { Join, Cojoin, Le1Adj, Le1Non, YTSpecial, Forbidden };

struct PatternView {
    int L;
    std::set<ReqKey> present;

    bool has(Family f, int i) const { return present.count({f, i < 0 ? -1 : norm(i, L)}) > 0; }
};

// required relation between two requested sets, conditional overrides
// applied against the whole requested pattern (reflection-closed)
GenRel required_rel(const PatternView& p, ReqKey A, ReqKey B) {
    int L = p.L;
    if (A.f > B.f || (A.f == B.f && A.i > B.i)) std::swap(A, B);
    auto dist = [&](int a, int b) { return std::min(norm(a - b, L), norm(b - a, L)); };

    if (A.f == Family::Z || B.f == Family::Z || A.f == Family::R || B.f == Family::R) {
        // 5-hole only; Z and R are co-joined to everything they may coexist with
        return GenRel::Cojoin;
    }

    if (A.f == B.f) {
        int d = dist(A.i, B.i);
        if (A.f == Family::X) {
            if (d == 1) {
                if (L == 7) return GenRel::Join;
                int lo = A.i, hi = B.i;
                if (norm(lo + 1, L) != hi) std::swap(lo, hi);  // hi = lo + 1
                // a T beside the consecutive pair forces the join, and so
                // does a Y covering it
                if (L == 5 && p.has(Family::T, lo + 1)) return GenRel::Join;
                if (L == 6 && (p.has(Family::T, lo + 5) || p.has(Family::T, lo + 3) ||
                               p.has(Family::Y, lo)))
                    return GenRel::Join;
                // two disjoint consecutive pairs: a non-edge in each side
                // assembles a 4K1 across the forced co-joins
                if (L == 6 && p.has(Family::X, lo + 3) && p.has(Family::X, lo + 4))
                    return GenRel::Join;
                return GenRel::Le1Non;
            }
            if (d == 2) {
                int lo = A.i, hi = B.i;
                if (norm(lo + 2, L) != hi) std::swap(lo, hi);
                if (L == 5) {
                    if (p.has(Family::T, lo + 1) || p.has(Family::T, lo + 2))
                        return GenRel::Cojoin;
                    // both forms of the consecutive-pair co-join rule
                    if (p.has(Family::X, lo + 2) && p.has(Family::X, lo + 3))
                        return GenRel::Cojoin;
                    if (p.has(Family::X, lo) && p.has(Family::X, lo + 4)) return GenRel::Cojoin;
                }
                if (L == 6) {
                    // a consecutive X pair anywhere interlocks with skew
                    // matchings via a claw; fall back to the co-join
                    for (int q = 0; q < L; ++q)
                        if (p.has(Family::X, q) && p.has(Family::X, q + 1)) return GenRel::Cojoin;
                }
                return GenRel::Le1Adj;
            }
            return GenRel::Cojoin;  // d == 3 on 6- and 7-holes
        }
        if (A.f == Family::Y) {
            if (d == 1) return GenRel::Le1Non;
            if (d == 2) return GenRel::Forbidden;
            // d == 3: on a 6-hole the printed <=1-neighbour bound meets a
            // C4-twin through the two shared hole vertices, so big sets
            // cannot coexist at all
            return L == 6 ? GenRel::Forbidden : GenRel::Cojoin;
        }
        if (A.f == Family::T) {
            if (L == 5) {
                if (d == 1) return GenRel::Cojoin;
                int lo = A.i, hi = B.i;
                if (norm(lo + 2, L) != hi) std::swap(lo, hi);
                if (p.has(Family::X, lo) || p.has(Family::X, lo + 1)) return GenRel::Cojoin;
                return GenRel::Le1Adj;
            }
            // 6-hole: only distance 2 coexists
            if (d != 2) return GenRel::Forbidden;
            int lo = A.i, hi = B.i;
            if (norm(lo + 2, L) != hi) std::swap(lo, hi);
            if (p.has(Family::X, lo) || p.has(Family::X, lo + 1) || p.has(Family::Y, lo + 1) ||
                p.has(Family::Y, lo + 5))
                return GenRel::Cojoin;
            return GenRel::Le1Adj;
        }
    }

    // cross-family; orient as (lower family letter first per enum: T < X < Y)
    auto off = [&](int from, int to) { return norm(to - from, L); };
    if (A.f == Family::T && B.f == Family::X) {
        if (L == 5) {
            int rel = off(A.i, B.i);  // X = T + rel
            if (rel == 0 || rel == 4) return GenRel::Join;
            if (rel == 1) {  // T = X_a's T_{a+4}: co-join when T_a is present
                if (p.has(Family::T, B.i)) return GenRel::Cojoin;
                return GenRel::Le1Adj;
            }
            if (rel == 3) {  // T = X_a's T_{a+2}: co-join when T_{a+1} is present
                if (p.has(Family::T, B.i + 1)) return GenRel::Cojoin;
                return GenRel::Le1Adj;
            }
            return GenRel::Cojoin;  // rel == 2
        }
        if (L == 6) {
            int rel = off(A.i, B.i);  // X = T + rel
            if (rel == 0 || rel == 5) return GenRel::Join;  // X_i joins T_i and T_{i+1}
            if (rel == 2 || rel == 3) return GenRel::Cojoin;  // X_i co-joins T_{i+3}, T_{i+4}
            // rel == 1 or 4: X_i vs T_{i+2} / T_{i+5}
            int x = B.i;
            if (rel == 4) {  // T = X_x's T_{x+2}: co-join when T_x present
                if (p.has(Family::T, x)) return GenRel::Cojoin;
            } else {  // rel == 1: T = X_x's T_{x+5}: mirrored trigger T_{x+1}
                if (p.has(Family::T, x + 1)) return GenRel::Cojoin;
            }
            return GenRel::Le1Adj;
        }
        return GenRel::Forbidden;  // no T family on a 7-hole
    }
    if (A.f == Family::T && B.f == Family::Y) {  // 6-hole only
        int o = off(B.i, A.i);                   // T = Y_y's T_{y+o}
        // o in {0, 2}: the forced join assembles a bridge with two holes; o
        // of 1: any edge sits in a claw and the near-join bound then empties
        // T. Either way the big sets cannot coexist.
        if (o <= 2) return GenRel::Forbidden;
        return GenRel::Cojoin;  // o in {3,4,5}
    }
    if (A.f == Family::X && B.f == Family::Y) {
        int o = off(B.i, A.i);  // X = Y_y's X_{y+o}
        if (o == 0 || o == 1) return GenRel::Join;
        if (o == 2 || o == L - 1) return GenRel::Forbidden;
        return GenRel::Cojoin;
    }
    throw Error("required_rel: unhandled family pair");
}

void check_pattern(const PatternView& p) {
    int L = p.L;
    auto bad = [&](const std::string& msg) { throw InfeasibleSpec("infeasible pattern: " + msg); };
    for (int i = 0; i < L; ++i) {
        if (p.has(Family::X, i) && p.has(Family::X, i + 1) && p.has(Family::X, i + 2))
            bad("three consecutive X sets");
        if (L != 7 && p.has(Family::T, i) && p.has(Family::T, i + 1) && p.has(Family::T, i + 2))
            bad("three consecutive T sets");
        if (p.has(Family::Y, i) && p.has(Family::Y, i + 2)) bad("Y sets at distance two");
    }
    if (L == 7) {
        for (int i = 0; i < L; ++i) {
            if (p.has(Family::T, i)) bad("T sets beside a 7-hole");
            if (p.has(Family::Y, i) && (p.has(Family::X, i + 2) || p.has(Family::X, i + 6)))
                bad("X beside a non-empty Y");
        }
        if (p.has(Family::Z, -1) || p.has(Family::R, -1)) bad("Z or R beside a 7-hole");
    }
    if (L == 6) {
        for (int i = 0; i < L; ++i) {
            if (p.has(Family::T, i) && (p.has(Family::T, i + 1) || p.has(Family::T, i + 3)))
                bad("T sets at distance one or three");
            if (p.has(Family::X, i) && p.has(Family::X, i + 1) &&
                (p.has(Family::T, i) || p.has(Family::T, i + 2)))
                bad("T beside consecutive X sets");
            if (p.has(Family::Y, i)) {
                if (p.has(Family::T, i) || p.has(Family::T, i + 1) || p.has(Family::T, i + 2))
                    bad("T inside the span of a non-empty Y (bridge or claw with the hole)");
                if (p.has(Family::Y, i + 3)) bad("Y sets at distance three");
                if (p.has(Family::X, i + 2) || p.has(Family::X, i + 5))
                    bad("X beside a non-empty Y");
                if (p.has(Family::Y, i + 1) && p.has(Family::T, i + 3))
                    bad("T beside consecutive Y sets");
            }
        }
        if (p.has(Family::Z, -1) || p.has(Family::R, -1)) bad("Z or R beside a 6-hole");
    }
    if (L == 5) {
        for (int i = 0; i < L; ++i) {
            if (p.has(Family::Y, i)) bad("Y sets beside a 5-hole");
            if (p.has(Family::Z, -1) && (p.has(Family::T, i) || p.has(Family::X, i)))
                bad("T or X beside a non-empty Z");
            if (p.has(Family::R, -1) && p.has(Family::T, i)) bad("T beside a non-empty R");
            if (p.has(Family::T, i) && p.has(Family::X, i) && p.has(Family::X, i + 1))
                bad("T_i with X_i and X_{i+1}");
            if (p.has(Family::T, i + 2) && p.has(Family::X, i) && p.has(Family::X, i + 1))
                bad("T_{i+2} with X_i and X_{i+1}");
            if (p.has(Family::T, i) && p.has(Family::X, i) && p.has(Family::T, i + 1))
                bad("T_i with X_i and T_{i+1}");
        }
    }
}

unsigned trace_of(Family f, int i, int L) {
    auto run = [&](int s, int c) {
        unsigned m = 0;
        for (int k = 0; k < c; ++k) m |= 1u << norm(s + k, L);
        return m;
    };
    switch (f) {
        case Family::T: return run(i, 2);
        case Family::X: return run(i, 3);
        case Family::Y: return run(i, 4);
        case Family::Z: return L == 5 ? run(0, 5) : (run(i, 2) | run(i + 3, 2));
        case Family::R: return 0;
    }
    return 0;
}

struct PlantState {
    const PlantSpec& spec;
    Rng rng;
    int L;
    Graph g;
    std::map<ReqKey, std::vector<int>> verts;
    std::vector<char> budget;  // cross-matching budget per vertex

    PlantState(const PlantSpec& s, std::uint64_t seed)
        : spec(s), rng(seed), L(s.hole_len), g(0) {}
};

void add_columns(PlantState& st, const std::vector<ReqKey>& comp,
                 const std::map<ReqKey, std::map<ReqKey, GenRel>>& rel) {
    // columns: cliques meeting each set of the component at most once, only
    // across pairs whose required relation is a matching
    int min_sz = 1 << 20;
    for (const auto& k : comp) min_sz = std::min(min_sz, (int)st.verts.at(k).size());
    int cols = st.rng.next_int(0, min_sz);
    for (int c = 0; c < cols; ++c) {
        // random subset of the component, >= 2 sets, pairwise matchable
        std::vector<ReqKey> pool = comp;
        st.rng.shuffle(pool);
        std::vector<ReqKey> chosen;
        for (const auto& k : pool) {
            bool ok = true;
            for (const auto& c2 : chosen)
                if (rel.at(k).at(c2) != GenRel::Le1Adj) ok = false;
            if (ok && (chosen.size() < 2 || st.rng.next_bool(0.5))) chosen.push_back(k);
        }
        if (chosen.size() < 2) continue;
        std::vector<int> col;
        bool feasible = true;
        for (const auto& k : chosen) {
            std::vector<int> free;
            for (int v : st.verts.at(k))
                if (!st.budget[v]) free.push_back(v);
            if (free.empty()) {
                feasible = false;
                break;
            }
            col.push_back(free[(std::size_t)st.rng.next_below(free.size())]);
        }
        if (!feasible) continue;
        for (int v : col) st.budget[v] = 1;
        for (std::size_t a = 0; a < col.size(); ++a)
            for (std::size_t b = a + 1; b < col.size(); ++b) st.g.add_edge(col[a], col[b]);
    }
}

void add_nonedge_matching(PlantState& st, const ReqKey& A, const ReqKey& B) {
    // all edges except a sampled partial matching
    const auto& va = st.verts.at(A);
    const auto& vb = st.verts.at(B);
    std::vector<int> pa = va, pb = vb;
    st.rng.shuffle(pa);
    st.rng.shuffle(pb);
    std::size_t m = (std::size_t)st.rng.next_below(std::min(pa.size(), pb.size()) + 1);
    std::set<std::pair<int, int>> missing;
    for (std::size_t k = 0; k < m; ++k) missing.insert({std::min(pa[k], pb[k]), std::max(pa[k], pb[k])});
    for (int u : va)
        for (int v : vb)
            if (!missing.count({std::min(u, v), std::max(u, v)})) st.g.add_edge(u, v);
}

void add_yt_special(PlantState& st, const ReqKey& Y, const ReqKey& T, bool matching_only) {
    const auto& vy = st.verts.at(Y);
    const auto& vt = st.verts.at(T);
    std::set<std::pair<int, int>> missing;  // (y, t) non-edges
    int mode = matching_only ? 0 : st.rng.next_int(0, 2);
    if (mode == 0) {
        // plain non-edge matching
        std::vector<int> py = vy, pt = vt;
        st.rng.shuffle(py);
        st.rng.shuffle(pt);
        std::size_t m = (std::size_t)st.rng.next_below(std::min(py.size(), pt.size()) + 1);
        for (std::size_t k = 0; k < m; ++k) missing.insert({py[k], pt[k]});
    } else if (mode == 1) {
        // one all-non-adjacent t vertex plus a non-edge matching on the rest
        int t0 = vt[(std::size_t)st.rng.next_below(vt.size())];
        for (int y : vy) missing.insert({y, t0});
        std::vector<int> py = vy, pt;
        for (int t : vt)
            if (t != t0) pt.push_back(t);
        st.rng.shuffle(py);
        st.rng.shuffle(pt);
        std::size_t m = (std::size_t)st.rng.next_below(std::min(py.size(), pt.size()) + 1);
        for (std::size_t k = 0; k < m; ++k) missing.insert({py[k], pt[k]});
    } else {
        // disjoint stars centred on the t side
        std::vector<int> py = vy;
        st.rng.shuffle(py);
        std::size_t used = 0;
        for (int t : vt) {
            if (used >= py.size()) break;
            if (!st.rng.next_bool(0.5)) continue;
            std::size_t leaves =
                1 + (std::size_t)st.rng.next_below(std::min<std::size_t>(3, py.size() - used));
            // a star may not swallow all of y: its centre must keep a neighbour
            leaves = std::min(leaves, vy.size() - 1);
            for (std::size_t k = 0; k < leaves && used < py.size(); ++k)
                missing.insert({py[used++], t});
        }
    }
    for (int y : vy)
        for (int t : vt)
            if (!missing.count({y, t})) st.g.add_edge(y, t);
}

Graph plant_once(const PlantSpec& spec, std::uint64_t seed) {
    PlantState st(spec, seed);
    int L = st.L;
    int n = L;
    std::vector<ReqKey> keys;
    for (const auto& r : spec.sets) {
        keys.push_back({r.family, r.index < 0 ? -1 : norm(r.index, L)});
        n += r.size;
    }
    st.g = Graph(n);
    st.budget.assign(n, 0);
    for (int p = 0; p < L; ++p) st.g.add_edge(p, (p + 1) % L);
    int next = L;
    for (std::size_t k = 0; k < spec.sets.size(); ++k) {
        std::vector<int> vs;
        for (int c = 0; c < spec.sets[k].size; ++c) vs.push_back(next++);
        // in-set clique and the hole trace
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) st.g.add_edge(vs[a], vs[b]);
        unsigned tr = trace_of(keys[k].f, keys[k].i, L);
        for (int p = 0; p < L; ++p)
            if (tr & (1u << p))
                for (int v : vs) st.g.add_edge(v, p);
        st.verts[keys[k]] = vs;
    }

    PatternView pv{L, std::set<ReqKey>(keys.begin(), keys.end())};
    std::map<ReqKey, std::map<ReqKey, GenRel>> rel;
    for (const auto& a : keys)
        for (const auto& b : keys)
            if (!(a.f == b.f && a.i == b.i)) rel[a][b] = required_rel(pv, a, b);

    // joins and co-joins first
    for (std::size_t a = 0; a < keys.size(); ++a)
        for (std::size_t b = a + 1; b < keys.size(); ++b) {
            GenRel r = rel[keys[a]][keys[b]];
            if (r == GenRel::Forbidden)
                throw InfeasibleSpec("required relation is a coexistence violation");
            if (r == GenRel::Join)
                for (int u : st.verts[keys[a]])
                    for (int v : st.verts[keys[b]]) st.g.add_edge(u, v);
        }
    // matchable components -> columns
    {
        std::map<ReqKey, int> comp;
        int nc = 0;
        for (const auto& k : keys)
            if (!comp.count(k)) {
                std::vector<ReqKey> stack{k};
                comp[k] = nc;
                while (!stack.empty()) {
                    ReqKey u = stack.back();
                    stack.pop_back();
                    for (const auto& w : keys)
                        if (!comp.count(w) && rel[u][w] == GenRel::Le1Adj) {
                            comp[w] = nc;
                            stack.push_back(w);
                        }
                }
                ++nc;
            }
        for (int c = 0; c < nc; ++c) {
            std::vector<ReqKey> members;
            for (const auto& k : keys)
                if (comp[k] == c) members.push_back(k);
            if (members.size() >= 2) add_columns(st, members, rel);
        }
    }
    // near-join matchings and the Y/T shapes
    for (std::size_t a = 0; a < keys.size(); ++a)
        for (std::size_t b = a + 1; b < keys.size(); ++b) {
            GenRel r = rel[keys[a]][keys[b]];
            if (r == GenRel::Le1Non) add_nonedge_matching(st, keys[a], keys[b]);
            if (r == GenRel::YTSpecial) {
                ReqKey y = keys[a].f == Family::Y ? keys[a] : keys[b];
                ReqKey t = keys[a].f == Family::T ? keys[a] : keys[b];
                bool companion = false;
                for (const auto& k : keys)
                    if (k.f == Family::Y && k.i != y.i) companion = true;
                add_yt_special(st, y, t, companion);
            }
        }
    return st.g;
}

}  // namespace

void check_spec_pattern(const PlantSpec& spec) {
    if (spec.hole_len < 5 || spec.hole_len > 7) throw InfeasibleSpec("hole length must be 5, 6 or 7");
    PatternView pv{spec.hole_len, {}};
    for (const auto& r : spec.sets) {
        if (r.size < spec.threshold)
            throw InfeasibleSpec("set below the bigness threshold");
        if ((r.family == Family::Z || r.family == Family::R) && spec.hole_len != 5)
            throw InfeasibleSpec("Z and R exist only beside a 5-hole");
        ReqKey k{r.family, r.index < 0 ? -1 : norm(r.index, spec.hole_len)};
        if (!pv.present.insert(k).second) throw InfeasibleSpec("set requested twice");
    }
    check_pattern(pv);
}

Graph plant(const PlantSpec& spec, int max_attempts) {
    check_spec_pattern(spec);
    std::string last;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::uint64_t seed = spec.seed * 0x9e3779b97f4a7c15ULL + (std::uint64_t)attempt + 1;
        Graph g = plant_once(spec, seed);
        auto mem = is_class_member(g);
        if (!mem.member()) {
            last = "membership: contains " + mem.first_witness()->pattern.name();
            if (std::getenv("CWD_PLANT_DEBUG")) {
                auto occ = *mem.first_witness();
                std::fprintf(stderr, "[plant] %s witness:", occ.pattern.name().c_str());
                int L = spec.hole_len;
                for (int v : occ.vertices) {
                    if (v < L) {
                        std::fprintf(stderr, " hole%d", v);
                        continue;
                    }
                    int base = L;
                    for (const auto& r : spec.sets) {
                        if (v < base + r.size) {
                            std::fprintf(stderr, " %c%d.%d", (char)r.family, r.index, v - base);
                            break;
                        }
                        base += r.size;
                    }
                }
                std::fprintf(stderr, "\n");
            }
            continue;
        }
        Hole hole;
        for (int p = 0; p < spec.hole_len; ++p) hole.push_back(p);
        try {
            Decomposition d = classify(g, hole, spec.threshold);
            if (verify_properties(g, d).failures() > 0) {
                last = "property failure";
                continue;
            }
            // every requested set must be recovered in full
            if (d.sets.size() != spec.sets.size()) {
                last = "set recovery mismatch";
                continue;
            }
        } catch (const Error& e) {
            last = e.what();
            continue;
        }
        return g;
    }
    throw InfeasibleSpec("plant: no valid instance after retries (" + last + ")");
}

std::optional<Graph> reject_sample(int n, double edge_prob, std::uint64_t seed, int budget) {
    Rng rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_bool(edge_prob)) g.add_edge(u, v);
        if (is_class_member(g).member()) return g;
    }
    return std::nullopt;
}

PlantSpec random_plant_spec(int hole_len, Rng& rng, int threshold) {
    struct Shape {
        std::vector<std::pair<Family, int>> sets;
    };
    static const std::vector<Shape> c7 = {
        {{}},
        {{{Family::X, 0}}},
        {{{Family::X, 0}, {Family::X, 1}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 4}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::X, 4}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::X, 5}}},
        {{{Family::X, 0}, {Family::X, 2}}},
        {{{Family::X, 0}, {Family::X, 2}, {Family::X, 4}}},
        {{{Family::X, 0}, {Family::X, 3}}},
        {{{Family::Y, 0}}},
        {{{Family::Y, 0}, {Family::Y, 1}}},
        {{{Family::Y, 0}, {Family::Y, 4}}},
        {{{Family::Y, 0}, {Family::Y, 1}, {Family::Y, 4}}},
        {{{Family::Y, 0}, {Family::X, 0}}},
        {{{Family::Y, 0}, {Family::X, 0}, {Family::X, 1}}},
        {{{Family::Y, 0}, {Family::X, 3}}},
        {{{Family::Y, 0}, {Family::Y, 1}, {Family::X, 1}}},
        {{{Family::Y, 0}, {Family::X, 0}, {Family::X, 1}, {Family::X, 4}}},
    };
    static const std::vector<Shape> c6 = {
        {{}},
        {{{Family::T, 0}}},
        {{{Family::T, 0}, {Family::T, 2}}},
        {{{Family::T, 0}, {Family::T, 2}, {Family::T, 4}}},
        {{{Family::X, 0}}},
        {{{Family::X, 0}, {Family::X, 1}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::X, 4}}},
        {{{Family::X, 0}, {Family::X, 2}}},
        {{{Family::X, 0}, {Family::X, 2}, {Family::X, 4}}},
        {{{Family::X, 0}, {Family::X, 3}}},
        {{{Family::X, 0}, {Family::T, 0}}},
        {{{Family::X, 0}, {Family::T, 2}}},
        {{{Family::X, 0}, {Family::T, 2}, {Family::T, 4}}},
        {{{Family::X, 0}, {Family::T, 0}, {Family::T, 2}}},
        {{{Family::X, 0}, {Family::T, 0}, {Family::T, 2}, {Family::T, 4}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::T, 1}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::T, 1}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::T, 3}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::T, 3}, {Family::T, 5}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::T, 1}, {Family::T, 3},
          {Family::T, 5}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::T, 1}, {Family::T, 5}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::X, 4}, {Family::T, 1}}},
        {{{Family::Y, 0}}},
        {{{Family::Y, 0}, {Family::T, 3}}},
        {{{Family::Y, 0}, {Family::T, 4}}},
        {{{Family::Y, 0}, {Family::T, 5}}},
        {{{Family::Y, 0}, {Family::T, 3}, {Family::T, 5}}},
        {{{Family::Y, 0}, {Family::Y, 1}}},
        {{{Family::Y, 0}, {Family::Y, 1}, {Family::T, 4}}},
        {{{Family::Y, 0}, {Family::Y, 1}, {Family::T, 5}}},
        {{{Family::Y, 0}, {Family::X, 0}}},
        {{{Family::Y, 0}, {Family::X, 0}, {Family::X, 1}}},
        {{{Family::Y, 0}, {Family::X, 1}}},
        {{{Family::Y, 0}, {Family::X, 0}, {Family::T, 4}}},
        {{{Family::Y, 0}, {Family::Y, 1}, {Family::X, 1}}},
        {{{Family::Y, 0}, {Family::Y, 1}, {Family::X, 1}, {Family::X, 4}}},
        {{{Family::Y, 0}, {Family::Y, 1}, {Family::X, 4}}},
    };
    static const std::vector<Shape> c5 = {
        {{}},
        {{{Family::Z, -1}}},
        {{{Family::R, -1}}},
        {{{Family::Z, -1}, {Family::R, -1}}},
        {{{Family::T, 0}}},
        {{{Family::T, 0}, {Family::T, 1}}},
        {{{Family::T, 0}, {Family::T, 2}}},
        {{{Family::T, 0}, {Family::T, 1}, {Family::T, 3}}},
        {{{Family::X, 0}}},
        {{{Family::X, 0}, {Family::X, 1}}},
        {{{Family::X, 0}, {Family::X, 2}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}}},
        {{{Family::X, 0}, {Family::T, 0}}},
        {{{Family::X, 0}, {Family::T, 2}}},
        {{{Family::X, 0}, {Family::T, 3}}},
        {{{Family::X, 0}, {Family::T, 0}, {Family::T, 2}}},
        {{{Family::X, 0}, {Family::T, 0}, {Family::T, 3}}},
        {{{Family::X, 0}, {Family::T, 0}, {Family::T, 2}, {Family::T, 3}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::T, 1}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::T, 1}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::X, 3}, {Family::T, 1}, {Family::T, 3}}},
        {{{Family::X, 0}, {Family::X, 1}, {Family::T, 3}}},
        {{{Family::X, 0}, {Family::X, 2}, {Family::T, 0}}},
        {{{Family::X, 0}, {Family::X, 2}, {Family::T, 2}}},
        {{{Family::X, 0}, {Family::X, 2}, {Family::T, 0}, {Family::T, 2}}},
        {{{Family::X, 0}, {Family::X, 2}, {Family::T, 4}}},
        {{{Family::X, 0}, {Family::X, 2}, {Family::T, 0}, {Family::T, 4}}},
        {{{Family::X, 0}, {Family::X, 2}, {Family::T, 2}, {Family::T, 4}}},
        {{{Family::X, 0}, {Family::X, 2}, {Family::T, 0}, {Family::T, 2}, {Family::T, 4}}},
    };
    const auto& catalog = hole_len == 7 ? c7 : hole_len == 6 ? c6 : c5;
    const Shape& shape = catalog[(std::size_t)rng.next_below(catalog.size())];
    int rot = rng.next_int(0, hole_len - 1);
    PlantSpec spec;
    spec.hole_len = hole_len;
    spec.threshold = threshold;
    spec.seed = rng.next_u64();
    for (auto [f, i] : shape.sets)
        spec.sets.push_back(
            {f, i < 0 ? -1 : norm(i + rot, hole_len), threshold + rng.next_int(0, 4)});
    return spec;
}

}  // namespace cwd
