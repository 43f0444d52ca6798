#include "cwd/decompose.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cwd {

std::string SetId::name() const {
    std::string f(1, (char)std::tolower((char)family));
    if (index < 0) return f;
    return f + std::to_string(index);
}

const std::vector<int>& Decomposition::set(Family f, int index) const {
    static const std::vector<int> kEmpty;
    int L = len();
    SetId id{f, index < 0 ? -1 : ((index % L) + L) % L};
    auto it = sets.find(id);
    return it == sets.end() ? kEmpty : it->second;
}

const std::vector<int>& Decomposition::set(const SetId& id) const { return set(id.family, id.index); }

std::vector<SetId> Decomposition::retained_ids() const {
    std::vector<SetId> out;
    for (const auto& [id, vs] : sets)
        if (!vs.empty()) out.push_back(id);
    return out;
}

namespace {

// bitmask of hole positions adjacent to v
unsigned trace_mask(const Graph& g, const Hole& hole, int v) {
    unsigned m = 0;
    for (std::size_t p = 0; p < hole.size(); ++p)
        if (g.edge(v, hole[p])) m |= 1u << p;
    return m;
}

unsigned run_mask(int start, int count, int L) {
    unsigned m = 0;
    for (int k = 0; k < count; ++k) m |= 1u << ((start + k) % L);
    return m;
}

// An off-hole vertex whose trace fits no template always yields a claw or a
// 4K1 inside {v} + hole; locate it by search, stable sets first to match the
// flavour of the classification proofs.
Occurrence locate_trace_witness(const Graph& g, const Hole& hole, int v) {
    int L = (int)hole.size();
    auto patt_4k1 = Pattern::of(PatternKind::FourK1);
    auto patt_claw = Pattern::of(PatternKind::Claw);
    for (int a = 0; a < L; ++a)
        for (int b = a + 1; b < L; ++b)
            for (int c = b + 1; c < L; ++c) {
                Occurrence o{patt_4k1, {v, hole[a], hole[b], hole[c]}};
                if (o.verify(g)) return o;
            }
    for (int a = 0; a < L; ++a)
        for (int b = a + 1; b < L; ++b)
            for (int c = b + 1; c < L; ++c) {
                std::vector<std::vector<int>> cands = {
                    {v, hole[a], hole[b], hole[c]},  // claw centred at v
                    {hole[a], v, hole[b], hole[c]},  // claw centred on the hole
                    {hole[b], v, hole[a], hole[c]},
                    {hole[c], v, hole[a], hole[b]},
                };
                for (const auto& vs : cands) {
                    Occurrence o{patt_claw, vs};
                    if (o.verify(g)) return o;
                }
            }
    throw Error("no claw/4K1 witness found for unclassifiable vertex " + g.name_of(v));
}

std::optional<SetId> match_template(int L, unsigned mask) {
    if (L == 5) {
        if (mask == 0) return SetId{Family::R, -1};
        if (mask == run_mask(0, 5, 5)) return SetId{Family::Z, -1};
        for (int i = 0; i < 5; ++i) {
            if (mask == run_mask(i, 2, 5)) return SetId{Family::T, i};
            if (mask == run_mask(i, 3, 5)) return SetId{Family::X, i};
            if (mask == run_mask(i, 4, 5)) return SetId{Family::Y, i};
        }
        return std::nullopt;
    }
    int zspan = 5;  // Z_i: positions i, i+1, i+3, i+4
    for (int i = 0; i < L; ++i) {
        if (L == 6 && mask == run_mask(i, 2, L)) return SetId{Family::T, i};
        if (mask == run_mask(i, 3, L)) return SetId{Family::X, i};
        if (mask == run_mask(i, 4, L)) return SetId{Family::Y, i};
        unsigned z = run_mask(i, 2, L) | run_mask((i + 3) % L, 2, L);
        (void)zspan;
        if (mask == z) return SetId{Family::Z, i};
    }
    return std::nullopt;
}

Occurrence big_set_violation_witness(const Graph& g, const Hole& hole, const SetId& id,
                                     const std::vector<int>& members) {
    int L = (int)hole.size();
    int a = members[0], b = members[1];
    if (id.family == Family::Z) {  // L is 6 or 7
        int i = id.index;
        if (g.edge(a, b)) {
            Occurrence o{Pattern::of(PatternKind::Bridge),
                         {a, b, hole[i], hole[(i + 1) % L], hole[(i + 3) % L], hole[(i + 4) % L]}};
            if (o.verify(g)) return o;
        } else {
            Occurrence o{Pattern::of(PatternKind::FourK1),
                         {a, b, hole[(i + 2) % L], hole[(i + 5) % L]}};
            if (o.verify(g)) return o;
        }
    } else {  // Y on a 5-hole
        int i = id.index;
        if (g.edge(a, b)) {
            Occurrence o{Pattern::of(PatternKind::C4Twin),
                         {a, b, hole[i], hole[(i + 3) % L], hole[(i + 4) % L]}};
            if (o.verify(g)) return o;
        } else {
            Occurrence o{Pattern::of(PatternKind::Claw),
                         {hole[(i + 3) % L], a, b, hole[(i + 4) % L]}};
            if (o.verify(g)) return o;
        }
    }
    throw Error("big-set violation witness did not verify for " + id.name());
}

}  // namespace

Decomposition classify(const Graph& g, const Hole& hole, int threshold, bool iterate_to_fixpoint) {
    int L = (int)hole.size();
    if (L < 5 || L > 7 || !is_induced_cycle(g, hole)) throw NotAHole("classify: not an induced 5/6/7-cycle");
    Decomposition d;
    d.hole = hole;
    d.threshold = threshold;

    std::vector<char> on_hole(g.n, 0);
    for (int v : hole) on_hole[v] = 1;

    std::map<SetId, std::vector<int>> groups;
    for (int v = 0; v < g.n; ++v) {
        if (on_hole[v]) continue;
        unsigned mask = trace_mask(g, hole, v);
        auto id = match_template(L, mask);
        if (!id) {
            std::vector<int> trace;
            for (int p = 0; p < L; ++p)
                if (mask & (1u << p)) trace.push_back(p);
            throw UnclassifiableVertex(v, trace, locate_trace_witness(g, hole, v),
                                       "vertex " + g.name_of(v) +
                                           " fits no neighbourhood template on the hole");
        }
        groups[*id].push_back(v);
        d.assignment.emplace(v, *id);
    }

    // big-set reduction: whole small sets move to the ledger. Sets are
    // disjoint and membership depends only on the hole trace, so a second
    // pass can never remove more (the flag verifies that).
    auto reduce = [&]() {
        bool changed = false;
        for (auto it = groups.begin(); it != groups.end();) {
            if ((int)it->second.size() < threshold) {
                for (int v : it->second) d.removed.emplace_back(v, it->first);
                it = groups.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
        return changed;
    };
    reduce();
    if (iterate_to_fixpoint)
        while (reduce()) {}

    // structure facts: a retained Z (6- or 7-hole) or Y (5-hole) with two or
    // more members certifies a forbidden pattern
    for (const auto& [id, members] : groups) {
        bool violating = members.size() >= 2 &&
                         ((L >= 6 && id.family == Family::Z) || (L == 5 && id.family == Family::Y));
        if (violating)
            throw StructureViolation(id, big_set_violation_witness(g, hole, id, members),
                                     "set " + id.name() + " has " + std::to_string(members.size()) +
                                         " members; the structure forces it below the threshold");
    }

    for (auto& [id, members] : groups) {
        std::sort(members.begin(), members.end());
        d.sets.emplace(id, std::move(members));
    }
    std::sort(d.removed.begin(), d.removed.end());
    return d;
}

int PropertyReport::failures() const {
    int c = 0;
    for (const auto& r : results)
        if (r.status == PropStatus::Fail) ++c;
    return c;
}

const PropertyResult* PropertyReport::find(const std::string& id) const {
    for (const auto& r : results)
        if (r.id == id) return &r;
    return nullptr;
}

namespace {

enum class RelNeed { Join, Cojoin, Le1AdjBoth, Le1NonBoth };

struct Checker {
    const Graph& g;
    const Decomposition& d;
    int L;
    PropertyReport rep;

    const std::vector<int>& S(Family f, int i) const { return d.set(f, i); }
    bool has(Family f, int i) const { return !S(f, i).empty(); }

    void push(const std::string& id, const std::string& desc, PropStatus st,
              std::vector<int> wit = {}, const std::string& predicted = "") {
        rep.results.push_back({id, desc, st, std::move(wit), predicted});
    }

    // relation check between (fa, i) and (fb, i+off) over all i
    bool rel_holds(const std::vector<int>& A, const std::vector<int>& B, RelNeed need,
                   std::vector<int>& wit) const {
        for (int a : A) {
            int nb = 0, nn = 0, w1 = -1, w2 = -1, m1 = -1, m2 = -1;
            for (int b : B) {
                if (g.edge(a, b)) {
                    ++nb;
                    (w1 == -1 ? w1 : w2) = b;
                } else {
                    ++nn;
                    (m1 == -1 ? m1 : m2) = b;
                }
            }
            switch (need) {
                case RelNeed::Join:
                    if (nn > 0) { wit = {a, m1}; return false; }
                    break;
                case RelNeed::Cojoin:
                    if (nb > 0) { wit = {a, w1}; return false; }
                    break;
                case RelNeed::Le1AdjBoth:
                    if (nb > 1) { wit = {a, w1, w2}; return false; }
                    break;
                case RelNeed::Le1NonBoth:
                    if (nn > 1) { wit = {a, m1, m2}; return false; }
                    break;
            }
        }
        return true;
    }

    void rel(const std::string& id, const std::string& desc, Family fa, Family fb, int off,
             RelNeed need, const std::string& predicted) {
        bool any = false;
        for (int i = 0; i < L; ++i) {
            const auto& A = S(fa, i);
            const auto& B = S(fb, i + off);
            if (A.empty() || B.empty()) continue;
            any = true;
            std::vector<int> wit;
            bool ok = rel_holds(A, B, need, wit);
            bool ok_back = true;
            std::vector<int> wit_back;
            if (ok && (need == RelNeed::Le1AdjBoth || need == RelNeed::Le1NonBoth))
                ok_back = rel_holds(B, A, need, wit_back);
            if (!ok || !ok_back) {
                push(id, desc, PropStatus::Fail, ok ? wit_back : wit, predicted);
                return;
            }
        }
        push(id, desc, any ? PropStatus::Pass : PropStatus::Vacuous, {}, predicted);
    }

    void not_coexist(const std::string& id, const std::string& desc, Family fa, Family fb, int off,
                     const std::string& predicted) {
        for (int i = 0; i < L; ++i)
            if (has(fa, i) && has(fb, i + off)) {
                push(id, desc, PropStatus::Fail, {S(fa, i)[0], S(fb, i + off)[0]}, predicted);
                return;
            }
        push(id, desc, PropStatus::Pass, {}, predicted);
    }

    void no3consec(const std::string& id, const std::string& desc, Family f,
                   const std::string& predicted) {
        for (int i = 0; i < L; ++i)
            if (has(f, i) && has(f, i + 1) && has(f, i + 2)) {
                push(id, desc, PropStatus::Fail, {S(f, i)[0], S(f, i + 1)[0], S(f, i + 2)[0]},
                     predicted);
                return;
            }
        push(id, desc, PropStatus::Pass, {}, predicted);
    }

    // trigger set non-empty => relation between two other sets
    void cond_rel(const std::string& id, const std::string& desc, Family ft, int offt, Family fa,
                  int offa, Family fb, int offb, RelNeed need, const std::string& predicted) {
        bool any = false;
        for (int i = 0; i < L; ++i) {
            if (!has(ft, i + offt)) continue;
            const auto& A = S(fa, i + offa);
            const auto& B = S(fb, i + offb);
            if (A.empty() || B.empty()) continue;
            any = true;
            std::vector<int> wit;
            if (!rel_holds(A, B, need, wit) ||
                ((need == RelNeed::Le1AdjBoth || need == RelNeed::Le1NonBoth) &&
                 !rel_holds(B, A, need, wit))) {
                push(id, desc, PropStatus::Fail, wit, predicted);
                return;
            }
        }
        push(id, desc, any ? PropStatus::Pass : PropStatus::Vacuous, {}, predicted);
    }

    void one_of_empty(const std::string& id, const std::string& desc,
                      std::vector<std::pair<Family, int>> offs, const std::string& predicted) {
        for (int i = 0; i < L; ++i) {
            bool all = true;
            std::vector<int> wit;
            for (auto [f, o] : offs) {
                if (!has(f, i + o)) { all = false; break; }
                wit.push_back(S(f, i + o)[0]);
            }
            if (all) {
                push(id, desc, PropStatus::Fail, wit, predicted);
                return;
            }
        }
        push(id, desc, PropStatus::Pass, {}, predicted);
    }

    // cliqueness of every retained set
    void cliques(const std::string& id) {
        for (const auto& sid : d.retained_ids())
            for (std::size_t a = 0; a < d.set(sid).size(); ++a)
                for (std::size_t b = a + 1; b < d.set(sid).size(); ++b)
                    if (!g.edge(d.set(sid)[a], d.set(sid)[b])) {
                        push(id, "every retained set induces a clique", PropStatus::Fail,
                             {d.set(sid)[a], d.set(sid)[b]}, "claw or 4K1");
                        return;
                    }
        push(id, "every retained set induces a clique", PropStatus::Pass);
    }

    void run();
    void run_c7();
    void run_c6();
    void run_c5();
};

void Checker::run() {
    cliques("O:cliques");
    if (L == 7) run_c7();
    if (L == 6) run_c6();
    if (L == 5) run_c5();
}

void Checker::run_c7() {
    rel("P1", "X_i and X_{i+1} form a join", Family::X, Family::X, 1, RelNeed::Join, "4K1");
    rel("P2", "a vertex of X_i has at most one neighbour in X_{i+2} and vice versa", Family::X,
        Family::X, 2, RelNeed::Le1AdjBoth, "bridge");
    rel("P3", "X_i and X_{i+3} form a co-join", Family::X, Family::X, 3, RelNeed::Cojoin, "claw");
    [&] {  // P4: joint bound across X_{i+2} and X_{i+5}
        bool any = false;
        for (int i = 0; i < L; ++i) {
            const auto& A = S(Family::X, i);
            if (A.empty() || (!has(Family::X, i + 2) && !has(Family::X, i + 5))) continue;
            any = true;
            for (int a : A) {
                std::vector<int> nb;
                for (int b : S(Family::X, i + 2))
                    if (g.edge(a, b)) nb.push_back(b);
                for (int b : S(Family::X, i + 5))
                    if (g.edge(a, b)) nb.push_back(b);
                if (nb.size() > 1) {
                    push("P4", "a vertex of X_i has at most one neighbour in X_{i+2} u X_{i+5}",
                         PropStatus::Fail, {a, nb[0], nb[1]});
                    return;
                }
            }
        }
        push("P4", "a vertex of X_i has at most one neighbour in X_{i+2} u X_{i+5}",
             any ? PropStatus::Pass : PropStatus::Vacuous);
    }();
    no3consec("P5", "no three consecutive sets X_i are non-empty", Family::X, "bridge");
    rel("P6", "a vertex of Y_i has at most one non-neighbour in Y_{i+1} and vice versa", Family::Y,
        Family::Y, 1, RelNeed::Le1NonBoth, "bridge");
    not_coexist("P7", "Y_i and Y_{i+2} are not both non-empty", Family::Y, Family::Y, 2, "bridge");
    rel("P8", "Y_i and Y_{i+3} form a co-join", Family::Y, Family::Y, 3, RelNeed::Cojoin, "claw");
    rel("P9a", "Y_i and X_i form a join", Family::Y, Family::X, 0, RelNeed::Join, "4K1");
    rel("P9b", "Y_i and X_{i+1} form a join", Family::Y, Family::X, 1, RelNeed::Join, "4K1");
    not_coexist("P10a", "Y_i non-empty forces X_{i+2} empty", Family::Y, Family::X, 2, "bridge");
    not_coexist("P10b", "Y_i non-empty forces X_{i+6} empty", Family::Y, Family::X, 6, "bridge");
    rel("P11a", "Y_i and X_{i+3} form a co-join", Family::Y, Family::X, 3, RelNeed::Cojoin, "claw");
    rel("P11b", "Y_i and X_{i+5} form a co-join", Family::Y, Family::X, 5, RelNeed::Cojoin, "claw");
    rel("P12", "Y_i and X_{i+4} form a co-join", Family::Y, Family::X, 4, RelNeed::Cojoin, "claw");
}

void Checker::run_c6() {
    not_coexist("P13", "T_i and T_{i+1} are not both non-empty", Family::T, Family::T, 1,
                "C7 or 4K1");
    rel("P14", "a vertex of T_i has at most one neighbour in T_{i+2} and vice versa", Family::T,
        Family::T, 2, RelNeed::Le1AdjBoth, "C4-twin");
    not_coexist("P15", "T_i and T_{i+3} are not both non-empty", Family::T, Family::T, 3,
                "4K1 or bridge");
    [&] {  // P16: partner triangles across T_i, T_{i+2}, T_{i+4}
        bool any = false;
        for (int i = 0; i < L; ++i) {
            const auto& A = S(Family::T, i);
            const auto& B = S(Family::T, i + 2);
            const auto& C = S(Family::T, i + 4);
            if (A.empty() || B.empty() || C.empty()) continue;
            any = true;
            for (int a : A)
                for (int b : B) {
                    if (!g.edge(a, b)) continue;
                    for (int c : C)
                        if (g.edge(a, c) && !g.edge(b, c)) {
                            push("P16",
                                 "neighbours of a T_i vertex in T_{i+2} and T_{i+4} are adjacent",
                                 PropStatus::Fail, {a, b, c}, "claw");
                            return;
                        }
                }
        }
        push("P16", "neighbours of a T_i vertex in T_{i+2} and T_{i+4} are adjacent",
             any ? PropStatus::Pass : PropStatus::Vacuous, {}, "claw");
    }();
    rel("P17", "a vertex of X_i has at most one non-neighbour in X_{i+1} and vice versa", Family::X,
        Family::X, 1, RelNeed::Le1NonBoth, "bridge");
    rel("P18", "a vertex of X_i has at most one neighbour in X_{i+2} and vice versa", Family::X,
        Family::X, 2, RelNeed::Le1AdjBoth, "bridge");
    rel("P19", "X_i and X_{i+3} form a co-join", Family::X, Family::X, 3, RelNeed::Cojoin, "claw");
    no3consec("P20", "no three consecutive sets X_i are non-empty", Family::X, "bridge");
    rel("P21", "a vertex of Y_i has at most one non-neighbour in Y_{i+1} and vice versa", Family::Y,
        Family::Y, 1, RelNeed::Le1NonBoth, "bridge");
    not_coexist("P22", "Y_i and Y_{i+2} are not both non-empty", Family::Y, Family::Y, 2,
                "C4-twin or bridge");
    rel("P23", "a vertex of Y_i has at most one neighbour in Y_{i+3} and vice versa", Family::Y,
        Family::Y, 3, RelNeed::Le1AdjBoth, "bridge");
    rel("P24a", "X_i and T_i form a join", Family::X, Family::T, 0, RelNeed::Join, "4K1");
    rel("P24b", "X_i and T_{i+1} form a join", Family::X, Family::T, 1, RelNeed::Join, "4K1");
    rel("P25a", "a vertex of X_i has at most one neighbour in T_{i+2} and vice versa", Family::X,
        Family::T, 2, RelNeed::Le1AdjBoth, "bridge");
    rel("P25b", "a vertex of X_i has at most one neighbour in T_{i+5} and vice versa", Family::X,
        Family::T, 5, RelNeed::Le1AdjBoth, "bridge");
    rel("P26a", "X_i and T_{i+3} form a co-join", Family::X, Family::T, 3, RelNeed::Cojoin, "claw");
    rel("P26b", "X_i and T_{i+4} form a co-join", Family::X, Family::T, 4, RelNeed::Cojoin, "claw");
    cond_rel("P27a", "X_i non-empty forces a co-join between T_i and T_{i+2}", Family::X, 0,
             Family::T, 0, Family::T, 2, RelNeed::Cojoin, "C4-twin");
    cond_rel("P27b", "X_i non-empty forces a co-join between T_{i+1} and T_{i+5}", Family::X, 0,
             Family::T, 1, Family::T, 5, RelNeed::Cojoin, "C4-twin");
    [&] {  // P28
        for (int i = 0; i < L; ++i)
            if (has(Family::X, i) && has(Family::X, i + 1)) {
                if (has(Family::T, i)) {
                    push("P28", "X_i and X_{i+1} non-empty force T_i and T_{i+2} empty",
                         PropStatus::Fail, {S(Family::T, i)[0]}, "bridge");
                    return;
                }
                if (has(Family::T, i + 2)) {
                    push("P28", "X_i and X_{i+1} non-empty force T_i and T_{i+2} empty",
                         PropStatus::Fail, {S(Family::T, i + 2)[0]}, "bridge");
                    return;
                }
            }
        push("P28", "X_i and X_{i+1} non-empty force T_i and T_{i+2} empty", PropStatus::Pass, {},
             "bridge");
    }();
    cond_rel("P29", "T_i non-empty forces a co-join between X_i and T_{i+2}", Family::T, 0,
             Family::X, 0, Family::T, 2, RelNeed::Cojoin, "bridge");
    cond_rel("P30", "T_i non-empty forces a join between X_{i+1} and X_{i+2}", Family::T, 0,
             Family::X, 1, Family::X, 2, RelNeed::Join, "4K1");
    auto not_both = [&](const std::string& id, const std::string& desc, Family fa, int offa,
                        Family fb, int offb, Family fc, int offc, const std::string& predicted) {
        bool any = false;
        for (int i = 0; i < L; ++i) {
            const auto& A = S(fa, i + offa);
            const auto& B = S(fb, i + offb);
            const auto& C = S(fc, i + offc);
            if (A.empty() || B.empty() || C.empty()) continue;
            any = true;
            for (int a : A) {
                int wb = -1, wc = -1;
                for (int b : B)
                    if (g.edge(a, b)) wb = b;
                for (int c : C)
                    if (g.edge(a, c)) wc = c;
                if (wb != -1 && wc != -1) {
                    push(id, desc, PropStatus::Fail, {a, wb, wc}, predicted);
                    return;
                }
            }
        }
        push(id, desc, any ? PropStatus::Pass : PropStatus::Vacuous, {}, predicted);
    };
    not_both("P31a", "no X_i vertex is adjacent to both T_{i+2} and X_{i+2}", Family::X, 0,
             Family::T, 2, Family::X, 2, "bridge");
    not_both("P31b", "no X_{i+2} vertex is adjacent to both T_{i+1} and X_i", Family::X, 2,
             Family::T, 1, Family::X, 0, "bridge");
    not_both("P32", "no X_i vertex is adjacent to both X_{i+2} and T_{i+4}", Family::X, 0,
             Family::X, 2, Family::T, 4, "claw");
    not_both("P33", "no X_{i+2} vertex is adjacent to both T_{i+4} and X_i", Family::X, 2,
             Family::T, 4, Family::X, 0, "claw");
    {  // P34
        bool any = false;
        for (int i = 0; i < L; ++i) {
            if (!has(Family::X, i) || !has(Family::T, i + 1) || !has(Family::T, i + 5)) continue;
            any = true;
            std::vector<int> wit;
            if (!rel_holds(S(Family::T, i + 1), S(Family::T, i + 5), RelNeed::Cojoin, wit)) {
                push("P34", "X_i, T_{i+1}, T_{i+5} non-empty force a T_{i+1}/T_{i+5} co-join",
                     PropStatus::Fail, wit, "C4-twin");
                return;
            }
        }
        push("P34", "X_i, T_{i+1}, T_{i+5} non-empty force a T_{i+1}/T_{i+5} co-join",
             any ? PropStatus::Pass : PropStatus::Vacuous, {}, "C4-twin");
    }
    rel("P35a", "Y_i and T_i form a join", Family::Y, Family::T, 0, RelNeed::Join, "claw");
    rel("P35b", "Y_i and T_{i+2} form a join", Family::Y, Family::T, 2, RelNeed::Join, "claw");
    [&] {  // P36 (one-way) and P37
        const char* d36 = "a vertex of Y_i has at most two non-neighbours in T_{i+1}";
        const char* d37 =
            "two T_{i+1} non-neighbours of a Y_i vertex split into an all-adjacent and an "
            "all-non-adjacent one";
        bool any = false, any37 = false;
        PropStatus st36 = PropStatus::Pass, st37 = PropStatus::Pass;
        std::vector<int> w36, w37;
        for (int i = 0; i < L; ++i) {
            const auto& Y = S(Family::Y, i);
            const auto& T = S(Family::T, i + 1);
            if (Y.empty() || T.empty()) continue;
            any = true;
            for (int a : Y) {
                std::vector<int> miss;
                for (int t : T)
                    if (!g.edge(a, t)) miss.push_back(t);
                if (miss.size() > 2 && st36 == PropStatus::Pass) {
                    st36 = PropStatus::Fail;
                    w36 = {a, miss[0], miss[1], miss[2]};
                }
                if (miss.size() == 2) {
                    any37 = true;
                    auto adj_all = [&](int t) {
                        for (int b : Y)
                            if (b != a && !g.edge(t, b)) return false;
                        return true;
                    };
                    auto non_all = [&](int t) {
                        for (int b : Y)
                            if (b != a && g.edge(t, b)) return false;
                        return true;
                    };
                    bool ok = (adj_all(miss[0]) && non_all(miss[1])) ||
                              (adj_all(miss[1]) && non_all(miss[0]));
                    if (!ok && st37 == PropStatus::Pass) {
                        st37 = PropStatus::Fail;
                        w37 = {a, miss[0], miss[1]};
                    }
                }
            }
        }
        push("P36", d36, any ? st36 : PropStatus::Vacuous, w36, "bridge");
        push("P37", d37, any37 ? st37 : PropStatus::Vacuous, w37, "C4-twin");
    }();
    rel("P38a", "Y_i and T_{i+3} form a co-join", Family::Y, Family::T, 3, RelNeed::Cojoin, "claw");
    rel("P38b", "Y_i and T_{i+5} form a co-join", Family::Y, Family::T, 5, RelNeed::Cojoin, "claw");
    rel("P39", "Y_i and T_{i+4} form a co-join", Family::Y, Family::T, 4, RelNeed::Cojoin, "claw");
    [&] {  // P40
        for (int i = 0; i < L; ++i)
            if (has(Family::Y, i) && has(Family::T, i) && has(Family::T, i + 2)) {
                push("P40", "Y_i non-empty forces T_i or T_{i+2} empty", PropStatus::Fail,
                     {S(Family::Y, i)[0], S(Family::T, i)[0], S(Family::T, i + 2)[0]}, "bridge");
                return;
            }
        push("P40", "Y_i non-empty forces T_i or T_{i+2} empty", PropStatus::Pass, {}, "bridge");
    }();
    [&] {  // P41
        for (int i = 0; i < L; ++i)
            if (has(Family::Y, i) && has(Family::Y, i + 1)) {
                if (has(Family::T, i)) {
                    push("P41", "Y_i and Y_{i+1} non-empty force T_i and T_{i+3} empty",
                         PropStatus::Fail, {S(Family::T, i)[0]}, "bridge");
                    return;
                }
                if (has(Family::T, i + 3)) {
                    push("P41", "Y_i and Y_{i+1} non-empty force T_i and T_{i+3} empty",
                         PropStatus::Fail, {S(Family::T, i + 3)[0]}, "bridge");
                    return;
                }
            }
        push("P41", "Y_i and Y_{i+1} non-empty force T_i and T_{i+3} empty", PropStatus::Pass, {},
             "bridge");
    }();
    cond_rel("P42a", "Y_i and T_{i+3} non-empty force a join between Y_i and T_{i+1}", Family::T, 3,
             Family::Y, 0, Family::T, 1, RelNeed::Join, "4K1");
    cond_rel("P42b", "Y_i and T_{i+5} non-empty force a join between Y_i and T_{i+1}", Family::T, 5,
             Family::Y, 0, Family::T, 1, RelNeed::Join, "4K1");
    [&] {  // P43 (one-way on the Y side)
        bool any = false;
        for (int i = 0; i < L; ++i) {
            if (!has(Family::Y, i + 1)) continue;
            const auto& Y = S(Family::Y, i);
            const auto& T = S(Family::T, i + 1);
            if (Y.empty() || T.empty()) continue;
            any = true;
            for (int a : Y) {
                std::vector<int> miss;
                for (int t : T)
                    if (!g.edge(a, t)) miss.push_back(t);
                if (miss.size() > 1) {
                    push("P43",
                         "Y_{i+1} non-empty: a Y_i vertex has at most one non-neighbour in T_{i+1}",
                         PropStatus::Fail, {a, miss[0], miss[1]}, "bridge");
                    return;
                }
            }
        }
        push("P43", "Y_{i+1} non-empty: a Y_i vertex has at most one non-neighbour in T_{i+1}",
             any ? PropStatus::Pass : PropStatus::Vacuous, {}, "bridge");
    }();
    cond_rel("P44a", "Y_i non-empty forces a co-join between T_{i+1} and T_{i+5}", Family::Y, 0,
             Family::T, 1, Family::T, 5, RelNeed::Cojoin, "C4-twin");
    cond_rel("P44b", "Y_i non-empty forces a co-join between T_{i+1} and T_{i+3}", Family::Y, 0,
             Family::T, 1, Family::T, 3, RelNeed::Cojoin, "C4-twin");
    rel("P45a", "Y_i and X_i form a join", Family::Y, Family::X, 0, RelNeed::Join, "claw");
    rel("P45b", "Y_i and X_{i+1} form a join", Family::Y, Family::X, 1, RelNeed::Join, "claw");
    not_coexist("P46a", "Y_i non-empty forces X_{i+2} empty", Family::Y, Family::X, 2, "bridge");
    not_coexist("P46b", "Y_i non-empty forces X_{i+5} empty", Family::Y, Family::X, 5, "bridge");
    rel("P47a", "Y_i and X_{i+3} form a co-join", Family::Y, Family::X, 3, RelNeed::Cojoin, "claw");
    rel("P47b", "Y_i and X_{i+4} form a co-join", Family::Y, Family::X, 4, RelNeed::Cojoin, "claw");
    [&] {  // P48 (appendix form: X_{i+1} with T_i)
        for (int i = 0; i < L; ++i)
            if (has(Family::Y, i)) {
                if (has(Family::X, i + 1) && has(Family::T, i)) {
                    push("P48", "Y_i non-empty forces X_{i+1} or T_i empty", PropStatus::Fail,
                         {S(Family::Y, i)[0], S(Family::X, i + 1)[0], S(Family::T, i)[0]},
                         "bridge");
                    return;
                }
                if (has(Family::X, i) && has(Family::T, i + 2)) {
                    push("P48", "Y_i non-empty forces X_{i+1} or T_i empty", PropStatus::Fail,
                         {S(Family::Y, i)[0], S(Family::X, i)[0], S(Family::T, i + 2)[0]},
                         "bridge");
                    return;
                }
            }
        push("P48", "Y_i non-empty forces X_{i+1} or T_i empty", PropStatus::Pass, {}, "bridge");
    }();
}

void Checker::run_c5() {
    rel("P49", "T_i and T_{i+1} form a co-join", Family::T, Family::T, 1, RelNeed::Cojoin, "C6");
    rel("P50", "a vertex of T_i has at most one neighbour in T_{i+2} and vice versa", Family::T,
        Family::T, 2, RelNeed::Le1AdjBoth, "C4-twin");
    [&] {  // P51 joint bound
        bool any = false;
        for (int i = 0; i < L; ++i) {
            const auto& A = S(Family::T, i);
            if (A.empty() || (!has(Family::T, i + 2) && !has(Family::T, i + 3))) continue;
            any = true;
            for (int a : A) {
                std::vector<int> nb;
                for (int b : S(Family::T, i + 2))
                    if (g.edge(a, b)) nb.push_back(b);
                for (int b : S(Family::T, i + 3))
                    if (g.edge(a, b)) nb.push_back(b);
                if (nb.size() > 1) {
                    push("P51", "a vertex of T_i has at most one neighbour in T_{i+2} u T_{i+3}",
                         PropStatus::Fail, {a, nb[0], nb[1]}, "claw");
                    return;
                }
            }
        }
        push("P51", "a vertex of T_i has at most one neighbour in T_{i+2} u T_{i+3}",
             any ? PropStatus::Pass : PropStatus::Vacuous, {}, "claw");
    }();
    no3consec("P52", "no three consecutive sets T_i are non-empty", Family::T, "4K1");
    rel("P53", "a vertex of X_i has at most one non-neighbour in X_{i+1} and vice versa", Family::X,
        Family::X, 1, RelNeed::Le1NonBoth, "bridge");
    rel("P54", "a vertex of X_i has at most one neighbour in X_{i+2} and vice versa", Family::X,
        Family::X, 2, RelNeed::Le1AdjBoth, "C4-twin");
    no3consec("P55", "no three consecutive sets X_i are non-empty", Family::X, "bridge");
    [&] {  // P56
        bool any = false;
        for (int i = 0; i < L; ++i) {
            if (!has(Family::X, i) || !has(Family::X, i + 1) || !has(Family::X, i + 3)) continue;
            any = true;
            std::vector<int> wit;
            if (!rel_holds(S(Family::X, i + 3), S(Family::X, i), RelNeed::Cojoin, wit) ||
                !rel_holds(S(Family::X, i + 3), S(Family::X, i + 1), RelNeed::Cojoin, wit)) {
                push("P56", "X_i and X_{i+1} non-empty force X_{i+3} co-joined to both",
                     PropStatus::Fail, wit, "C4-twin");
                return;
            }
        }
        push("P56", "X_i and X_{i+1} non-empty force X_{i+3} co-joined to both",
             any ? PropStatus::Pass : PropStatus::Vacuous, {}, "C4-twin");
    }();
    rel("P57a", "T_i and X_i form a join", Family::T, Family::X, 0, RelNeed::Join, "claw");
    rel("P57b", "T_i and X_{i+4} form a join", Family::T, Family::X, 4, RelNeed::Join, "claw");
    rel("P58a", "a vertex of T_i has at most one neighbour in X_{i+1} and vice versa", Family::T,
        Family::X, 1, RelNeed::Le1AdjBoth, "bridge or C4-twin");
    rel("P58b", "a vertex of T_i has at most one neighbour in X_{i+3} and vice versa", Family::T,
        Family::X, 3, RelNeed::Le1AdjBoth, "bridge or C4-twin");
    rel("P59", "T_i and X_{i+2} form a co-join", Family::T, Family::X, 2, RelNeed::Cojoin, "claw");
    one_of_empty("P60a", "one of T_i, X_i, X_{i+1} is empty",
                 {{Family::T, 0}, {Family::X, 0}, {Family::X, 1}}, "bridge");
    one_of_empty("P60b", "one of T_{i+2}, X_i, X_{i+1} is empty",
                 {{Family::T, 2}, {Family::X, 0}, {Family::X, 1}}, "bridge");
    one_of_empty("P61", "one of T_i, X_i, T_{i+1} is empty",
                 {{Family::T, 0}, {Family::X, 0}, {Family::T, 1}}, "bridge");
    cond_rel("P62", "T_{i+1} non-empty forces a join between X_i and X_{i+1}", Family::T, 1,
             Family::X, 0, Family::X, 1, RelNeed::Join, "C6");
    cond_rel("P63a", "T_{i+1} non-empty forces a co-join between X_i and X_{i+2}", Family::T, 1,
             Family::X, 0, Family::X, 2, RelNeed::Cojoin, "claw or bridge");
    cond_rel("P63b", "T_{i+2} non-empty forces a co-join between X_i and X_{i+2}", Family::T, 2,
             Family::X, 0, Family::X, 2, RelNeed::Cojoin, "claw or bridge");
    [&] {  // P64: neighbours of an X_i vertex inside X_{i+2} u T_{i+4} are a clique
        bool any = false;
        for (int i = 0; i < L; ++i) {
            const auto& A = S(Family::X, i);
            const auto& B = S(Family::X, i + 2);
            const auto& C = S(Family::T, i + 4);
            if (A.empty() || B.empty() || C.empty()) continue;
            any = true;
            for (int a : A)
                for (int b : B) {
                    if (!g.edge(a, b)) continue;
                    for (int c : C)
                        if (g.edge(a, c) && !g.edge(b, c)) {
                            push("P64",
                                 "neighbours of an X_i vertex in X_{i+2} u T_{i+4} are a clique",
                                 PropStatus::Fail, {a, b, c}, "claw");
                            return;
                        }
                }
        }
        push("P64", "neighbours of an X_i vertex in X_{i+2} u T_{i+4} are a clique",
             any ? PropStatus::Pass : PropStatus::Vacuous, {}, "claw");
    }();
    cond_rel("P65", "X_i non-empty forces a co-join between T_i and T_{i+2}", Family::X, 0,
             Family::T, 0, Family::T, 2, RelNeed::Cojoin, "C4-twin");
    [&] {  // P66
        bool any = false;
        for (int i = 0; i < L; ++i) {
            if (!has(Family::X, i) || !has(Family::X, i + 1) || !has(Family::T, i + 1)) continue;
            any = true;
            std::vector<int> all = S(Family::X, i);
            for (int v : S(Family::X, i + 1)) all.push_back(v);
            for (int v : S(Family::T, i + 1)) all.push_back(v);
            for (std::size_t a = 0; a < all.size(); ++a)
                for (std::size_t b = a + 1; b < all.size(); ++b)
                    if (!g.edge(all[a], all[b])) {
                        push("P66", "X_i, X_{i+1}, T_{i+1} non-empty force their union to be a clique",
                             PropStatus::Fail, {all[a], all[b]});
                        return;
                    }
        }
        push("P66", "X_i, X_{i+1}, T_{i+1} non-empty force their union to be a clique",
             any ? PropStatus::Pass : PropStatus::Vacuous);
    }();
    // the R and Z observations
    rel("O:r-join-t", "T_i and R form a join", Family::T, Family::R, 0, RelNeed::Join, "4K1");
    [&] {
        const auto& R = S(Family::R, -1);
        if (R.empty()) {
            push("O:r-t", "R non-empty forces every T_i empty", PropStatus::Vacuous, {}, "bridge");
            return;
        }
        for (int i = 0; i < L; ++i)
            if (has(Family::T, i)) {
                push("O:r-t", "R non-empty forces every T_i empty", PropStatus::Fail,
                     {R[0], S(Family::T, i)[0]}, "bridge");
                return;
            }
        push("O:r-t", "R non-empty forces every T_i empty", PropStatus::Pass, {}, "bridge");
    }();
    rel("O:r-x", "X_i and R form a co-join", Family::X, Family::R, 0, RelNeed::Cojoin, "claw");
    [&] {
        const auto& Z = S(Family::Z, -1);
        const auto& R = S(Family::R, -1);
        if (Z.empty() || R.empty()) {
            push("O:r-z", "Z and R form a co-join", PropStatus::Vacuous, {}, "claw");
            return;
        }
        std::vector<int> wit;
        if (!rel_holds(Z, R, RelNeed::Cojoin, wit))
            push("O:r-z", "Z and R form a co-join", PropStatus::Fail, wit, "claw");
        else
            push("O:r-z", "Z and R form a co-join", PropStatus::Pass, {}, "claw");
    }();
    [&] {
        const auto& Z = S(Family::Z, -1);
        if (Z.empty()) {
            push("O:z-t", "Z non-empty forces every T_i empty", PropStatus::Vacuous, {},
                 "claw or bridge");
            push("O:z-x", "Z non-empty forces every X_i empty", PropStatus::Vacuous, {}, "bridge");
            return;
        }
        PropStatus st_t = PropStatus::Pass, st_x = PropStatus::Pass;
        std::vector<int> wt, wx;
        for (int i = 0; i < L; ++i) {
            if (has(Family::T, i) && st_t == PropStatus::Pass) {
                st_t = PropStatus::Fail;
                wt = {Z[0], S(Family::T, i)[0]};
            }
            if (has(Family::X, i) && st_x == PropStatus::Pass) {
                st_x = PropStatus::Fail;
                wx = {Z[0], S(Family::X, i)[0]};
            }
        }
        push("O:z-t", "Z non-empty forces every T_i empty", st_t, wt, "claw or bridge");
        push("O:z-x", "Z non-empty forces every X_i empty", st_x, wx, "bridge");
    }();
}

}  // namespace

PropertyReport verify_properties(const Graph& g, const Decomposition& d) {
    Checker c{g, d, d.len(), {}};
    c.rep.hole_len = d.len();
    c.run();
    return c.rep;
}

ReductionReport reduction_consistency(const Graph& g, const Decomposition& d) {
    ReductionReport r;
    int L = d.len();
    std::size_t families = L == 7 ? 3 * 7 : L == 6 ? 4 * 6 : 3 * 5 + 2;
    r.ledger_size = d.removed.size();
    r.ledger_bound = families * (std::size_t)(d.threshold - 1);
    r.ledger_within_bound = r.ledger_size <= r.ledger_bound;
    std::vector<int> count(g.n, 0);
    for (int v : d.hole) ++count[v];
    for (const auto& [id, vs] : d.sets)
        for (int v : vs) ++count[v];
    for (const auto& [v, id] : d.removed) ++count[v];
    r.partition_ok = std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
    return r;
}

}  // namespace cwd
