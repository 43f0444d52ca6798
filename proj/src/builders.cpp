#include "cwd/builders.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cwd {

Label lnew(const std::string& name) { return Label::tag(name, Label::Phase::New); }
Label lold(const std::string& name) { return Label::tag(name, Label::Phase::Old); }
static const Label kAux = Label::tag("aux", Label::Phase::New2);

namespace {

void require_clique(const Graph& g, const SetUnit& s) {
    for (std::size_t i = 0; i < s.members.size(); ++i)
        for (std::size_t j = i + 1; j < s.members.size(); ++j)
            if (!g.edge(s.members[i], s.members[j]))
                throw BuilderError("set '" + s.name + "' is not a clique",
                                   {s.members[i], s.members[j]});
}

void require_disjoint(const std::vector<SetUnit>& sets) {
    std::set<int> seen;
    for (const auto& s : sets)
        for (int v : s.members)
            if (!seen.insert(v).second)
                throw BuilderError("sets are not disjoint", {v});
}

// partner map under "each vertex of s has at most one neighbour
// (PairsAdj) / non-neighbour (PairsNonAdj) in a", verified both ways
std::map<int, int> partner_map(const Graph& g, const SetUnit& s, const SetUnit& a, RowMode mode) {
    std::map<int, int> partner;
    auto scan = [&](const SetUnit& from, const SetUnit& to) {
        for (int v : from.members) {
            int found = -1;
            for (int w : to.members) {
                bool rel = mode == RowMode::PairsAdj ? g.edge(v, w) : !g.edge(v, w);
                if (!rel) continue;
                if (found != -1)
                    throw BuilderError("vertex has two partners between '" + from.name + "' and '" +
                                           to.name + "'",
                                       {v, found, w});
                found = w;
            }
            if (found != -1) partner.emplace(v, found);
        }
    };
    scan(s, a);
    scan(a, s);
    return partner;
}

}  // namespace

void append_clique(ExprBuilder& b, const Graph& g, const SetUnit& s) {
    require_clique(g, s);
    for (int v : s.members) {
        b.create(v, lnew(s.name));
        b.join(lnew(s.name), lold(s.name));
        b.relabel(lnew(s.name), lold(s.name));
    }
}

void append_pairs(ExprBuilder& b, const Graph& g, const SetUnit& s, const SetUnit& a) {
    require_disjoint({s, a});
    require_clique(g, s);
    require_clique(g, a);
    auto partner = partner_map(g, s, a, RowMode::PairsAdj);
    Label sn = lnew(s.name), so = lold(s.name), an = lnew(a.name), ao = lold(a.name);
    for (int v : s.members) {
        auto it = partner.find(v);
        if (it == partner.end()) continue;
        b.create(v, sn);
        b.create(it->second, an);
        b.join(sn, an);
        b.join(sn, so);
        b.join(an, ao);
        b.relabel(sn, so);
        b.relabel(an, ao);
    }
    for (int v : s.members) {
        if (partner.count(v)) continue;
        b.create(v, sn);
        b.join(sn, so);
        b.relabel(sn, so);
    }
    for (int v : a.members) {
        if (partner.count(v)) continue;
        b.create(v, an);
        b.join(an, ao);
        b.relabel(an, ao);
    }
}

void append_nonpairs(ExprBuilder& b, const Graph& g, const SetUnit& s, const SetUnit& a) {
    require_disjoint({s, a});
    require_clique(g, s);
    require_clique(g, a);
    auto partner = partner_map(g, s, a, RowMode::PairsNonAdj);
    Label sn = lnew(s.name), so = lold(s.name), an = lnew(a.name), ao = lold(a.name);
    for (int v : s.members) {
        auto it = partner.find(v);
        if (it == partner.end()) continue;
        b.create(v, sn);
        b.create(it->second, an);
        b.join(sn, ao);   // v sees all earlier a's
        b.join(an, so);   // the partner sees all earlier s's
        b.join(sn, so);
        b.join(an, ao);
        b.relabel(sn, so);
        b.relabel(an, ao);
    }
    for (int v : s.members) {
        if (partner.count(v)) continue;
        b.create(v, sn);
        b.join(sn, so);
        b.join(sn, ao);
        b.relabel(sn, so);
    }
    for (int v : a.members) {
        if (partner.count(v)) continue;
        b.create(v, an);
        b.join(an, ao);
        b.join(an, so);
        b.relabel(an, ao);
    }
}

namespace {

struct RowsCtx {
    const Graph& g;
    const std::vector<SetUnit>& sets;
    const std::vector<RowMode>& modes;  // modes[i] between sets i and (i+1)%t
    int t;
    std::vector<int> set_of;            // vertex -> set index (dense map)
    std::vector<std::vector<int>> partners;
    std::vector<std::vector<char>> join_pair;  // non-consecutive uniform joins

    bool consecutive(int i, int j) const {
        return (j == (i + 1) % t) || (i == (j + 1) % t);
    }
    RowMode mode_between(int i, int j) const {
        if (j == (i + 1) % t) return modes[i];
        return modes[j];
    }
};

}  // namespace

void append_rows(ExprBuilder& b, const Graph& g, const std::vector<SetUnit>& sets,
                 const std::vector<RowMode>& modes) {
    int t = (int)sets.size();
    if (t < 3) throw BuilderError("rows needs at least 3 cliques");
    if ((int)modes.size() != t) throw BuilderError("rows: one mode per consecutive pair");
    require_disjoint(sets);
    for (const auto& s : sets) require_clique(g, s);

    RowsCtx ctx{g, sets, modes, t, std::vector<int>(g.n, -1), {}, {}};
    for (int i = 0; i < t; ++i)
        for (int v : sets[i].members) ctx.set_of[v] = i;

    // partner structure on consecutive pairs; uniqueness is validated there
    std::map<int, std::vector<int>> partner_of;
    for (int i = 0; i < t; ++i) {
        int j = (i + 1) % t;
        auto pm = partner_map(g, sets[i], sets[j], modes[i]);
        for (auto [v, w] : pm)
            if (ctx.set_of[v] == i) {  // record once per unordered pair
                partner_of[v].push_back(w);
                partner_of[w].push_back(v);
            }
    }
    // non-consecutive pairs must be a join or a co-join
    ctx.join_pair.assign(t, std::vector<char>(t, 0));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            if (ctx.consecutive(i, j)) continue;
            Relation r = relation_between(g, VertexSet(sets[i].members), VertexSet(sets[j].members));
            if (r.join)
                ctx.join_pair[i][j] = ctx.join_pair[j][i] = 1;
            else if (!r.cojoin)
                throw BuilderError("rows: sets '" + sets[i].name + "' and '" + sets[j].name +
                                   "' are neither a join nor a co-join");
        }

    Label aux = kAux;
    // edges from a newly created vertex to everything already retired (old)
    auto intro = [&](int v, const Label& lbl) {
        int sv = ctx.set_of[v];
        b.create(v, lbl);
        b.join(lbl, lold(sets[sv].name));
        for (int j = 0; j < t; ++j) {
            if (j == sv) continue;
            bool joins_old = ctx.consecutive(sv, j)
                                 ? ctx.mode_between(sv, j) == RowMode::PairsNonAdj
                                 : (bool)ctx.join_pair[sv][j];
            if (joins_old) b.join(lbl, lold(sets[j].name));
        }
    };
    // explicit edge between the current vertex and the still-new start vertex
    auto handle_v1 = [&](int v, const Label& lbl, int v1, const Label& lbl1) {
        int sv = ctx.set_of[v], s1 = ctx.set_of[v1];
        bool edge_needed;
        if (sv == s1)
            edge_needed = true;  // same clique
        else if (ctx.consecutive(sv, s1))
            edge_needed = ctx.mode_between(sv, s1) == RowMode::PairsNonAdj;  // non-partners
        else
            edge_needed = ctx.join_pair[sv][s1];
        if (edge_needed) b.join(lbl, lbl1);
    };

    // walk the partner graph component by component
    std::set<int> visited;
    std::vector<int> all;
    for (const auto& s : sets) all.insert(all.end(), s.members.begin(), s.members.end());
    std::sort(all.begin(), all.end());

    for (int start : all) {
        if (visited.count(start)) continue;
        // trace the component; find an endpoint if it is a path
        std::vector<int> comp;
        {
            std::set<int> seen{start};
            std::vector<int> stack{start};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int w : partner_of[v])
                    if (seen.insert(w).second) stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        int first = -1;  // smallest endpoint of a path, smallest vertex of a cycle
        for (int v : comp)
            if (partner_of[v].size() <= 1 && (first == -1 || v < first)) first = v;
        bool is_cycle = first == -1 && comp.size() >= 3;
        if (first == -1) first = comp[0];
        std::vector<int> walk{first};
        visited.insert(first);
        while (true) {
            int last = walk.back();
            int next = -1;
            for (int w : partner_of[last])
                if (!visited.count(w) && (next == -1 || w < next)) next = w;
            if (next == -1) break;
            walk.push_back(next);
            visited.insert(next);
        }

        int r = (int)walk.size();
        int s1 = ctx.set_of[walk[0]];
        Label lbl1 = lnew(sets[s1].name);
        intro(walk[0], lbl1);
        Label prev_lbl = lbl1;
        for (int k = 1; k < r; ++k) {
            int v = walk[k];
            Label lbl = ctx.set_of[v] == s1 ? aux : lnew(sets[ctx.set_of[v]].name);
            intro(v, lbl);
            // partner relation with the previous walk vertex
            if (ctx.mode_between(ctx.set_of[v], ctx.set_of[walk[k - 1]]) == RowMode::PairsAdj)
                b.join(lbl, prev_lbl);
            bool closing = is_cycle && k == r - 1;
            if (closing) {
                if (ctx.mode_between(ctx.set_of[v], s1) == RowMode::PairsAdj) b.join(lbl, lbl1);
            } else if (k >= 2) {
                handle_v1(v, lbl, walk[0], lbl1);
            }
            if (k - 1 >= 1) b.relabel(prev_lbl, lold(sets[ctx.set_of[walk[k - 1]]].name));
            prev_lbl = lbl;
        }
        if (r >= 2) b.relabel(prev_lbl, lold(sets[ctx.set_of[walk[r - 1]]].name));
        b.relabel(lbl1, lold(sets[s1].name));
    }
}

void append_clique_partition(ExprBuilder& b, const Graph& g, const std::vector<SetUnit>& sets) {
    int k = (int)sets.size();
    require_disjoint(sets);
    for (const auto& s : sets) require_clique(g, s);
    std::vector<int> set_of(g.n, -1);
    std::vector<int> all;
    for (int i = 0; i < k; ++i)
        for (int v : sets[i].members) {
            set_of[v] = i;
            all.push_back(v);
        }
    std::sort(all.begin(), all.end());
    // condition (i): at most one neighbour per foreign set,
    // condition (ii): the foreign neighbourhood is a clique
    std::map<int, std::vector<int>> foreign;
    for (int v : all) {
        for (int w : all) {
            if (set_of[w] == set_of[v] || !g.edge(v, w)) continue;
            for (int u : foreign[v])
                if (set_of[u] == set_of[w])
                    throw BuilderError("two neighbours in one foreign clique", {v, u, w});
            for (int u : foreign[v])
                if (!g.edge(u, w))
                    throw BuilderError("foreign neighbourhood is not a clique", {v, u, w});
            foreign[v].push_back(w);
        }
    }
    // columns: components of the cross-edge graph, each a clique meeting
    // every set at most once; build column by column
    std::set<int> done;
    for (int v : all) {
        if (done.count(v)) continue;
        std::vector<int> column{v};
        for (std::size_t idx = 0; idx < column.size(); ++idx)
            for (int w : foreign[column[idx]])
                if (std::find(column.begin(), column.end(), w) == column.end())
                    column.push_back(w);
        std::sort(column.begin(), column.end());
        for (int u : column) {
            done.insert(u);
            b.create(u, lnew(sets[set_of[u]].name));
        }
        for (std::size_t i = 0; i < column.size(); ++i)
            for (std::size_t j = i + 1; j < column.size(); ++j)
                b.join(lnew(sets[set_of[column[i]]].name), lnew(sets[set_of[column[j]]].name));
        for (int u : column) {
            b.join(lnew(sets[set_of[u]].name), lold(sets[set_of[u]].name));
            b.relabel(lnew(sets[set_of[u]].name), lold(sets[set_of[u]].name));
        }
    }
}

void append_ty_block(ExprBuilder& b, const Graph& g, const SetUnit& y, const SetUnit& t,
                     const std::optional<SetUnit>& companion, CompanionMode mode) {
    std::vector<SetUnit> all{y, t};
    if (companion) all.push_back(*companion);
    require_disjoint(all);
    for (const auto& s : all) require_clique(g, s);
    if ((companion != std::nullopt) != (mode != CompanionMode::None))
        throw BuilderError("ty block: companion and mode must match");

    // split t: tz has no neighbours in y at all
    SetUnit tz{t.name + "z", {}};
    SetUnit tp{t.name, {}};
    for (int v : t.members) {
        bool touches = false;
        for (int w : y.members)
            if (g.edge(v, w)) touches = true;
        (touches ? tp : tz).members.push_back(v);
    }
    // stars: non-neighbours of each tp vertex inside y; a y vertex may be
    // missed by at most one tp vertex
    std::map<int, int> missed_by;  // y vertex -> its tp non-neighbour
    std::map<int, std::vector<int>> star;
    for (int v : tp.members)
        for (int w : y.members)
            if (!g.edge(v, w)) {
                if (missed_by.count(w))
                    throw BuilderError("y vertex missed by two t vertices", {w, missed_by[w], v});
                missed_by[w] = v;
                star[v].push_back(w);
            }
    // companion matching
    std::map<int, int> match_y, match_c;  // y <-> companion
    if (companion) {
        for (int cv : companion->members) {
            Relation rel = relation_between(g, VertexSet({cv}), VertexSet(t.members));
            if (mode == CompanionMode::ConsecutiveY && !t.members.empty() && !rel.join)
                throw BuilderError("companion must join t", {cv});
            if (mode == CompanionMode::OppositeY && !rel.cojoin)
                throw BuilderError("companion must co-join t", {cv});
        }
        for (int yv : y.members)
            for (int cv : companion->members) {
                bool linked = mode == CompanionMode::ConsecutiveY ? !g.edge(yv, cv) : g.edge(yv, cv);
                if (!linked) continue;
                if (match_y.count(yv))
                    throw BuilderError("y vertex paired twice with companion", {yv});
                if (match_c.count(cv))
                    throw BuilderError("companion vertex paired twice with y", {cv});
                match_y[yv] = cv;
                match_c[cv] = yv;
            }
    }

    Label yn = lnew(y.name), yo = lold(y.name);
    Label tn = lnew(t.name), to = lold(t.name);
    Label tzn = lnew(tz.name), tzo = lold(tz.name);
    Label cn, co;
    if (companion) {
        cn = lnew(companion->name);
        co = lold(companion->name);
    }

    // current_t: the still-new t vertex whose star is being processed, or
    // nullptr outside phase 1
    auto add_companion_partner = [&](int yv, const Label* current_t) {
        auto it = match_y.find(yv);
        if (it == match_y.end()) return;
        int cv = it->second;
        b.create(cv, cn);
        b.join(cn, co);
        if (mode == CompanionMode::ConsecutiveY) {
            b.join(cn, yo);  // misses only yv, which is still new
            if (current_t) b.join(cn, *current_t);
            b.join(cn, to);
            b.join(cn, tzo);
        } else {
            b.join(cn, yn);  // the matching edge itself
        }
        b.relabel(cn, co);
    };
    auto add_y_vertex = [&](int yv, const Label* current_t) {
        b.create(yv, yn);
        b.join(yn, yo);
        b.join(yn, to);  // adjacent to every retired tp vertex
        // companion-olds first (the partner enters as (c,new) below, after
        // this join, so the missing edge is skipped)
        if (companion && mode == CompanionMode::ConsecutiveY) b.join(yn, co);
        add_companion_partner(yv, current_t);
        b.relabel(yn, yo);
    };

    // phase 0: the all-co-join part of t
    for (int v : tz.members) {
        b.create(v, tzn);
        b.join(tzn, tzo);
        b.relabel(tzn, tzo);
    }
    // phase 1: tp vertices with their stars
    for (int tv : tp.members) {
        b.create(tv, tn);
        b.join(tn, to);
        b.join(tn, tzo);
        b.join(tn, yo);  // every retired y vertex misses only its own centre
        if (companion && mode == CompanionMode::ConsecutiveY) b.join(tn, co);
        auto it = star.find(tv);
        if (it != star.end())
            for (int yv : it->second) add_y_vertex(yv, &tn);
        b.relabel(tn, to);
    }
    // phase 2: remaining y vertices (adjacent to all of tp)
    for (int yv : y.members) {
        if (missed_by.count(yv)) continue;
        add_y_vertex(yv, nullptr);
    }
    // phase 3: remaining companion vertices
    if (companion)
        for (int cv : companion->members) {
            if (match_c.count(cv)) continue;
            b.create(cv, cn);
            b.join(cn, co);
            if (mode == CompanionMode::ConsecutiveY) {
                b.join(cn, yo);
                b.join(cn, to);
                b.join(cn, tzo);
            }
            b.relabel(cn, co);
        }
    // phase 4: fold the split label back
    if (!tz.members.empty()) b.relabel(tzo, to);
}

namespace {

std::vector<SetUnit> units_from(const std::vector<VertexSet>& cliques, const std::string& prefix) {
    std::vector<SetUnit> out;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        out.push_back(SetUnit{prefix + std::to_string(i + 1), cliques[i].members});
    return out;
}

void check_result(const CwdExpr& e, const Graph& g, const std::vector<SetUnit>& sets,
                  int width_bound, const char* who) {
    VertexSet all;
    std::vector<int> vs;
    for (const auto& s : sets) vs.insert(vs.end(), s.members.begin(), s.members.end());
    all = VertexSet(vs);
    LabeledGraph lg = evaluate(e);
    if ((int)lg.vertex_ids.size() != all.size()) throw Error(std::string(who) + ": wrong vertex set");
    for (long long vid : lg.vertex_ids)
        if (!all.contains((int)vid)) throw Error(std::string(who) + ": wrong vertex set");
    // edge-exact against the induced subgraph
    for (int i = 0; i < (int)lg.vertex_ids.size(); ++i)
        for (int j = i + 1; j < (int)lg.vertex_ids.size(); ++j)
            if (lg.graph.edge(i, j) != g.edge((int)lg.vertex_ids[i], (int)lg.vertex_ids[j]))
                throw Error(std::string(who) + ": evaluation mismatch");
    if (width(e) > width_bound) throw Error(std::string(who) + ": width bound exceeded");
}

}  // namespace

CwdExpr label_via_pairs(const VertexSet& s, const VertexSet& a, const Graph& g) {
    ExprBuilder b;
    SetUnit su{"s", s.members}, au{"a", a.members};
    append_pairs(b, g, su, au);
    CwdExpr e = b.take();
    check_result(e, g, {su, au}, 4, "label_via_pairs");
    return e;
}

CwdExpr label_via_nonpairs(const VertexSet& s, const VertexSet& a, const Graph& g) {
    ExprBuilder b;
    SetUnit su{"s", s.members}, au{"a", a.members};
    append_nonpairs(b, g, su, au);
    CwdExpr e = b.take();
    check_result(e, g, {su, au}, 4, "label_via_nonpairs");
    return e;
}

CwdExpr label_via_rows(const std::vector<VertexSet>& cliques, const Graph& g,
                       const std::vector<RowMode>& modes) {
    ExprBuilder b;
    auto units = units_from(cliques, "s");
    append_rows(b, g, units, modes);
    CwdExpr e = b.take();
    check_result(e, g, units, 2 * (int)cliques.size() + 1, "label_via_rows");
    return e;
}

CwdExpr label_clique_partition(const std::vector<VertexSet>& cliques, const Graph& g) {
    ExprBuilder b;
    auto units = units_from(cliques, "x");
    append_clique_partition(b, g, units);
    CwdExpr e = b.take();
    check_result(e, g, units, 2 * (int)cliques.size(), "label_clique_partition");
    return e;
}

CwdExpr attach_extra_vertices(const CwdExpr& e, const Graph& g, const VertexSet& extras,
                              const std::vector<Label>& extra_labels) {
    if (extras.empty()) return e;
    if (e.empty()) {
        // nothing underneath: the extras are the whole graph
        ExprBuilder b;
        std::vector<Label> labels = extra_labels;
        if (labels.empty())
            for (int v : extras) labels.push_back(lold("e" + std::to_string(v)));
        for (int i = 0; i < extras.size(); ++i) {
            b.create(extras[i], labels[i]);
            for (int j = 0; j < i; ++j)
                if (g.edge(extras[i], extras[j])) b.join(labels[i], labels[j]);
        }
        return b.take();
    }

    // collect labels already used, and check the spine shape while
    // linearizing the expression
    std::set<Label> used;
    for (const auto& nd : e.nodes) {
        if (nd.op == CwdExpr::Op::Create) used.insert(nd.a);
        if (nd.op == CwdExpr::Op::Relabel || nd.op == CwdExpr::Op::Join) {
            used.insert(nd.a);
            used.insert(nd.b);
        }
    }
    std::vector<Label> labels = extra_labels;
    if (labels.empty())
        for (int v : extras) labels.push_back(lold("e" + std::to_string(v)));
    if ((int)labels.size() != extras.size())
        throw Error("attach_extra_vertices: one label per extra");
    for (const auto& l : labels)
        if (used.count(l)) throw Error("attach_extra_vertices: extra label collides: " + l.to_string());

    Label tmp = lnew("tmp");
    for (int k = 0; used.count(tmp); ++k) tmp = lnew("tmp" + std::to_string(k));

    // linearize: ops in evaluation order along the spine
    struct LinOp {
        CwdExpr::Op op;
        Label a, b;
        long long vertex;
    };
    std::vector<LinOp> lin;
    int idx = e.root;
    while (true) {
        const auto& nd = e.nodes[idx];
        if (nd.op == CwdExpr::Op::Create) {
            lin.push_back({CwdExpr::Op::Create, nd.a, Label{}, nd.vertex});
            break;
        }
        if (nd.op == CwdExpr::Op::Union) {
            const auto& rhs = e.nodes[nd.child1];
            if (rhs.op != CwdExpr::Op::Create)
                throw Error("attach_extra_vertices: expression is not in spine form");
            lin.push_back({CwdExpr::Op::Create, rhs.a, Label{}, rhs.vertex});
            idx = nd.child0;
            continue;
        }
        lin.push_back({nd.op, nd.a, nd.b, 0});
        idx = nd.child0;
    }
    std::reverse(lin.begin(), lin.end());

    ExprBuilder b;
    for (int i = 0; i < extras.size(); ++i) {
        b.create(extras[i], labels[i]);
        for (int j = 0; j < i; ++j)
            if (g.edge(extras[i], extras[j])) b.join(labels[i], labels[j]);
    }
    for (const auto& op : lin) {
        switch (op.op) {
            case CwdExpr::Op::Create: {
                b.create(op.vertex, tmp);
                for (int i = 0; i < extras.size(); ++i)
                    if (g.edge((int)op.vertex, extras[i])) b.join(tmp, labels[i]);
                b.relabel(tmp, op.a);
                break;
            }
            case CwdExpr::Op::Join: b.join(op.a, op.b); break;
            case CwdExpr::Op::Relabel: b.relabel(op.a, op.b); break;
            case CwdExpr::Op::Union: break;
        }
    }
    CwdExpr out = b.take();
    if (width(out) > width(e) + extras.size() + 1)
        throw Error("attach_extra_vertices: width bound exceeded");
    return out;
}

}  // namespace cwd
