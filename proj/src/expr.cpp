#include "cwd/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cwd {

std::string Label::to_string() const {
    if (is_int) return "int:" + std::to_string(num);
    const char* ph = phase == Phase::New ? "new" : phase == Phase::New2 ? "new2" : "old";
    return "tag:" + set_name + "." + ph;
}

int LabeledGraph::index_of(long long vid) const {
    for (std::size_t i = 0; i < vertex_ids.size(); ++i)
        if (vertex_ids[i] == vid) return (int)i;
    return -1;
}

bool LabeledGraph::matches(const Graph& g) const {
    if ((int)vertex_ids.size() != g.n) return false;
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
        long long vid = vertex_ids[i];
        if (vid < 0 || vid >= g.n || pos[vid] != -1) return false;
        pos[vid] = (int)i;
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.edge(u, v) != graph.edge(pos[u], pos[v])) return false;
    return true;
}

namespace {

struct EvalState {
    std::vector<long long> vids;
    std::vector<Label> labels;
    std::vector<std::pair<int, int>> edges;  // indices into vids
};

}  // namespace

LabeledGraph evaluate(const CwdExpr& e) {
    if (e.empty()) throw Error("evaluate: empty expression");
    std::vector<EvalState> memo(e.nodes.size());
    std::vector<char> done(e.nodes.size(), 0), consumed(e.nodes.size(), 0);
    auto take_child = [&](int c, std::size_t parent) -> EvalState {
        if (c < 0 || c >= (int)parent || !done[c] || consumed[c])
            throw Error("evaluate: malformed arena (child order or sharing)");
        consumed[c] = 1;
        return std::move(memo[c]);
    };
    // children precede parents by construction and each is referenced once
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        const auto& nd = e.nodes[i];
        EvalState st;
        switch (nd.op) {
            case CwdExpr::Op::Create:
                st.vids = {nd.vertex};
                st.labels = {nd.a};
                break;
            case CwdExpr::Op::Union: {
                st = take_child(nd.child0, i);
                EvalState rhs = take_child(nd.child1, i);
                int off = (int)st.vids.size();
                st.vids.insert(st.vids.end(), rhs.vids.begin(), rhs.vids.end());
                st.labels.insert(st.labels.end(), rhs.labels.begin(), rhs.labels.end());
                for (auto [u, v] : rhs.edges) st.edges.emplace_back(u + off, v + off);
                break;
            }
            case CwdExpr::Op::Relabel: {
                st = take_child(nd.child0, i);
                for (auto& l : st.labels)
                    if (l == nd.a) l = nd.b;
                break;
            }
            case CwdExpr::Op::Join: {
                if (nd.a == nd.b) throw Error("evaluate: join with equal labels");
                st = take_child(nd.child0, i);
                std::vector<int> ia, ib;
                for (std::size_t k = 0; k < st.labels.size(); ++k) {
                    if (st.labels[k] == nd.a) ia.push_back((int)k);
                    if (st.labels[k] == nd.b) ib.push_back((int)k);
                }
                for (int u : ia)
                    for (int v : ib) st.edges.emplace_back(u, v);
                break;
            }
        }
        memo[i] = std::move(st);
        done[i] = 1;
    }
    EvalState& fin = memo[e.root];
    LabeledGraph out;
    out.vertex_ids = fin.vids;
    out.labelling = fin.labels;
    std::set<long long> uniq(fin.vids.begin(), fin.vids.end());
    if (uniq.size() != fin.vids.size()) throw Error("evaluate: duplicate vertex id");
    out.graph = Graph((int)fin.vids.size());
    for (auto [u, v] : fin.edges)
        if (u != v && !out.graph.edge(u, v)) out.graph.add_edge(u, v);  // join is idempotent
    return out;
}

int width(const CwdExpr& e) {
    std::set<Label> labels;
    for (const auto& nd : e.nodes) {
        switch (nd.op) {
            case CwdExpr::Op::Create: labels.insert(nd.a); break;
            case CwdExpr::Op::Relabel:
            case CwdExpr::Op::Join:
                labels.insert(nd.a);
                labels.insert(nd.b);
                break;
            case CwdExpr::Op::Union: break;
        }
    }
    return (int)labels.size();
}

namespace {

void serialize_node(const CwdExpr& e, int idx, std::string& out) {
    const auto& nd = e.nodes[idx];
    switch (nd.op) {
        case CwdExpr::Op::Create:
            out += "create(" + nd.a.to_string() + "," + std::to_string(nd.vertex) + ")";
            break;
        case CwdExpr::Op::Union:
            out += "union(";
            serialize_node(e, nd.child0, out);
            out += ",";
            serialize_node(e, nd.child1, out);
            out += ")";
            break;
        case CwdExpr::Op::Relabel:
            out += "relabel(" + nd.a.to_string() + "," + nd.b.to_string() + ",";
            serialize_node(e, nd.child0, out);
            out += ")";
            break;
        case CwdExpr::Op::Join:
            out += "join(" + nd.a.to_string() + "," + nd.b.to_string() + ",";
            serialize_node(e, nd.child0, out);
            out += ")";
            break;
    }
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    CwdExpr e;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (pos == start) throw ParseError("expected identifier", pos);
        return s.substr(start, pos - start);
    }

    long long number() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw ParseError("expected number", pos);
        return std::stoll(s.substr(start, pos - start));
    }

    Label label() {
        std::string kind = ident();
        expect(':');
        if (kind == "int") return Label::integer(number());
        if (kind != "tag") throw ParseError("label must be int:<n> or tag:<name>.<phase>", pos);
        std::string name = ident();
        expect('.');
        std::string ph = ident();
        Label::Phase phase;
        if (ph == "new")
            phase = Label::Phase::New;
        else if (ph == "new2")
            phase = Label::Phase::New2;
        else if (ph == "old")
            phase = Label::Phase::Old;
        else
            throw ParseError("phase must be new, new2 or old", pos);
        return Label::tag(name, phase);
    }

    int node() {
        std::string op = ident();
        expect('(');
        CwdExpr::Node nd;
        if (op == "create") {
            nd.op = CwdExpr::Op::Create;
            nd.a = label();
            expect(',');
            nd.vertex = number();
        } else if (op == "union") {
            nd.op = CwdExpr::Op::Union;
            nd.child0 = node();
            expect(',');
            nd.child1 = node();
        } else if (op == "relabel" || op == "join") {
            nd.op = op == "relabel" ? CwdExpr::Op::Relabel : CwdExpr::Op::Join;
            nd.a = label();
            expect(',');
            nd.b = label();
            expect(',');
            nd.child0 = node();
            if (nd.op == CwdExpr::Op::Join && nd.a == nd.b)
                throw ParseError("join with equal labels", pos);
        } else {
            throw ParseError("unknown operation '" + op + "'", pos);
        }
        e.nodes.push_back(nd);
        expect(')');
        return (int)e.nodes.size() - 1;
    }
};

}  // namespace

std::string serialize(const CwdExpr& e) {
    if (e.empty()) throw Error("serialize: empty expression");
    std::string out;
    serialize_node(e, e.root, out);
    return out;
}

CwdExpr parse_expr(const std::string& text) {
    Parser p(text);
    p.e.root = p.node();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    // reject duplicate created vertex ids up front
    std::set<long long> seen;
    for (const auto& nd : p.e.nodes)
        if (nd.op == CwdExpr::Op::Create && !seen.insert(nd.vertex).second)
            throw ParseError("vertex " + std::to_string(nd.vertex) + " created twice", text.size());
    return std::move(p.e);
}

void ExprBuilder::create(long long vertex, const Label& l) {
    CwdExpr::Node c;
    c.op = CwdExpr::Op::Create;
    c.a = l;
    c.vertex = vertex;
    e.nodes.push_back(c);
    int cidx = (int)e.nodes.size() - 1;
    if (e.root < 0) {
        e.root = cidx;
    } else {
        CwdExpr::Node u;
        u.op = CwdExpr::Op::Union;
        u.child0 = e.root;
        u.child1 = cidx;
        e.nodes.push_back(u);
        e.root = (int)e.nodes.size() - 1;
    }
}

void ExprBuilder::join(const Label& a, const Label& b) {
    if (e.root < 0) throw Error("builder: join on empty expression");
    if (a == b) throw Error("builder: join with equal labels");
    CwdExpr::Node nd;
    nd.op = CwdExpr::Op::Join;
    nd.a = a;
    nd.b = b;
    nd.child0 = e.root;
    e.nodes.push_back(nd);
    e.root = (int)e.nodes.size() - 1;
}

void ExprBuilder::relabel(const Label& from, const Label& to) {
    if (e.root < 0) throw Error("builder: relabel on empty expression");
    CwdExpr::Node nd;
    nd.op = CwdExpr::Op::Relabel;
    nd.a = from;
    nd.b = to;
    nd.child0 = e.root;
    e.nodes.push_back(nd);
    e.root = (int)e.nodes.size() - 1;
}

}  // namespace cwd
