#ifndef CWD_EXPR_HPP
#define CWD_EXPR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwd/graph.hpp"

namespace cwd {

// Labels are either plain integers or (set-name, phase) tags mirroring the
// labelling conventions the constructors follow. Total order: ints first,
// then tags by (name, phase).
struct Label {
    enum class Phase { New, New2, Old };

    bool is_int = true;
    long long num = 0;
    std::string set_name;
    Phase phase = Phase::New;

    static Label integer(long long v) { return Label{true, v, "", Phase::New}; }
    static Label tag(const std::string& name, Phase ph) { return Label{false, 0, name, ph}; }

    std::string to_string() const;
    bool operator==(const Label& o) const {
        return is_int == o.is_int && (is_int ? num == o.num
                                            : (set_name == o.set_name && phase == o.phase));
    }
    bool operator<(const Label& o) const {
        if (is_int != o.is_int) return is_int;
        if (is_int) return num < o.num;
        if (set_name != o.set_name) return set_name < o.set_name;
        return (int)phase < (int)o.phase;
    }
};

// Expression tree in an arena; children always precede parents, so a single
// forward pass evaluates any expression and deep spines cost no stack.
struct CwdExpr {
    enum class Op { Create, Union, Relabel, Join };

    struct Node {
        Op op;
        Label a, b;     // Create: a = label; Relabel: a -> b; Join: a, b
        long long vertex = 0;  // Create only
        int child0 = -1, child1 = -1;
    };

    std::vector<Node> nodes;
    int root = -1;

    bool empty() const { return root < 0; }
    int node_count() const { return (int)nodes.size(); }
};

// Result of evaluation: the built graph plus vertex identities and final
// labels. Graph indices follow creation order; vertex_ids maps them back.
struct LabeledGraph {
    Graph graph;
    std::vector<long long> vertex_ids;
    std::vector<Label> labelling;

    int index_of(long long vid) const;
    // Edge-set equality against g on an identical vertex-id set, where
    // vertex ids are read as g's vertex indices.
    bool matches(const Graph& g) const;
};

LabeledGraph evaluate(const CwdExpr& e);
int width(const CwdExpr& e);  // distinct labels appearing anywhere in e

std::string serialize(const CwdExpr& e);

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at offset " + std::to_string(pos)), position(pos) {}
};

CwdExpr parse_expr(const std::string& text);

// Append-only builder; keeps the expression in left-deep "spine" form
// (every union has the accumulated expression on the left and a single
// create on the right), which attach_extra_vertices relies on.
struct ExprBuilder {
    CwdExpr e;

    bool empty() const { return e.empty(); }
    void create(long long vertex, const Label& l);
    void join(const Label& a, const Label& b);
    void relabel(const Label& from, const Label& to);
    void absorb(const ExprBuilder& other) = delete;  // spines never merge
    CwdExpr take() { return std::move(e); }
};

}  // namespace cwd

#endif
