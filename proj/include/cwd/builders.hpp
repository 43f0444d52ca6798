#ifndef CWD_BUILDERS_HPP
#define CWD_BUILDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cwd/expr.hpp"
#include "cwd/graph.hpp"

namespace cwd {

struct BuilderError : Error {
    std::vector<int> witness;
    BuilderError(const std::string& msg, std::vector<int> w = {})
        : Error(msg), witness(std::move(w)) {}
};

// A named clique taking part in a construction; the terminal label of every
// member is tag(name, old).
struct SetUnit {
    std::string name;
    std::vector<int> members;
};

enum class RowMode { PairsAdj, PairsNonAdj };

Label lnew(const std::string& name);
Label lold(const std::string& name);

// Incremental forms appending onto one spine; the set ends fully labelled
// (name, old) and joined as required to the *previously appended* content
// only where the ops say so (callers add cross joins separately).
void append_clique(ExprBuilder& b, const Graph& g, const SetUnit& s);
void append_pairs(ExprBuilder& b, const Graph& g, const SetUnit& s, const SetUnit& a);
void append_nonpairs(ExprBuilder& b, const Graph& g, const SetUnit& s, const SetUnit& a);
void append_rows(ExprBuilder& b, const Graph& g, const std::vector<SetUnit>& cliques,
                 const std::vector<RowMode>& modes);
void append_clique_partition(ExprBuilder& b, const Graph& g, const std::vector<SetUnit>& cliques);

// The Y/T block with the two-non-neighbour structure: y's non-neighbours in
// t form stars centred on t's side; companion is either the consecutive Y
// (non-edges to y form a matching, joined to t) or the opposite Y (edges to
// y form a matching, co-joined to t). Ends with labels (y,old), (t,old) and
// (companion,old); the internal split label for the all-co-join part of t is
// folded back into (t,old).
enum class CompanionMode { None, ConsecutiveY, OppositeY };
void append_ty_block(ExprBuilder& b, const Graph& g, const SetUnit& y, const SetUnit& t,
                     const std::optional<SetUnit>& companion, CompanionMode mode);

// Standalone constructor forms. Each verifies its preconditions against g,
// evaluates to the induced subgraph on its input vertices and respects the
// advertised width bound.
CwdExpr label_via_pairs(const VertexSet& s, const VertexSet& a, const Graph& g);
CwdExpr label_via_nonpairs(const VertexSet& s, const VertexSet& a, const Graph& g);
CwdExpr label_via_rows(const std::vector<VertexSet>& cliques, const Graph& g,
                       const std::vector<RowMode>& modes);
CwdExpr label_clique_partition(const std::vector<VertexSet>& cliques, const Graph& g);

// Rewrites a spine-form expression for g minus extras into one for g: the
// extras enter first with one permanent label each, and every created vertex
// passes through a fresh transit label that is joined to its extra
// neighbours before taking its original label. Width grows by at most
// |extras| + 1.
CwdExpr attach_extra_vertices(const CwdExpr& e, const Graph& g, const VertexSet& extras,
                              const std::vector<Label>& extra_labels = {});

}  // namespace cwd

#endif
