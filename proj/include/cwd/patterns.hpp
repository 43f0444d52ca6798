#ifndef CWD_PATTERNS_HPP
#define CWD_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cwd/graph.hpp"

namespace cwd {

// The nine line-graph obstructions plus chordless cycles. Only CLAW, FOUR_K1,
// BRIDGE and C4_TWIN gate class membership; the rest are carried for
// completeness of the template table.
enum class PatternKind {
    Claw,
    FourK1,
    Bridge,
    C4Twin,
    P5Twin,
    C5Twin,
    CoR,
    CoA,
    FiveWheel,
    K5MinusE,
    Cycle,
};

struct Pattern {
    PatternKind kind;
    int cycle_len = 0;  // for Cycle only
    Graph tmpl;

    static Pattern of(PatternKind k);
    static Pattern cycle_pattern(int k);
    int order() const { return tmpl.n; }
    std::string name() const;
};

// Ordered witness of an induced embedding: vertices[i] plays the role of
// template vertex i.
struct Occurrence {
    Pattern pattern;
    std::vector<int> vertices;

    bool verify(const Graph& g) const;
};

using Hole = std::vector<int>;  // induced cycle, in cyclic order

std::optional<Occurrence> find_induced(const Graph& g, const Pattern& p);
std::optional<Hole> find_hole(const Graph& g, int k);
bool is_induced_cycle(const Graph& g, const std::vector<int>& cyc);

struct MembershipReport {
    std::optional<Occurrence> claw, four_k1, bridge, c4_twin;

    bool member() const { return !claw && !four_k1 && !bridge && !c4_twin; }
    std::optional<Occurrence> first_witness() const;
};

MembershipReport is_class_member(const Graph& g);

struct NotInClass : Error {
    Occurrence witness;
    NotInClass(const Occurrence& occ, const std::string& msg) : Error(msg), witness(occ) {}
};

struct PerfectionReport {
    bool perfect = false;
    std::optional<Hole> c5_witness;
    std::optional<Hole> c7_witness;
};

// Within the class, perfection reduces to the absence of a C5 and a C7.
// Throws NotInClass when a forbidden pattern is present.
PerfectionReport is_perfect_in_class(const Graph& g);

}  // namespace cwd

#endif
