#ifndef CWD_DECOMPOSE_HPP
#define CWD_DECOMPOSE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwd/graph.hpp"
#include "cwd/patterns.hpp"

namespace cwd {

enum class Family : char { T = 'T', X = 'X', Y = 'Y', Z = 'Z', R = 'R' };

// index is the hole position (0-based, mod hole length); -1 for the C5 sets
// Z and R which carry no index.
struct SetId {
    Family family;
    int index;

    std::string name() const;
    bool operator<(const SetId& o) const {
        if (family != o.family) return family < o.family;
        return index < o.index;
    }
    bool operator==(const SetId& o) const { return family == o.family && index == o.index; }
};

struct Decomposition {
    Hole hole;
    int threshold = 5;
    std::map<SetId, std::vector<int>> sets;        // retained, each of size >= threshold
    std::vector<std::pair<int, SetId>> removed;    // small-set ledger
    std::map<int, SetId> assignment;               // off-hole vertex -> set (incl. removed)

    int len() const { return (int)hole.size(); }
    const std::vector<int>& set(Family f, int index) const;
    const std::vector<int>& set(const SetId& id) const;
    bool retained(Family f, int index) const { return !set(f, index).empty(); }
    std::vector<SetId> retained_ids() const;
};

struct NotAHole : Error {
    using Error::Error;
};

struct UnclassifiableVertex : Error {
    int vertex;
    std::vector<int> trace;  // hole positions the vertex is adjacent to
    Occurrence witness;
    UnclassifiableVertex(int v, std::vector<int> tr, Occurrence w, const std::string& msg)
        : Error(msg), vertex(v), trace(std::move(tr)), witness(std::move(w)) {}
};

// A set the structure theory forces to be near-empty turned out big; the
// witness is the forbidden pattern this certifies.
struct StructureViolation : Error {
    SetId set;
    Occurrence witness;
    StructureViolation(SetId id, Occurrence w, const std::string& msg)
        : Error(msg), set(id), witness(std::move(w)) {}
};

Decomposition classify(const Graph& g, const Hole& hole, int threshold = 5,
                       bool iterate_to_fixpoint = false);

enum class PropStatus { Pass, Fail, Vacuous };

struct PropertyResult {
    std::string id;
    std::string description;
    PropStatus status = PropStatus::Vacuous;
    std::vector<int> witness;   // offending vertices on failure
    std::string predicted;      // forbidden pattern the failure certifies
};

struct PropertyReport {
    int hole_len = 0;
    std::vector<PropertyResult> results;

    int failures() const;
    const PropertyResult* find(const std::string& id) const;
};

PropertyReport verify_properties(const Graph& g, const Decomposition& d);

struct ReductionReport {
    bool ledger_within_bound = false;
    bool partition_ok = false;
    std::size_t ledger_size = 0;
    std::size_t ledger_bound = 0;

    bool ok() const { return ledger_within_bound && partition_ok; }
};

ReductionReport reduction_consistency(const Graph& g, const Decomposition& d);

}  // namespace cwd

#endif
