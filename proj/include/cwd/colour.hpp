#ifndef CWD_COLOUR_HPP
#define CWD_COLOUR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cwd/graph.hpp"
#include "cwd/synthesize.hpp"

namespace cwd {

struct CliqueResult {
    int omega = 0;
    VertexSet witness;
};

CliqueResult max_clique(const Graph& g);

// Exact chromatic number by DSATUR-ordered branch and bound, seeded with a
// greedy upper bound. lower_hint must be a genuine lower bound (a clique
// size); 0 computes one. If the node budget runs out the result degrades to
// a bounds interval; it never reports a wrong exact value.
struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<int> assignment;  // proper colouring with `upper` colours
    std::uint64_t nodes_used = 0;

    int chi() const;  // throws unless exact
};

ChromaticResult exact_chromatic(const Graph& g, int lower_hint = 0,
                                std::uint64_t node_budget = 50'000'000ULL);

enum class ColourBranch { Perfect, BoundedCliqueWidth };

struct ColouringResult {
    int chi = 0;
    int omega = 0;
    std::vector<int> assignment;
    ColourBranch branch = ColourBranch::Perfect;
    std::optional<SynthesisResult> certificate;  // bounded-clique-width branch
};

ColouringResult colour_class_member(const Graph& g, int threshold = 5);

}  // namespace cwd

#endif
