#ifndef CWD_SYNTHESIZE_HPP
#define CWD_SYNTHESIZE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cwd/builders.hpp"
#include "cwd/decompose.hpp"
#include "cwd/expr.hpp"

namespace cwd {

struct CaseStep {
    std::string case_id;
    std::vector<std::string> sets;
    std::string builder;
};

struct BoundBreakdown {
    int case_labels = 0;  // static cap for the off-hole construction
    int hole = 0;
    int removed = 0;
    int transit = 1;

    int total() const { return case_labels + hole + removed + transit; }
};

struct SynthesisResult {
    CwdExpr expr;
    int width_achieved = 0;
    BoundBreakdown bound;
    std::vector<CaseStep> case_trace;
    int hole_len = 0;
    Hole hole;
    int removed_count = 0;

    int declared_bound() const { return bound.total(); }
};

struct PerfectCertificate {
    // in-class and free of 5- and 7-holes; colouring takes the perfect branch
};

struct CaseNotCovered : Error {
    std::vector<std::string> sets;
    CaseNotCovered(const std::string& msg, std::vector<std::string> s = {})
        : Error(msg), sets(std::move(s)) {}
};

SynthesisResult synth_c7(const Graph& g, const Decomposition& d);
SynthesisResult synth_c6(const Graph& g, const Decomposition& d);
SynthesisResult synth_c5(const Graph& g, const Decomposition& d);

using SynthesisOutcome = std::variant<SynthesisResult, PerfectCertificate>;

// Full pipeline: membership check, hole preference 7 > 6 > 5, classification,
// property verification, case synthesis. Perfect members come back as a
// certificate instead.
SynthesisOutcome synthesize(const Graph& g, int threshold = 5);

}  // namespace cwd

#endif
