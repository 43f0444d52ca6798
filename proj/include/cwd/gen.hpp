#ifndef CWD_GEN_HPP
#define CWD_GEN_HPP

#include <optional>
#include <vector>

#include "cwd/decompose.hpp"
#include "cwd/graph.hpp"
#include "cwd/util.hpp"

namespace cwd {

struct SetReq {
    Family family;
    int index;  // -1 for the 5-hole Z and R
    int size;
};

struct PlantSpec {
    int hole_len = 7;
    std::vector<SetReq> sets;
    std::uint64_t seed = 1;
    int threshold = 5;
};

struct InfeasibleSpec : Error {
    using Error::Error;
};

// Constructive planting around a hole. The cross-set edges are drawn from
// the relation vocabulary the structure tables allow (joins, co-joins,
// matchings, triangle columns, the Y/T near-join shapes), then the result is
// validated end to end: class membership, classification around the planted
// hole, zero property failures. Retries with fresh randomness up to
// max_attempts, then reports the spec as infeasible.
Graph plant(const PlantSpec& spec, int max_attempts = 40);

// Validity screen on the requested non-empty pattern alone (emptiness
// implications of the tables). plant() runs it first.
void check_spec_pattern(const PlantSpec& spec);

std::optional<Graph> reject_sample(int n, double edge_prob, std::uint64_t seed, int budget = 200);

// A random table-consistent shape with randomized rotation and sizes; used
// by the test suites to sweep the case space.
PlantSpec random_plant_spec(int hole_len, Rng& rng, int threshold = 5);

}  // namespace cwd

#endif
