#include <doctest.h>

#include "cwd/decompose.hpp"
#include "cwd/gen.hpp"
#include "oracles.hpp"

using namespace cwd;

namespace {

// C7 plus one extra vertex adjacent to the given hole positions
Graph c7_plus(const std::vector<int>& trace) {
    Graph g(8);
    for (int i = 0; i < 7; ++i) g.add_edge(i, (i + 1) % 7);
    for (int p : trace) g.add_edge(7, p);
    return g;
}

Hole hole_of_len(int k) {
    Hole h;
    for (int i = 0; i < k; ++i) h.push_back(i);
    return h;
}

}  // namespace

TEST_CASE("classification by neighbourhood trace") {
    SUBCASE("three consecutive -> X") {
        Graph g = c7_plus({1, 2, 3});
        Decomposition d = classify(g, hole_of_len(7), 1);
        REQUIRE(d.assignment.count(7));
        CHECK(d.assignment.at(7) == SetId{Family::X, 1});
    }
    SUBCASE("four consecutive -> Y") {
        Graph g = c7_plus({2, 3, 4, 5});
        Decomposition d = classify(g, hole_of_len(7), 1);
        CHECK(d.assignment.at(7) == SetId{Family::Y, 2});
    }
    SUBCASE("split trace -> Z") {
        Graph g = c7_plus({0, 1, 3, 4});
        Decomposition d = classify(g, hole_of_len(7), 1);
        CHECK(d.assignment.at(7) == SetId{Family::Z, 0});
    }
    SUBCASE("5-hole: all five -> Z, none -> R, two consecutive -> T") {
        Graph g(6);
        for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
        for (int i = 0; i < 5; ++i) g.add_edge(5, i);
        Decomposition d = classify(g, hole_of_len(5), 1);
        CHECK(d.assignment.at(5) == SetId{Family::Z, -1});

        Graph h(6);
        for (int i = 0; i < 5; ++i) h.add_edge(i, (i + 1) % 5);
        Decomposition dr = classify(h, hole_of_len(5), 1);
        CHECK(dr.assignment.at(5) == SetId{Family::R, -1});

        Graph t(6);
        for (int i = 0; i < 5; ++i) t.add_edge(i, (i + 1) % 5);
        t.add_edge(5, 1);
        t.add_edge(5, 2);
        Decomposition dt = classify(t, hole_of_len(5), 1);
        CHECK(dt.assignment.at(5) == SetId{Family::T, 1});
    }
}

TEST_CASE("unclassifiable traces come with a located witness") {
    SUBCASE("single neighbour on a 7-hole") {
        Graph g = c7_plus({1});
        try {
            classify(g, hole_of_len(7), 1);
            FAIL("expected UnclassifiableVertex");
        } catch (const UnclassifiableVertex& e) {
            CHECK(e.vertex == 7);
            CHECK(e.witness.verify(g));
            CHECK(e.witness.pattern.kind == PatternKind::FourK1);
        }
    }
    SUBCASE("two consecutive on a 7-hole certifies a 4K1") {
        Graph g = c7_plus({1, 2});
        CHECK_THROWS_AS(classify(g, hole_of_len(7), 1), UnclassifiableVertex);
    }
    SUBCASE("path-plus-isolated trace certifies a claw") {
        Graph g = c7_plus({1, 2, 3, 5});
        try {
            classify(g, hole_of_len(7), 1);
            FAIL("expected UnclassifiableVertex");
        } catch (const UnclassifiableVertex& e) {
            CHECK(e.witness.verify(g));
            CHECK(e.witness.pattern.kind == PatternKind::Claw);
        }
    }
}

TEST_CASE("not a hole") {
    Graph g = Graph::cycle(7);
    CHECK_THROWS_AS(classify(g, {0, 1, 2, 3}, 5), NotAHole);
    CHECK_THROWS_AS(classify(g, {0, 1, 2, 3, 4}, 5), NotAHole);  // chords missing edges
}

TEST_CASE("big-set reduction moves small sets to the ledger") {
    // three X_1 vertices on a 7-hole, threshold 5
    Graph g(10);
    for (int i = 0; i < 7; ++i) g.add_edge(i, (i + 1) % 7);
    for (int v : {7, 8, 9}) {
        g.add_edge(v, 1);
        g.add_edge(v, 2);
        g.add_edge(v, 3);
    }
    for (int a : {7, 8, 9})
        for (int b : {7, 8, 9})
            if (a < b) g.add_edge(a, b);
    Decomposition d = classify(g, hole_of_len(7), 5);
    CHECK(d.sets.empty());
    CHECK(d.removed.size() == 3);
    for (const auto& [v, id] : d.removed) CHECK(id == SetId{Family::X, 1});

    auto rep = reduction_consistency(g, d);
    CHECK(rep.ok());

    // threshold 3 keeps the set
    Decomposition d3 = classify(g, hole_of_len(7), 3);
    CHECK(d3.sets.size() == 1);
    CHECK(d3.removed.empty());

    // the fixpoint flag changes nothing: sets are disjoint
    Decomposition dfix = classify(g, hole_of_len(7), 5, true);
    CHECK(dfix.removed.size() == d.removed.size());
}

TEST_CASE("big Z is a structure violation with a verified witness") {
    // 7-hole with a big Z_0: pairwise adjacent vertices tracing {0,1,3,4}
    Graph g(12);
    for (int i = 0; i < 7; ++i) g.add_edge(i, (i + 1) % 7);
    for (int v = 7; v < 12; ++v)
        for (int p : {0, 1, 3, 4}) g.add_edge(v, p);
    for (int a = 7; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b) g.add_edge(a, b);
    try {
        classify(g, hole_of_len(7), 5);
        FAIL("expected StructureViolation");
    } catch (const StructureViolation& e) {
        CHECK(e.set.family == Family::Z);
        CHECK(e.witness.verify(g));
        CHECK(e.witness.pattern.kind == PatternKind::Bridge);
    }
}

TEST_CASE("big Y on a 5-hole is a structure violation") {
    Graph g(11);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int v = 5; v < 11; ++v)
        for (int p : {0, 1, 2, 3}) g.add_edge(v, p);
    for (int a = 5; a < 11; ++a)
        for (int b = a + 1; b < 11; ++b) g.add_edge(a, b);
    try {
        classify(g, hole_of_len(5), 5);
        FAIL("expected StructureViolation");
    } catch (const StructureViolation& e) {
        CHECK(e.set.family == Family::Y);
        CHECK(e.witness.verify(g));
    }
}

TEST_CASE("bare holes: everything vacuous or passing, partition holds") {
    for (int k : {5, 6, 7}) {
        Graph g = Graph::cycle(k);
        Decomposition d = classify(g, hole_of_len(k), 5);
        PropertyReport rep = verify_properties(g, d);
        CHECK(rep.failures() == 0);
        for (const auto& r : rep.results)
            CHECK((r.status == PropStatus::Vacuous || r.status == PropStatus::Pass));
        CHECK(reduction_consistency(g, d).ok());
    }
}

TEST_CASE("a planted violation is reported with a witness: joined X_0 and X_2") {
    // On a 7-hole, X_0 and X_2 must meet in a <=1 matching (P2). Build a
    // full join and let the checker catch it. The graph is deliberately not
    // a class member; the checker works on the decomposition alone.
    Graph g(7 + 10);
    for (int i = 0; i < 7; ++i) g.add_edge(i, (i + 1) % 7);
    std::vector<int> x0, x2;
    for (int v = 7; v < 12; ++v) x0.push_back(v);
    for (int v = 12; v < 17; ++v) x2.push_back(v);
    for (int v : x0)
        for (int p : {0, 1, 2}) g.add_edge(v, p);
    for (int v : x2)
        for (int p : {2, 3, 4}) g.add_edge(v, p);
    auto clique = [&](const std::vector<int>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    };
    clique(x0);
    clique(x2);
    for (int u : x0)
        for (int v : x2) g.add_edge(u, v);
    Decomposition d = classify(g, hole_of_len(7), 5);
    PropertyReport rep = verify_properties(g, d);
    const auto* p2 = rep.find("P2");
    REQUIRE(p2);
    CHECK(p2->status == PropStatus::Fail);
    CHECK(p2->witness.size() == 3);
    CHECK(p2->predicted == "bridge");
}

TEST_CASE("planted instances pass every property") {
    Rng rng(77);
    for (int len : {5, 6, 7}) {
        for (int round = 0; round < 12; ++round) {
            PlantSpec spec = random_plant_spec(len, rng);
            Graph g = plant(spec);
            Hole h = hole_of_len(len);
            Decomposition d = classify(g, h, spec.threshold);
            PropertyReport rep = verify_properties(g, d);
            CHECK(rep.failures() == 0);
            CHECK(reduction_consistency(g, d).ok());
            // every retained set is a clique
            for (const auto& id : d.retained_ids()) CHECK(is_clique(g, d.set(id)));
        }
    }
}

TEST_CASE("classification is deterministic") {
    Rng rng(123);
    PlantSpec spec = random_plant_spec(6, rng);
    Graph g = plant(spec);
    Decomposition d1 = classify(g, hole_of_len(6), 5);
    Decomposition d2 = classify(g, hole_of_len(6), 5);
    CHECK(d1.sets == d2.sets);
    CHECK(d1.removed == d2.removed);
}

TEST_CASE("a planted conditional-emptiness violation: big Y_1 beside big X_3") {
    // a 7-hole with Y_1 and X_3 both big contradicts the Y/X emptiness
    // implication; the checker reports it with the pair as witness
    Graph g(7 + 10);
    for (int i = 0; i < 7; ++i) g.add_edge(i, (i + 1) % 7);
    std::vector<int> y1, x3;
    for (int v = 7; v < 12; ++v) y1.push_back(v);
    for (int v = 12; v < 17; ++v) x3.push_back(v);
    for (int v : y1)
        for (int p : {1, 2, 3, 4}) g.add_edge(v, p);
    for (int v : x3)
        for (int p : {3, 4, 5}) g.add_edge(v, p);
    auto clique = [&](const std::vector<int>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
    };
    clique(y1);
    clique(x3);
    Hole h{0, 1, 2, 3, 4, 5, 6};
    Decomposition d = classify(g, h, 5);
    PropertyReport rep = verify_properties(g, d);
    const auto* p10 = rep.find("P10a");
    REQUIRE(p10);
    CHECK(p10->status == PropStatus::Fail);
    CHECK(p10->witness.size() == 2);
}
