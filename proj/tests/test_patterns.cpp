#include <doctest.h>

#include "cwd/patterns.hpp"
#include "oracles.hpp"

using namespace cwd;

namespace {

Graph petersen() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

}  // namespace

TEST_CASE("pattern templates have the right shape") {
    CHECK(Pattern::of(PatternKind::Claw).order() == 4);
    CHECK(Pattern::of(PatternKind::FourK1).tmpl.edge_count() == 0);
    CHECK(Pattern::of(PatternKind::Bridge).order() == 6);
    CHECK(Pattern::of(PatternKind::Bridge).tmpl.edge_count() == 11);
    CHECK(Pattern::of(PatternKind::C4Twin).order() == 5);
    CHECK(Pattern::of(PatternKind::C4Twin).tmpl.edge_count() == 7);
    CHECK(Pattern::of(PatternKind::P5Twin).order() == 6);
    CHECK(Pattern::of(PatternKind::C5Twin).order() == 6);
    CHECK(Pattern::of(PatternKind::CoR).order() == 6);
    CHECK(Pattern::of(PatternKind::CoA).order() == 6);
    CHECK(Pattern::of(PatternKind::FiveWheel).order() == 6);
    CHECK(Pattern::of(PatternKind::K5MinusE).tmpl.edge_count() == 9);
}

TEST_CASE("find_induced on the patterns themselves") {
    for (auto kind : {PatternKind::Claw, PatternKind::FourK1, PatternKind::Bridge,
                      PatternKind::C4Twin, PatternKind::P5Twin, PatternKind::C5Twin,
                      PatternKind::CoR, PatternKind::CoA, PatternKind::FiveWheel,
                      PatternKind::K5MinusE}) {
        Pattern p = Pattern::of(kind);
        auto occ = find_induced(p.tmpl, p);
        REQUIRE(occ);
        CHECK(occ->verify(p.tmpl));
    }
}

TEST_CASE("claw in a star, witnesses verify") {
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    auto occ = find_induced(star, Pattern::of(PatternKind::Claw));
    REQUIRE(occ);
    CHECK(occ->vertices.size() == 4);
    CHECK(occ->verify(star));
}

TEST_CASE("complement of C7 holds a C4-twin; C8 holds a 4K1; C7 does not") {
    Graph c7bar = complement(Graph::cycle(7));
    auto twin = find_induced(c7bar, Pattern::of(PatternKind::C4Twin));
    REQUIRE(twin);
    CHECK(twin->verify(c7bar));

    CHECK(!find_induced(Graph::cycle(7), Pattern::of(PatternKind::FourK1)));
    CHECK(find_induced(Graph::cycle(8), Pattern::of(PatternKind::FourK1)));
}

TEST_CASE("find_induced agrees with the subset oracle on random small graphs") {
    Rng rng(1234);
    std::vector<Pattern> patterns = {
        Pattern::of(PatternKind::Claw), Pattern::of(PatternKind::FourK1),
        Pattern::of(PatternKind::Bridge), Pattern::of(PatternKind::C4Twin)};
    for (int round = 0; round < 400; ++round) {
        int n = rng.next_int(1, 8);
        Graph g = cwd_test::random_graph(n, 0.1 * rng.next_int(1, 9), rng);
        for (const auto& p : patterns) {
            auto fast = find_induced(g, p);
            auto slow = cwd_test::brute_find_induced(g, p);
            CHECK(fast.has_value() == slow.has_value());
            if (fast) CHECK(fast->verify(g));
        }
    }
}

TEST_CASE("find_hole basics") {
    auto h = find_hole(Graph::cycle(7), 7);
    REQUIRE(h);
    CHECK(is_induced_cycle(Graph::cycle(7), *h));

    for (int k : {5, 6, 7}) CHECK(!find_hole(Graph::complete(5), k));

    auto h5 = find_hole(petersen(), 5);
    REQUIRE(h5);
    CHECK(is_induced_cycle(petersen(), *h5));
    CHECK(cwd_test::brute_has_hole(petersen(), 5));
}

TEST_CASE("find_hole agrees with subset enumeration on random graphs") {
    Rng rng(99);
    for (int round = 0; round < 300; ++round) {
        int n = rng.next_int(4, 8);
        Graph g = cwd_test::random_graph(n, 0.1 * rng.next_int(2, 8), rng);
        for (int k : {5, 6, 7}) {
            auto fast = find_hole(g, k);
            CHECK(fast.has_value() == cwd_test::brute_has_hole(g, k));
            if (fast) {
                CHECK((int)fast->size() == k);
                CHECK(is_induced_cycle(g, *fast));
            }
        }
    }
}

TEST_CASE("find_hole is deterministic and canonical") {
    Rng rng(5);
    Graph g = cwd_test::random_graph(9, 0.5, rng);
    auto h1 = find_hole(g, 5);
    auto h2 = find_hole(g, 5);
    CHECK(h1 == h2);
    if (h1) {
        int smallest = *std::min_element(h1->begin(), h1->end());
        CHECK(h1->front() == smallest);
    }
}

TEST_CASE("class membership") {
    CHECK(is_class_member(Graph::cycle(5)).member());
    CHECK(is_class_member(Graph::cycle(4)).member());

    auto c8 = is_class_member(Graph::cycle(8));
    CHECK(!c8.member());
    REQUIRE(c8.four_k1);
    CHECK(c8.four_k1->verify(Graph::cycle(8)));

    Graph bridge = Pattern::of(PatternKind::Bridge).tmpl;
    auto rep = is_class_member(bridge);
    CHECK(!rep.member());
    REQUIRE(rep.bridge);
    CHECK(rep.bridge->vertices.size() == 6);
}

TEST_CASE("membership by brute force on all small graphs") {
    Rng rng(2024);
    for (int round = 0; round < 200; ++round) {
        int n = rng.next_int(4, 7);
        Graph g = cwd_test::random_graph(n, 0.1 * rng.next_int(2, 8), rng);
        bool slow = !cwd_test::brute_find_induced(g, Pattern::of(PatternKind::Claw)) &&
                    !cwd_test::brute_find_induced(g, Pattern::of(PatternKind::FourK1)) &&
                    !cwd_test::brute_find_induced(g, Pattern::of(PatternKind::Bridge)) &&
                    !cwd_test::brute_find_induced(g, Pattern::of(PatternKind::C4Twin));
        CHECK(is_class_member(g).member() == slow);
    }
}

TEST_CASE("perfection inside the class") {
    auto c7 = is_perfect_in_class(Graph::cycle(7));
    CHECK(!c7.perfect);
    CHECK(c7.c7_witness);

    auto c4 = is_perfect_in_class(Graph::cycle(4));
    CHECK(c4.perfect);

    CHECK_THROWS_AS(is_perfect_in_class(Graph::cycle(8)), NotInClass);
}

TEST_CASE("complement of long cycles carries a C4-twin, per the antihole argument") {
    for (int t : {7, 8, 9})
        CHECK(find_induced(complement(Graph::cycle(t)), Pattern::of(PatternKind::C4Twin)));
}
