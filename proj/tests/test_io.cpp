#include <doctest.h>

#include "cwd/io.hpp"
#include "oracles.hpp"

using namespace cwd;

TEST_CASE("graph formats round trip") {
    Rng rng(13);
    for (int round = 0; round < 40; ++round) {
        Graph g = cwd_test::random_graph(rng.next_int(1, 12), 0.4, rng);
        for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Dimacs, GraphFormat::Json}) {
            std::string text = write_graph_text(g, fmt);
            Graph back = read_graph_text(text, fmt);
            // the edge list format drops isolated tail vertices; pad
            if (fmt == GraphFormat::EdgeList && back.n < g.n) {
                Graph padded(g.n);
                for (auto [u, v] : back.edges()) padded.add_edge(u, v);
                back = padded;
            }
            CHECK(back.same_edges(g));
        }
    }
}

TEST_CASE("format detection and diagnostics") {
    CHECK(format_from_path("x.json") == GraphFormat::Json);
    CHECK(format_from_path("x.col") == GraphFormat::Dimacs);
    CHECK(format_from_path("x.txt") == GraphFormat::EdgeList);
    CHECK(format_from_path("x.txt", "dimacs") == GraphFormat::Dimacs);
    CHECK_THROWS_AS(format_from_path("x", "nope"), InputError);

    CHECK_THROWS_AS(read_graph_text("0 0\n", GraphFormat::EdgeList), InputError);   // loop
    CHECK_THROWS_AS(read_graph_text("0 1 2\n", GraphFormat::EdgeList), InputError);  // trailing
    CHECK_THROWS_AS(read_graph_text("e 1 2\n", GraphFormat::Dimacs), InputError);
    CHECK_THROWS_AS(read_graph_text("p edge 2 1\ne 1 5\n", GraphFormat::Dimacs), InputError);
    CHECK_THROWS_AS(read_graph_text("{\"n\": 2}", GraphFormat::Json), InputError);
    CHECK_THROWS_AS(read_graph_text("{", GraphFormat::Json), InputError);
}

TEST_CASE("edge list accepts comments and blank lines") {
    Graph g = read_graph_text("# a triangle\n\n0 1\n1 2 # inline\n0 2\n", GraphFormat::EdgeList);
    CHECK(g.n == 3);
    CHECK(g.edge_count() == 3);
}

TEST_CASE("dimacs is one-based") {
    Graph g = read_graph_text("c comment\np edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::Dimacs);
    CHECK(g.n == 3);
    CHECK(g.edge(0, 1));
    CHECK(g.edge(1, 2));
}

TEST_CASE("json keeps names") {
    Graph g = read_graph_text(R"({"n":2,"edges":[[0,1]],"names":["a","b"]})", GraphFormat::Json);
    CHECK(g.name_of(0) == "a");
    std::string text = write_graph_text(g, GraphFormat::Json);
    CHECK(read_graph_text(text, GraphFormat::Json).names == g.names);
}

TEST_CASE("dot output mentions every vertex and edge") {
    Graph g = Graph::cycle(4);
    std::string dot = to_dot(g);
    for (int v = 0; v < 4; ++v) CHECK(dot.find("v" + std::to_string(v)) != std::string::npos);
    std::vector<int> colours{0, 1, 0, 1};
    std::string coloured = to_dot(g, &colours);
    CHECK(coloured.find("fillcolor") != std::string::npos);
}

TEST_CASE("report schemas carry a version") {
    Graph g = Graph::cycle(5);
    auto mem = is_class_member(g);
    auto j = membership_json(g, mem);
    CHECK(j.at("schema_version") == 1);
    CHECK(j.at("member") == true);

    Hole h{0, 1, 2, 3, 4};
    Decomposition d = classify(g, h, 5);
    auto dj = decomposition_json(g, d, verify_properties(g, d));
    CHECK(dj.at("schema_version") == 1);
    CHECK(dj.at("hole").at("length") == 5);
    CHECK(dj.at("failures") == 0);
}

TEST_CASE("golden membership report for C8") {
    Graph g = Graph::cycle(8);
    auto j = membership_json(g, is_class_member(g));
    // pinned: the canonical 4K1 witness in lexicographic order
    CHECK(j.dump() ==
          R"({"member":false,"schema_version":1,"witnesses":{"4K1":["0","2","4","6"],"C4-twin":null,"bridge":null,"claw":null}})");
}

TEST_CASE("golden synthesis report for the bare 5-hole") {
    Graph g = Graph::cycle(5);
    auto out = synthesize(g);
    REQUIRE(std::holds_alternative<SynthesisResult>(out));
    const auto& r = std::get<SynthesisResult>(out);
    auto j = synthesis_json(g, r);
    CHECK(j.at("width") == 5);
    CHECK(j.at("declared_bound") == 19);
    CHECK(j.at("expression") ==
          "join(tag:h4.old,tag:h3.old,join(tag:h4.old,tag:h0.old,union(join(tag:h3.old,"
          "tag:h2.old,union(join(tag:h2.old,tag:h1.old,union(join(tag:h1.old,tag:h0.old,"
          "union(create(tag:h0.old,0),create(tag:h1.old,1))),create(tag:h2.old,2))),"
          "create(tag:h3.old,3))),create(tag:h4.old,4))))");
}
