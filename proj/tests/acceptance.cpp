// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. C1 carries a deliberate red check: the source material
// claims a two-label expression builds the four-vertex path, but graphs of
// clique-width two are exactly the cographs and P4 is the canonical
// non-cograph, so no such expression exists. The check is kept faithful and
// the exhaustive search result is printed beside it.

#include <chrono>
#include <cstdio>
#include <variant>

#include "cwd/builders.hpp"
#include "cwd/colour.hpp"
#include "cwd/gen.hpp"
#include "cwd/io.hpp"
#include "cwd/synthesize.hpp"
#include "oracles.hpp"

using namespace cwd;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* id, bool ok, const std::string& detail) {
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    if (!ok) ++failures;
}

// ---------------------------------------------------------------- C1
void criterion1() {
    auto start = Clock::now();
    // the three-label expression for the chordless path on three vertices
    CwdExpr p3 = parse_expr(
        "join(int:2,int:3,union(join(int:1,int:2,union(create(int:1,1),create(int:2,2))),"
        "create(int:3,3)))");
    LabeledGraph lg = evaluate(p3);
    bool p3_ok = lg.graph.n == 3;
    {
        int a = lg.index_of(1), b = lg.index_of(2), c = lg.index_of(3);
        p3_ok = p3_ok && lg.graph.edge(a, b) && lg.graph.edge(b, c) && !lg.graph.edge(a, c);
    }
    p3_ok = p3_ok && width(p3) == 3;
    report("C1a", p3_ok, "the worked expression evaluates to the chordless P3 (width 3)");

    // the best hand-coded expression for P4 uses three labels; it evaluates
    // to P4 exactly
    CwdExpr p4 = parse_expr(
        "join(int:2,int:3,union(relabel(int:3,int:2,relabel(int:2,int:1,"
        "join(int:2,int:3,union(join(int:1,int:2,union(create(int:1,0),create(int:2,1))),"
        "create(int:3,2))))),create(int:3,3)))");
    LabeledGraph g4 = evaluate(p4);
    bool evals_to_p4 = g4.matches(Graph::path(4));
    report("C1b-eval", evals_to_p4, "a hand-coded expression for P4 evaluates to P4 exactly");

    int true_min = cwd_test::min_cwd(Graph::path(4));
    bool two_label_claim = width(p4) == 2;
    report("C1b-width", two_label_claim,
           "claimed two-label witness for P4; hand-coded width is " + std::to_string(width(p4)) +
               ", and exhaustive search over all expressions gives min width " +
               std::to_string(true_min) +
               " (graphs of width two are exactly the cographs), so the claimed witness cannot "
               "exist; see the decisions ledger");
    std::printf("       C1 runtime %.3f ms\n", seconds_since(start) * 1000.0);
}

// ---------------------------------------------------------------- C2
void criterion2() {
    auto start = Clock::now();
    Rng rng(20240809);
    int violations = 0;
    long built = 0;
    auto check_exact = [&](const CwdExpr& e, const Graph& g, int bound) {
        if (width(e) > bound) ++violations;
        LabeledGraph lg = evaluate(e);
        for (std::size_t i = 0; i < lg.vertex_ids.size(); ++i)
            for (std::size_t j = i + 1; j < lg.vertex_ids.size(); ++j)
                if (lg.graph.edge((int)i, (int)j) !=
                    g.edge((int)lg.vertex_ids[i], (int)lg.vertex_ids[j])) {
                    ++violations;
                    return;
                }
    };
    for (int round = 0; round < 1000; ++round) {
        // pairs
        {
            int ns = rng.next_int(1, 8), na = rng.next_int(1, 8);
            Graph g(ns + na);
            for (int i = 0; i < ns; ++i)
                for (int j = i + 1; j < ns; ++j) g.add_edge(i, j);
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j) g.add_edge(ns + i, ns + j);
            int m = rng.next_int(0, std::min(ns, na));
            for (int k = 0; k < m; ++k) g.add_edge(k, ns + k);
            std::vector<int> sv, av;
            for (int i = 0; i < ns; ++i) sv.push_back(i);
            for (int i = 0; i < na; ++i) av.push_back(ns + i);
            check_exact(label_via_pairs(VertexSet(sv), VertexSet(av), g), g, 4);
            ++built;
        }
        // nonpairs
        {
            int ns = rng.next_int(1, 8), na = rng.next_int(1, 8);
            Graph g(ns + na);
            for (int i = 0; i < ns; ++i)
                for (int j = i + 1; j < ns; ++j) g.add_edge(i, j);
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j) g.add_edge(ns + i, ns + j);
            int m = rng.next_int(0, std::min(ns, na));
            for (int i = 0; i < ns; ++i)
                for (int j = 0; j < na; ++j)
                    if (!(i == j && i < m)) g.add_edge(i, ns + j);
            std::vector<int> sv, av;
            for (int i = 0; i < ns; ++i) sv.push_back(i);
            for (int i = 0; i < na; ++i) av.push_back(ns + i);
            check_exact(label_via_nonpairs(VertexSet(sv), VertexSet(av), g), g, 4);
            ++built;
        }
        // rows, t in 3..6
        {
            int t = rng.next_int(3, 6);
            std::vector<std::vector<int>> cliques(t);
            int next = 0;
            for (int i = 0; i < t; ++i)
                for (int k = 0, sz = rng.next_int(1, 4); k < sz; ++k) cliques[i].push_back(next++);
            Graph g(next);
            for (const auto& c : cliques)
                for (std::size_t i = 0; i < c.size(); ++i)
                    for (std::size_t j = i + 1; j < c.size(); ++j) g.add_edge(c[i], c[j]);
            std::vector<RowMode> modes(t);
            for (int i = 0; i < t; ++i) {
                int j = (i + 1) % t;
                modes[i] = rng.next_bool(0.5) ? RowMode::PairsAdj : RowMode::PairsNonAdj;
                std::size_t m =
                    (std::size_t)rng.next_below(std::min(cliques[i].size(), cliques[j].size()) + 1);
                for (int u : cliques[i])
                    for (int v : cliques[j]) {
                        std::size_t iu = std::find(cliques[i].begin(), cliques[i].end(), u) -
                                         cliques[i].begin();
                        std::size_t iv = std::find(cliques[j].begin(), cliques[j].end(), v) -
                                         cliques[j].begin();
                        bool partner = iu == iv && iu < m;
                        bool edge = modes[i] == RowMode::PairsAdj ? partner : !partner;
                        if (edge) g.add_edge(u, v);
                    }
            }
            for (int i = 0; i < t; ++i)
                for (int j = i + 2; j < t; ++j) {
                    if (i == 0 && j == t - 1) continue;
                    if (rng.next_bool(0.4))
                        for (int u : cliques[i])
                            for (int v : cliques[j]) g.add_edge(u, v);
                }
            std::vector<VertexSet> vs;
            for (auto& c : cliques) vs.push_back(VertexSet(c));
            check_exact(label_via_rows(vs, g, modes), g, 2 * t + 1);
            ++built;
        }
        // clique partition, k in 2..6
        {
            int k = rng.next_int(2, 6);
            std::vector<std::vector<int>> cliques(k);
            int next = 0;
            for (int i = 0; i < k; ++i)
                for (int c = 0, sz = rng.next_int(1, 4); c < sz; ++c) cliques[i].push_back(next++);
            Graph g(next);
            for (const auto& c : cliques)
                for (std::size_t i = 0; i < c.size(); ++i)
                    for (std::size_t j = i + 1; j < c.size(); ++j) g.add_edge(c[i], c[j]);
            std::vector<char> used(next, 0);
            for (int col = rng.next_int(0, 4); col > 0; --col) {
                std::vector<int> column;
                for (int i = 0; i < k; ++i) {
                    if (!rng.next_bool(0.6)) continue;
                    std::vector<int> free;
                    for (int v : cliques[i])
                        if (!used[v]) free.push_back(v);
                    if (!free.empty())
                        column.push_back(free[(std::size_t)rng.next_below(free.size())]);
                }
                if (column.size() < 2) continue;
                for (int v : column) used[v] = 1;
                for (std::size_t i = 0; i < column.size(); ++i)
                    for (std::size_t j = i + 1; j < column.size(); ++j)
                        g.add_edge(column[i], column[j]);
            }
            std::vector<VertexSet> vs;
            for (auto& c : cliques) vs.push_back(VertexSet(c));
            check_exact(label_clique_partition(vs, g), g, 2 * k);
            ++built;
        }
    }
    double secs = seconds_since(start);
    report("C2", violations == 0 && built == 4000 && secs < 30.0,
           std::to_string(built) + " construction runs, " + std::to_string(violations) +
               " violations, " + std::to_string(secs) + " s");
}

// ---------------------------------------------------------------- C3
void criterion3() {
    auto start = Clock::now();
    Rng rng(555);
    std::vector<Pattern> patterns = {
        Pattern::of(PatternKind::Claw), Pattern::of(PatternKind::FourK1),
        Pattern::of(PatternKind::Bridge), Pattern::of(PatternKind::C4Twin)};
    int disagreements = 0;
    for (int round = 0; round < 5000; ++round) {
        int n = rng.next_int(1, 8);
        Graph g = cwd_test::random_graph(n, 0.1 * rng.next_int(1, 9), rng);
        for (const auto& p : patterns) {
            auto fast = find_induced(g, p);
            auto slow = cwd_test::brute_find_induced(g, p);
            if (fast.has_value() != slow.has_value()) ++disagreements;
            if (fast && !fast->verify(g)) ++disagreements;
        }
        for (int k : {5, 6, 7})
            if (find_hole(g, k).has_value() != cwd_test::brute_has_hole(g, k)) ++disagreements;
    }
    report("C3", disagreements == 0,
           "5000 graphs, " + std::to_string(disagreements) + " disagreements, " +
               std::to_string(seconds_since(start)) + " s");
}

// ---------------------------------------------------------------- C4
void criterion4() {
    bool ok = true;
    for (int t : {7, 8, 9})
        ok = ok && find_induced(complement(Graph::cycle(t)), Pattern::of(PatternKind::C4Twin))
                       .has_value();
    ok = ok && find_induced(Graph::cycle(8), Pattern::of(PatternKind::FourK1)).has_value();
    report("C4", ok, "C4-twin inside the complements of C7/C8/C9; 4K1 inside C8");
}

// ---------------------------------------------------------------- C5
void criterion5() {
    auto start = Clock::now();
    Rng rng(31415926);
    int prop_failures = 0, eval_mismatches = 0, width_violations = 0, case_not_covered = 0,
        done = 0;
    int max_n = 0;
    for (int len : {5, 6, 7}) {
        for (int round = 0; round < 300; ++round) {
            PlantSpec spec = random_plant_spec(len, rng);
            for (auto& s : spec.sets) s.size += (int)rng.next_below(7);  // n up to ~80
            Graph g = plant(spec);
            max_n = std::max(max_n, g.n);
            Hole h;
            for (int i = 0; i < len; ++i) h.push_back(i);
            Decomposition d = classify(g, h, spec.threshold);
            PropertyReport rep = verify_properties(g, d);
            if (rep.failures() > 0) {
                ++prop_failures;
                continue;
            }
            try {
                // the pipeline prefers longer holes; a planted instance may
                // carry an accidental longer hole and is synthesized around it
                auto out = synthesize(g, spec.threshold);
                const auto& r = std::get<SynthesisResult>(out);
                if (!evaluate(r.expr).matches(g)) ++eval_mismatches;
                if (r.width_achieved > r.declared_bound()) ++width_violations;
            } catch (const CaseNotCovered&) {
                ++case_not_covered;
            }
            ++done;
        }
    }
    double secs = seconds_since(start);
    bool ok = prop_failures == 0 && eval_mismatches == 0 && width_violations == 0 &&
              case_not_covered == 0 && done == 900 && secs < 300.0;
    report("C5", ok,
           std::to_string(done) + " planted instances (largest n " + std::to_string(max_n) +
               "), property failures " + std::to_string(prop_failures) + ", evaluation mismatches " +
               std::to_string(eval_mismatches) + ", width violations " +
               std::to_string(width_violations) + ", uncovered cases " +
               std::to_string(case_not_covered) + ", " + std::to_string(secs) + " s");
}

// ---------------------------------------------------------------- C6
void criterion6() {
    auto start = Clock::now();
    Rng rng(8675309);
    int done = 0, chi_mismatch = 0, improper = 0, perfect_mismatch = 0;
    while (done < 200) {
        int n = rng.next_int(4, 12);
        auto g = reject_sample(n, 0.1 * rng.next_int(3, 9), rng.next_u64(), 3);
        if (!g) continue;
        ++done;
        ColouringResult res = colour_class_member(*g);
        if (res.chi != cwd_test::brute_chi(*g)) ++chi_mismatch;
        for (auto [u, v] : g->edges())
            if (res.assignment[u] == res.assignment[v]) ++improper;
        if (res.branch == ColourBranch::Perfect && res.chi != res.omega) ++perfect_mismatch;
    }
    bool pinned = exact_chromatic(Graph::cycle(5)).chi() == 3 &&
                  exact_chromatic(Graph::cycle(7)).chi() == 3;
    bool ok = chi_mismatch == 0 && improper == 0 && perfect_mismatch == 0 && pinned;
    report("C6", ok,
           "200 members, chi mismatches " + std::to_string(chi_mismatch) + ", improper " +
               std::to_string(improper) + ", perfect-branch mismatches " +
               std::to_string(perfect_mismatch) + ", chi(C5)=chi(C7)=3 " +
               (pinned ? "pinned" : "broken") + ", " + std::to_string(seconds_since(start)) + " s");
}

// ---------------------------------------------------------------- C7
void criterion7() {
    auto start = Clock::now();
    auto graphs = cwd_test::connected_graphs_up_to(6);
    int violations = 0, checked = 0;
    for (const auto& g : graphs) {
        int w = cwd_test::min_cwd(g);
        int wc = cwd_test::min_cwd(complement(g));
        if (wc > 2 * w) ++violations;
        ++checked;
    }
    report("C7", violations == 0 && checked == 143,
           std::to_string(checked) + " connected graphs up to 6 vertices, " +
               std::to_string(violations) + " violations of cwd(complement) <= 2*cwd, " +
               std::to_string(seconds_since(start)) + " s (desk-scale empirical probe)");
}

// ---------------------------------------------------------------- C8
void criterion8() {
    PlantSpec spec{6,
                   {{Family::X, 0, 6}, {Family::X, 1, 6}, {Family::X, 3, 5}, {Family::T, 3, 5}},
                   20260809,
                   5};
    Graph a = plant(spec);
    Graph b = plant(spec);
    bool graphs_equal = a.same_edges(b) &&
                        write_graph_text(a, GraphFormat::Json) == write_graph_text(b, GraphFormat::Json);
    auto out1 = synthesize(a);
    auto out2 = synthesize(a);
    bool synth_equal =
        std::holds_alternative<SynthesisResult>(out1) &&
        synthesis_json(a, std::get<SynthesisResult>(out1)).dump() ==
            synthesis_json(a, std::get<SynthesisResult>(out2)).dump();
    report("C8", graphs_equal && synth_equal,
           "generation and synthesis byte-identical across reruns (same seed and flags)");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%d failing check(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
