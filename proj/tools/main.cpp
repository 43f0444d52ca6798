// Command-line front end: recognition, decomposition, expression synthesis,
// evaluation, colouring, instance generation and DOT rendering.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict, 2 input or
// usage error.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cwd/colour.hpp"
#include "cwd/gen.hpp"
#include "cwd/io.hpp"
#include "cwd/synthesize.hpp"

using namespace cwd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write '" + out_path + "'");
    out << text;
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& paths,
                                       const std::string& glob) {
    std::vector<std::string> files = paths;
    if (!glob.empty()) {
        namespace fs = std::filesystem;
        fs::path dir = fs::path(glob).parent_path();
        if (dir.empty()) dir = ".";
        std::string pattern = fs::path(glob).filename().string();
        auto matches = [&](const std::string& name) {
            auto s = pattern.find('*');
            if (s == std::string::npos) return name == pattern;
            std::string pre = pattern.substr(0, s), post = pattern.substr(s + 1);
            return name.size() >= pre.size() + post.size() && name.rfind(pre, 0) == 0 &&
                   name.compare(name.size() - post.size(), post.size(), post) == 0;
        };
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && matches(entry.path().filename().string()))
                files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
}

// run fn per input file (workers when batched), print in path order
int for_each_input(const std::vector<std::string>& files, bool prefix_paths,
                   const std::function<int(const std::string&, std::ostream&)>& fn) {
    if (files.empty()) throw InputError("no input files");
    if (files.size() == 1) {
        std::ostringstream out;
        int rc = fn(files[0], out);
        std::cout << out.str();
        return rc;
    }
    std::vector<std::future<std::pair<int, std::string>>> work;
    for (const auto& f : files)
        work.push_back(std::async(std::launch::async, [&, f]() {
            std::ostringstream out;
            int rc = fn(f, out);
            return std::make_pair(rc, out.str());
        }));
    int rc = kExitOk;
    for (std::size_t i = 0; i < files.size(); ++i) {
        auto [code, text] = work[i].get();
        if (prefix_paths) std::cout << "== " << files[i] << "\n";
        std::cout << text;
        rc = std::max(rc, code);
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognition, hole decomposition, clique-width expression synthesis and "
                 "colouring for (claw, 4K1, bridge, C4-twin)-free graphs"};
    app.require_subcommand(1);

    std::vector<std::string> paths;
    std::string glob, format = "auto", out_path, against, hole_opt = "auto", expr_path, spec_path;
    int threshold = 5;
    std::uint64_t seed = 1;
    std::string emit_format = "json";
    bool render_expr = false, with_colours = false, with_table = false;

    auto add_inputs = [&](CLI::App* cmd) {
        cmd->add_option("paths", paths, "input graph files");
        cmd->add_option("--glob", glob, "glob pattern for batch mode");
        cmd->add_option("--format", format, "edge-list | dimacs | json | auto");
    };

    auto* check = app.add_subcommand("check", "class membership with witnesses");
    add_inputs(check);

    auto* decompose = app.add_subcommand("decompose", "hole decomposition and property report");
    add_inputs(decompose);
    decompose->add_option("--hole", hole_opt, "auto | 5 | 6 | 7");
    decompose->add_option("--threshold", threshold, "bigness threshold (default 5)");
    decompose->add_flag("--table", with_table, "also print the human-readable property table");

    auto* synth = app.add_subcommand("synthesize", "bounded-width expression synthesis");
    add_inputs(synth);
    synth->add_option("--threshold", threshold, "bigness threshold (default 5)");
    synth->add_option("-o,--out", out_path, "write the report here instead of stdout");

    auto* eval = app.add_subcommand("eval", "evaluate an expression file");
    eval->add_option("expr", expr_path, "expression text file")->required();
    eval->add_option("--against", against, "graph file to compare the evaluation with");
    eval->add_option("--emit", emit_format, "edge-list | dimacs | json");
    eval->add_option("-o,--out", out_path, "output path");

    auto* colour = app.add_subcommand("colour", "exact colouring via the dichotomy pipeline");
    add_inputs(colour);
    colour->add_option("--threshold", threshold, "bigness threshold (default 5)");

    auto* generate = app.add_subcommand("generate", "plant a class member from a spec");
    generate->add_option("spec", spec_path, "plant spec (json)")->required();
    generate->add_option("--seed", seed, "seed override");
    generate->add_option("--emit", emit_format, "edge-list | dimacs | json");
    generate->add_option("-o,--out", out_path, "output path");

    auto* render = app.add_subcommand("render", "DOT rendering of a graph or expression");
    add_inputs(render);
    render->add_flag("--expr", render_expr, "input is an expression file");
    render->add_flag("--colour", with_colours, "colour the vertices via the pipeline");
    render->add_option("-o,--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (check->parsed()) {
            return for_each_input(expand_inputs(paths, glob), paths.size() + glob.size() > 1,
                                  [&](const std::string& path, std::ostream& out) {
                                      Graph g = read_graph_file(path, format);
                                      auto rep = is_class_member(g);
                                      out << membership_json(g, rep).dump(2) << "\n";
                                      return rep.member() ? kExitOk : kExitNegative;
                                  });
        }
        if (decompose->parsed()) {
            bool table = with_table;
            return for_each_input(
                expand_inputs(paths, glob), paths.size() + glob.size() > 1,
                [&](const std::string& path, std::ostream& out) {
                    Graph g = read_graph_file(path, format);
                    auto mem = is_class_member(g);
                    if (!mem.member()) {
                        out << membership_json(g, mem).dump(2) << "\n";
                        return kExitNegative;
                    }
                    std::optional<Hole> hole;
                    if (hole_opt == "auto") {
                        for (int k : {7, 6, 5})
                            if ((hole = find_hole(g, k))) break;
                    } else {
                        int k = std::stoi(hole_opt);
                        if (k < 5 || k > 7) throw InputError("--hole must be auto, 5, 6 or 7");
                        hole = find_hole(g, k);
                    }
                    if (!hole) {
                        out << "{\n  \"hole\": null,\n  \"note\": \"no 5/6/7-hole; the graph is "
                               "perfect within the class\"\n}\n";
                        return kExitNegative;
                    }
                    Decomposition d = classify(g, *hole, threshold);
                    PropertyReport rep = verify_properties(g, d);
                    out << decomposition_json(g, d, rep).dump(2) << "\n";
                    if (table) out << property_table_text(rep);
                    return rep.failures() == 0 ? kExitOk : kExitNegative;
                });
        }
        if (synth->parsed()) {
            auto files = expand_inputs(paths, glob);
            if (!out_path.empty() && files.size() != 1)
                throw InputError("--out needs exactly one input");
            return for_each_input(files, files.size() > 1,
                                  [&](const std::string& path, std::ostream& out) {
                                      Graph g = read_graph_file(path, format);
                                      auto outcome = synthesize(g, threshold);
                                      if (std::holds_alternative<PerfectCertificate>(outcome)) {
                                          out << "{\n  \"branch\": \"perfect\"\n}\n";
                                          return kExitOk;
                                      }
                                      const auto& res = std::get<SynthesisResult>(outcome);
                                      std::string text = synthesis_json(g, res).dump(2) + "\n";
                                      if (out_path.empty())
                                          out << text;
                                      else
                                          emit(out_path, text);
                                      return kExitOk;
                                  });
        }
        if (eval->parsed()) {
            CwdExpr e = parse_expr(slurp(expr_path));
            LabeledGraph lg = evaluate(e);
            if (!against.empty()) {
                Graph target = read_graph_file(against, format);
                bool equal = lg.matches(target);
                std::cout << (equal ? "equal\n" : "different\n");
                return equal ? kExitOk : kExitNegative;
            }
            // emit the evaluated graph; vertex ids become names
            Graph g(lg.graph.n);
            g.adj = lg.graph.adj;
            for (long long vid : lg.vertex_ids) g.names.push_back(std::to_string(vid));
            emit(out_path, write_graph_text(g, format_from_path("", emit_format)));
            return kExitOk;
        }
        if (colour->parsed()) {
            return for_each_input(expand_inputs(paths, glob), paths.size() + glob.size() > 1,
                                  [&](const std::string& path, std::ostream& out) {
                                      Graph g = read_graph_file(path, format);
                                      ColouringResult res = colour_class_member(g, threshold);
                                      out << colouring_json(g, res).dump(2) << "\n";
                                      return kExitOk;
                                  });
        }
        if (generate->parsed()) {
            PlantSpec spec = plant_spec_from_json(nlohmann::json::parse(slurp(spec_path)));
            if (seed != 1) spec.seed = seed;
            Graph g = plant(spec);
            emit(out_path, write_graph_text(g, format_from_path("", emit_format)));
            return kExitOk;
        }
        if (render->parsed()) {
            auto files = expand_inputs(paths, glob);
            if (files.size() != 1) throw InputError("render takes one input");
            if (render_expr) {
                CwdExpr e = parse_expr(slurp(files[0]));
                emit(out_path, expr_to_dot(e));
                return kExitOk;
            }
            Graph g = read_graph_file(files[0], format);
            if (with_colours) {
                ColouringResult res = colour_class_member(g, threshold);
                emit(out_path, to_dot(g, &res.assignment));
            } else {
                emit(out_path, to_dot(g));
            }
            return kExitOk;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NotInClass& e) {
        std::cerr << "not in class: " << e.what() << "\n";
        return kExitNegative;
    } catch (const InfeasibleSpec& e) {
        std::cerr << "infeasible spec: " << e.what() << "\n";
        return kExitNegative;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
