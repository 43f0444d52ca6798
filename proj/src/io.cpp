#include "cwd/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cwd {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

std::string family_name(Family f) {
    switch (f) {
        case Family::T: return "T";
        case Family::X: return "X";
        case Family::Y: return "Y";
        case Family::Z: return "Z";
        case Family::R: return "R";
    }
    return "?";
}

Family family_from(const std::string& s) {
    if (s == "T") return Family::T;
    if (s == "X") return Family::X;
    if (s == "Y") return Family::Y;
    if (s == "Z") return Family::Z;
    if (s == "R") return Family::R;
    throw InputError("unknown family '" + s + "'");
}

std::string status_name(PropStatus st) {
    switch (st) {
        case PropStatus::Pass: return "pass";
        case PropStatus::Fail: return "fail";
        case PropStatus::Vacuous: return "vacuous";
    }
    return "?";
}

json names_of(const Graph& g, const std::vector<int>& vs) {
    json out = json::array();
    for (int v : vs) out.push_back(g.name_of(v));
    return out;
}

}  // namespace

GraphFormat format_from_path(const std::string& path, const std::string& override_name) {
    if (override_name == "edge-list" || override_name == "edgelist") return GraphFormat::EdgeList;
    if (override_name == "dimacs") return GraphFormat::Dimacs;
    if (override_name == "json") return GraphFormat::Json;
    if (override_name != "auto") throw InputError("unknown format '" + override_name + "'");
    auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "json") return GraphFormat::Json;
    if (ext == "col" || ext == "dimacs" || ext == "clq") return GraphFormat::Dimacs;
    return GraphFormat::EdgeList;
}

namespace {

Graph read_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int maxv = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v) || u < 0 || v < 0 || u == v)
            throw InputError("edge list: bad edge at line " + std::to_string(lineno));
        long long extra;
        if (ls >> extra) throw InputError("edge list: trailing data at line " + std::to_string(lineno));
        edges.emplace_back((int)u, (int)v);
        maxv = std::max(maxv, (int)std::max(u, v));
    }
    Graph g(maxv + 1);
    for (auto [u, v] : edges)
        if (!g.edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph read_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0, n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            long long nn, mm;
            if (!(ls >> kind >> nn >> mm) || (kind != "edge" && kind != "col"))
                throw InputError("dimacs: bad problem line at line " + std::to_string(lineno));
            n = (int)nn;
        } else if (tag == "e") {
            long long u, v;
            if (!(ls >> u >> v)) throw InputError("dimacs: bad edge at line " + std::to_string(lineno));
            if (n < 0) throw InputError("dimacs: edge before the problem line");
            if (u < 1 || v < 1 || u > n || v > n || u == v)
                throw InputError("dimacs: edge endpoints out of range at line " +
                                 std::to_string(lineno));
            edges.emplace_back((int)u - 1, (int)v - 1);
        } else if (!tag.empty()) {
            throw InputError("dimacs: unknown line tag '" + tag + "' at line " +
                             std::to_string(lineno));
        }
    }
    if (n < 0) throw InputError("dimacs: missing problem line");
    Graph g(n);
    for (auto [u, v] : edges)
        if (!g.edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph read_json_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("json: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("edges")) throw InputError("json: need fields n and edges");
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        int u = e.at(0).get<int>(), v = e.at(1).get<int>();
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
            throw InputError("json: edge endpoints out of range");
        if (!g.edge(u, v)) g.add_edge(u, v);
    }
    if (j.contains("names")) {
        auto names = j.at("names").get<std::vector<std::string>>();
        if ((int)names.size() != g.n) throw InputError("json: names length mismatch");
        g.names = names;
    }
    return g;
}

}  // namespace

Graph read_graph_text(const std::string& text, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::EdgeList: return read_edge_list(text);
        case GraphFormat::Dimacs: return read_dimacs(text);
        case GraphFormat::Json: return read_json_graph(text);
    }
    throw InputError("unknown format");
}

Graph read_graph_file(const std::string& path, const std::string& format_name) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return read_graph_text(buf.str(), format_from_path(path, format_name));
}

std::string write_graph_text(const Graph& g, GraphFormat fmt) {
    std::ostringstream out;
    switch (fmt) {
        case GraphFormat::EdgeList: {
            out << "# " << g.n << " vertices, " << g.edge_count() << " edges\n";
            for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
            break;
        }
        case GraphFormat::Dimacs: {
            out << "p edge " << g.n << " " << g.edge_count() << "\n";
            for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
            break;
        }
        case GraphFormat::Json: {
            json j;
            j["n"] = g.n;
            json edges = json::array();
            for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
            j["edges"] = edges;
            if (!g.names.empty()) j["names"] = g.names;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

std::string to_dot(const Graph& g, const std::vector<int>* colours) {
    static const char* palette[] = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231",
                                    "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
                                    "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000",
                                    "#aaffc3"};
    std::ostringstream out;
    out << "graph g {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  v" << v << " [label=\"" << g.name_of(v) << "\"";
        if (colours && v < (int)colours->size())
            out << ", style=filled, fillcolor=\"" << palette[(*colours)[v] % 16] << "\"";
        out << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string expr_to_dot(const CwdExpr& e) {
    std::ostringstream out;
    out << "digraph expr {\n  node [shape=box];\n";
    for (int i = 0; i < (int)e.nodes.size(); ++i) {
        const auto& nd = e.nodes[i];
        std::string label;
        switch (nd.op) {
            case CwdExpr::Op::Create:
                label = "create " + nd.a.to_string() + " v" + std::to_string(nd.vertex);
                break;
            case CwdExpr::Op::Union: label = "union"; break;
            case CwdExpr::Op::Relabel:
                label = "relabel " + nd.a.to_string() + " -> " + nd.b.to_string();
                break;
            case CwdExpr::Op::Join: label = "join " + nd.a.to_string() + " , " + nd.b.to_string(); break;
        }
        out << "  n" << i << " [label=\"" << label << "\"];\n";
        if (nd.op != CwdExpr::Op::Create) {
            out << "  n" << i << " -> n" << nd.child0 << ";\n";
            if (nd.op == CwdExpr::Op::Union) out << "  n" << i << " -> n" << nd.child1 << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

nlohmann::json membership_json(const Graph& g, const MembershipReport& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["member"] = r.member();
    json w;
    auto put = [&](const char* key, const std::optional<Occurrence>& occ) {
        if (occ)
            w[key] = names_of(g, occ->vertices);
        else
            w[key] = nullptr;
    };
    put("claw", r.claw);
    put("4K1", r.four_k1);
    put("bridge", r.bridge);
    put("C4-twin", r.c4_twin);
    j["witnesses"] = w;
    return j;
}

nlohmann::json decomposition_json(const Graph& g, const Decomposition& d,
                                  const PropertyReport& rep) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["hole"] = {{"length", d.len()}, {"vertices", names_of(g, d.hole)}};
    j["threshold"] = d.threshold;
    json sets = json::array();
    for (const auto& [id, vs] : d.sets)
        sets.push_back({{"family", family_name(id.family)},
                        {"index", id.index},
                        {"name", id.name()},
                        {"vertices", names_of(g, vs)}});
    j["sets"] = sets;
    json removed = json::array();
    for (const auto& [v, id] : d.removed)
        removed.push_back({{"vertex", g.name_of(v)}, {"set", id.name()}});
    j["removed"] = removed;
    json props = json::array();
    for (const auto& r : rep.results) {
        json p = {{"id", r.id}, {"description", r.description}, {"status", status_name(r.status)}};
        if (r.status == PropStatus::Fail) {
            p["witness"] = names_of(g, r.witness);
            p["predicted_pattern"] = r.predicted;
        }
        props.push_back(p);
    }
    j["properties"] = props;
    j["failures"] = rep.failures();
    return j;
}

std::string property_table_text(const PropertyReport& rep) {
    std::ostringstream out;
    out << "property  status   description\n";
    for (const auto& r : rep.results) {
        out << r.id;
        for (std::size_t k = r.id.size(); k < 10; ++k) out << ' ';
        std::string st = status_name(r.status);
        out << st;
        for (std::size_t k = st.size(); k < 9; ++k) out << ' ';
        out << r.description << "\n";
    }
    return out.str();
}

nlohmann::json synthesis_json(const Graph& g, const SynthesisResult& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["hole"] = {{"length", r.hole_len}, {"vertices", names_of(g, r.hole)}};
    j["width"] = r.width_achieved;
    j["declared_bound"] = r.declared_bound();
    j["bound_breakdown"] = {{"case_labels", r.bound.case_labels},
                            {"hole", r.bound.hole},
                            {"removed", r.bound.removed},
                            {"transit", r.bound.transit}};
    json steps = json::array();
    for (const auto& s : r.case_trace)
        steps.push_back({{"case", s.case_id}, {"sets", s.sets}, {"builder", s.builder}});
    j["case_trace"] = steps;
    j["expression"] = serialize(r.expr);
    return j;
}

nlohmann::json colouring_json(const Graph& g, const ColouringResult& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["chi"] = r.chi;
    j["omega"] = r.omega;
    j["branch"] = r.branch == ColourBranch::Perfect ? "perfect" : "bounded-clique-width";
    json assign = json::object();
    for (int v = 0; v < g.n; ++v) assign[g.name_of(v)] = r.assignment[v];
    j["assignment"] = assign;
    if (r.certificate) j["certificate"] = synthesis_json(g, *r.certificate);
    return j;
}

nlohmann::json plant_spec_json(const PlantSpec& spec) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["hole_len"] = spec.hole_len;
    j["threshold"] = spec.threshold;
    j["seed"] = spec.seed;
    json sets = json::array();
    for (const auto& s : spec.sets)
        sets.push_back(
            {{"family", family_name(s.family)}, {"index", s.index}, {"size", s.size}});
    j["sets"] = sets;
    return j;
}

PlantSpec plant_spec_from_json(const nlohmann::json& j) {
    PlantSpec spec;
    try {
        spec.hole_len = j.at("hole_len").get<int>();
        if (j.contains("threshold")) spec.threshold = j.at("threshold").get<int>();
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
        for (const auto& s : j.at("sets"))
            spec.sets.push_back({family_from(s.at("family").get<std::string>()),
                                 s.at("index").get<int>(), s.at("size").get<int>()});
    } catch (const json::exception& e) {
        throw InputError(std::string("plant spec: ") + e.what());
    }
    return spec;
}

}  // namespace cwd
