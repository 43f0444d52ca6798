#ifndef CWD_IO_HPP
#define CWD_IO_HPP

#include <string>

#include <json.hpp>

#include "cwd/colour.hpp"
#include "cwd/decompose.hpp"
#include "cwd/gen.hpp"
#include "cwd/graph.hpp"
#include "cwd/patterns.hpp"
#include "cwd/synthesize.hpp"

namespace cwd {

enum class GraphFormat { EdgeList, Dimacs, Json };

struct InputError : Error {
    using Error::Error;
};

GraphFormat format_from_path(const std::string& path, const std::string& override_name = "auto");

Graph read_graph_text(const std::string& text, GraphFormat fmt);
Graph read_graph_file(const std::string& path, const std::string& format_name = "auto");
std::string write_graph_text(const Graph& g, GraphFormat fmt);

std::string to_dot(const Graph& g, const std::vector<int>* colours = nullptr);
std::string expr_to_dot(const CwdExpr& e);

nlohmann::json membership_json(const Graph& g, const MembershipReport& r);
nlohmann::json decomposition_json(const Graph& g, const Decomposition& d,
                                  const PropertyReport& rep);
std::string property_table_text(const PropertyReport& rep);
nlohmann::json synthesis_json(const Graph& g, const SynthesisResult& r);
nlohmann::json colouring_json(const Graph& g, const ColouringResult& r);

nlohmann::json plant_spec_json(const PlantSpec& spec);
PlantSpec plant_spec_from_json(const nlohmann::json& j);

}  // namespace cwd

#endif
