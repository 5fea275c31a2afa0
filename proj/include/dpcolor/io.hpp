#pragma once

#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/solver.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace dpc::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// Lists: {"<vertex>": [colors...]}, every vertex present.
ListAssignment lists_from_json(const Graph& g, const json& doc);
json lists_to_json(const ListAssignment& lists);

// Matchings: [{"u": u, "v": v, "pairs": [[a, b], ...]}], u < v, one per edge.
MatchingAssignment matchings_from_json(const Graph& g, const json& doc);
json matchings_to_json(const Graph& g, const MatchingAssignment& m);

// Colorings: {"<vertex>": color}; absent vertices are uncolored.
Coloring coloring_from_json(const Graph& g, const json& doc);
json coloring_to_json(const Coloring& f);

/// Edge-list format with a sign column: "n m" then m lines "u v s", s = +1/-1.
SignedGraph parse_signed_graph(std::string_view text);

json certificate_to_json(const Graph& g, const ChromaticCertificate& cert);
json trace_to_json(const ReductionTrace& trace);
json graph_to_json(const Graph& g);

/// Parses JSON text, rethrowing syntax errors as ParseError.
json parse_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace dpc::io
