#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/twins.hpp"

namespace cospec {

struct NamedGraph {
  std::string name;
  WeightedGraph graph;
};

/// Reads the line format
///
///   graph <name>
///   v <id> [vw=<rational>]
///   e <id1> <id2> [w=<rational>]
///
/// '#' opens a comment at the start of a line or after whitespace. The name
/// defaults to "graph". Throws ParseError with the line number on malformed
/// input and GraphError on structural problems.
NamedGraph read_graph(std::istream& in);
NamedGraph parse_graph(std::string_view text);

/// Inverse of read_graph: vw is written only when nonzero and w only when
/// not 1, so parse_graph(format_graph(g, n)).graph == g.
std::string format_graph(const WeightedGraph& g, std::string_view name);
void write_graph(std::ostream& out, const WeightedGraph& g, std::string_view name);

/// {"V1": [...], "V2": [...], "V3": [...], "pi": {"u": "v", ...}}; V3 may be
/// omitted (empty). Throws ParseError on malformed documents.
WitnessSets witness_from_json(const nlohmann::json& doc);
nlohmann::json witness_to_json(const WitnessSets& sets);

/// {"degree": n, "coeffs": ["p/q", ...]}, index = power.
nlohmann::json poly_to_json(const CharPoly& p);
CharPoly poly_from_json(const nlohmann::json& doc);

/// Human-readable form, highest power first: "x^2 - 1/4".
std::string format_poly(const CharPoly& p);

struct EigenGroup {
  double value;
  int multiplicity;
};

/// Groups an ascending list by consecutive values within tol.
std::vector<EigenGroup> group_eigenvalues(const std::vector<double>& ascending, double tol = 1e-8);

}  // namespace cospec
