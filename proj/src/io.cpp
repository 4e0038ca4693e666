#include "cospec/io.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "cospec/errors.hpp"

namespace cospec {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

Rational keyed_rational(const std::string& token, std::string_view key, std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) fail(line, "expected " + prefix + "<rational>, got '" + token + "'");
  try {
    return Rational::parse(token.substr(prefix.size()));
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

std::vector<std::string> string_list(const nlohmann::json& doc, const char* key, bool required) {
  if (!doc.contains(key)) {
    if (required) throw ParseError(std::string("witness is missing \"") + key + "\"");
    return {};
  }
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw ParseError(std::string("witness field \"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw ParseError(std::string("witness field \"") + key + "\" must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

NamedGraph read_graph(std::istream& in) {
  std::string name = "graph";
  bool named = false;
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto t = tokenize(line);
    if (t.empty()) continue;
    if (t[0] == "graph") {
      if (t.size() != 2) fail(number, "expected 'graph <name>'");
      if (named) fail(number, "second 'graph' record");
      name = t[1];
      named = true;
    } else if (t[0] == "v") {
      if (t.size() < 2 || t.size() > 3) fail(number, "expected 'v <id> [vw=<rational>]'");
      vertices.push_back({t[1], t.size() == 3 ? keyed_rational(t[2], "vw", number) : Rational(0)});
    } else if (t[0] == "e") {
      if (t.size() < 3 || t.size() > 4) fail(number, "expected 'e <id1> <id2> [w=<rational>]'");
      edges.push_back({t[1], t[2], t.size() == 4 ? keyed_rational(t[3], "w", number) : Rational(1)});
    } else {
      fail(number, "unknown record '" + t[0] + "'");
    }
  }
  if (in.bad()) throw ParseError("read error");
  return {std::move(name), WeightedGraph::build(std::move(vertices), edges)};
}

NamedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g, std::string_view name) {
  out << "graph " << name << '\n';
  for (const auto& v : g.vertex_specs()) {
    out << "v " << v.id;
    if (!v.weight.is_zero()) out << " vw=" << v.weight;
    out << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v;
    if (e.weight != Rational(1)) out << " w=" << e.weight;
    out << '\n';
  }
}

std::string format_graph(const WeightedGraph& g, std::string_view name) {
  std::ostringstream out;
  write_graph(out, g, name);
  return out.str();
}

WitnessSets witness_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("witness must be a JSON object");
  WitnessSets sets{string_list(doc, "V1", true), string_list(doc, "V2", true), string_list(doc, "V3", false), {}};
  if (!doc.contains("pi") || !doc.at("pi").is_object()) throw ParseError("witness needs an object \"pi\"");
  for (const auto& [from, to] : doc.at("pi").items()) {
    if (!to.is_string()) throw ParseError("witness \"pi\" values must be strings");
    sets.pi[from] = to.get<std::string>();
  }
  return sets;
}

nlohmann::json witness_to_json(const WitnessSets& sets) {
  return {{"V1", sets.v1}, {"V2", sets.v2}, {"V3", sets.v3}, {"pi", sets.pi}};
}

nlohmann::json poly_to_json(const CharPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.str());
  return {{"degree", p.degree()}, {"coeffs", coeffs}};
}

CharPoly poly_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("coeffs") || !doc.at("coeffs").is_array()) {
    throw ParseError("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : doc.at("coeffs")) {
    if (!c.is_string()) throw ParseError("polynomial coefficients must be strings");
    coeffs.push_back(Rational::parse(c.get<std::string>()));
  }
  return CharPoly(std::move(coeffs));
}

std::string format_poly(const CharPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = p[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) out << '-';
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) out << mag;
    if (k > 0 && !unit) out << ' ';
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
  }
  return out.str();
}

std::vector<EigenGroup> group_eigenvalues(const std::vector<double>& ascending, double tol) {
  std::vector<EigenGroup> groups;
  for (double v : ascending) {
    if (!groups.empty() && std::abs(v - groups.back().value) <= tol) {
      ++groups.back().multiplicity;
    } else {
      groups.push_back({v, 1});
    }
  }
  return groups;
}

}  // namespace cospec
