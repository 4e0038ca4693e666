#include "cospec/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "cospec/alpha.hpp"
#include "cospec/constructions.hpp"
#include "cospec/errors.hpp"
#include "cospec/io.hpp"
#include "cospec/spectra.hpp"
#include "cospec/twins.hpp"

namespace cospec::cli {

namespace {

using nlohmann::json;

struct Context {
  std::istream& in;
  std::ostream& out;
  bool text = false;
  bool stdin_used = false;

  NamedGraph load(const std::string& path) {
    if (path == "-") {
      if (stdin_used) throw ParseError("standard input can only be read once");
      stdin_used = true;
      return read_graph(in);
    }
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open graph file: " + path);
    return read_graph(file);
  }

  json load_json(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open JSON file: " + path);
    try {
      return json::parse(file);
    } catch (const json::parse_error& e) {
      throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
  }

  void emit(const json& doc) { out << doc.dump(2) << '\n'; }
};

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

Multiplicity parse_multiplicity(const std::string& spec) {
  Multiplicity m;
  std::stringstream items(spec);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected v=<count> in --mult, got '" + item + "'");
    const std::string count = item.substr(eq + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(count, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != count.size()) throw ParseError("bad multiplicity '" + count + "' in --mult");
    if (!m.emplace(item.substr(0, eq), value).second) throw ParseError("vertex repeated in --mult: " + item);
  }
  return m;
}

json twin_class_json(const TwinClass& c) {
  json scales = json::array();
  for (const auto& s : c.scales) scales.push_back(s.str());
  return {{"members", c.members}, {"scales", scales}};
}

int verdict(Context& ctx, bool value, const json& doc, const std::string& label) {
  if (ctx.text) {
    ctx.out << label << ": " << (value ? "true" : "false") << '\n';
  } else {
    ctx.emit(doc);
  }
  return value ? exit_ok : exit_false;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact normalized-Laplacian cospectrality toolkit", "cospec"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string file_a = "-";
  std::string file_b;
  std::string matrix = "normalized";
  std::string witness_path;
  std::string mult;
  std::string beta_text;
  std::string variant = "full";
  std::string fixture_name;
  int side = 0;
  int k = 1;

  const auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("--matrix", matrix, "adjacency|laplacian|signless|normalized|transition");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Numeric eigenvalues, ascending");
  spectrum->add_option("file", file_a, "Graph file or - for stdin");
  add_matrix(spectrum);

  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial");
  charpoly->add_option("file", file_a, "Graph file or - for stdin");
  add_matrix(charpoly);

  auto* cosp = app.add_subcommand("cospectral", "Exact cospectrality verdict");
  cosp->add_option("a", file_a)->required();
  cosp->add_option("b", file_b)->required();
  add_matrix(cosp);

  auto* twins = app.add_subcommand("twins", "Twin vertices");
  twins->require_subcommand(1);
  auto* twins_find = twins->add_subcommand("find", "List twin classes");
  twins_find->add_option("file", file_a);
  auto* twins_coalesce = twins->add_subcommand("coalesce", "Coalesce all twins");
  twins_coalesce->add_option("file", file_a);

  auto* verify = app.add_subcommand("verify-witness", "Check a twin-subgraph witness");
  verify->add_option("file", file_a);
  verify->add_option("--witness", witness_path, "Witness JSON file")->required();

  auto* quotient = app.add_subcommand("quotient", "Quotient graph, or a hat subgraph with --side");
  quotient->add_option("file", file_a);
  quotient->add_option("--witness", witness_path, "Witness JSON file")->required();
  quotient->add_option("--side", side, "1 or 2")->check(CLI::Range(1, 2));

  auto* decompose = app.add_subcommand("decompose-check", "Exact factorization through a witness");
  decompose->add_option("file", file_a);
  decompose->add_option("--witness", witness_path, "Witness JSON file")->required();

  auto* blow = app.add_subcommand("blowup", "Blow up a simple graph");
  blow->add_option("file", file_a);
  blow->add_option("--mult", mult, "v=3,u=6,...")->required();

  auto* family = app.add_subcommand("family", "Graphs cospectral with a subgraph");
  family->require_subcommand(1);
  auto* family1 = family->add_subcommand("subgraph1", "First family");
  auto* family2 = family->add_subcommand("subgraph2", "Second family");
  for (auto* sub : {family1, family2}) {
    sub->add_option("--k", k, "Parameter k >= 1")->required();
    sub->add_option("--variant", variant, "full|sub");
  }

  auto* fixture_cmd = app.add_subcommand("fixture", "Print a built-in example graph");
  fixture_cmd->add_option("name", fixture_name)->required();

  auto* iso = app.add_subcommand("scaled-iso", "Scaled isomorphism search");
  iso->add_option("a", file_a)->required();
  iso->add_option("b", file_b)->required();

  auto* alpha = app.add_subcommand("alpha-check", "Adjacency alpha-cospectrality verdict");
  alpha->add_option("a", file_a)->required();
  alpha->add_option("b", file_b)->required();
  alpha->add_option("--beta", beta_text, "alpha squared, p/q")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Context ctx{in, out, format == "text"};
  try {
    if (spectrum->parsed()) {
      const auto g = ctx.load(file_a);
      const MatrixKind kind = parse_matrix_kind(matrix);
      const auto values = eigenvalues_numeric(g.graph, kind);
      if (ctx.text) {
        for (double v : values) out << format_double(v) << '\n';
        return exit_ok;
      }
      json groups = json::array();
      for (const auto& grp : group_eigenvalues(values)) {
        groups.push_back({{"value", grp.value}, {"multiplicity", grp.multiplicity}});
      }
      ctx.emit({{"matrix", to_string(kind)}, {"eigenvalues", values}, {"groups", groups}});
      return exit_ok;
    }
    if (charpoly->parsed()) {
      const auto g = ctx.load(file_a);
      const CharPoly p = char_poly(g.graph, parse_matrix_kind(matrix));
      if (ctx.text) {
        out << format_poly(p) << '\n';
      } else {
        ctx.emit(poly_to_json(p));
      }
      return exit_ok;
    }
    if (cosp->parsed()) {
      const auto g = ctx.load(file_a);
      const auto h = ctx.load(file_b);
      const MatrixKind kind = parse_matrix_kind(matrix);
      const bool same = cospectral(g.graph, h.graph, kind);
      return verdict(ctx, same, {{"cospectral", same}, {"matrix", to_string(kind)}}, "cospectral");
    }
    if (twins_find->parsed()) {
      const auto g = ctx.load(file_a);
      json classes = json::array();
      for (const auto& c : twin_classes(g.graph)) {
        if (c.members.size() < 2) continue;
        if (ctx.text) {
          for (std::size_t i = 0; i < c.members.size(); ++i) {
            out << (i ? " " : "") << c.members[i] << (i ? "(" + c.scales[i].str() + ")" : "");
          }
          out << '\n';
        }
        classes.push_back(twin_class_json(c));
      }
      if (!ctx.text) ctx.emit({{"classes", classes}});
      return exit_ok;
    }
    if (twins_coalesce->parsed()) {
      const auto g = ctx.load(file_a);
      const auto result = coalesce_all(g.graph);
      out << "# removed " << result.removed << '\n';
      write_graph(out, result.graph, g.name);
      return exit_ok;
    }
    if (verify->parsed() || quotient->parsed() || decompose->parsed()) {
      const auto g = ctx.load(file_a);
      WitnessSets sets = witness_from_json(ctx.load_json(witness_path));
      if (verify->parsed()) {
        const auto a = verify_twin_subgraphs(g.graph, sets);
        if (ctx.text) {
          out << "twin_subgraphs: " << (a ? "true alpha=" + a->str() : "false") << '\n';
        } else {
          ctx.emit({{"twin_subgraphs", a.has_value()}, {"alpha", a ? json(a->str()) : json(nullptr)}});
        }
        return exit_ok;
      }
      const auto w = make_witness(g.graph, std::move(sets));
      if (quotient->parsed()) {
        if (side == 0) {
          write_graph(out, quotient_graph(g.graph, w), g.name + "_hat");
        } else {
          write_graph(out, hat_subgraph(g.graph, w, side), g.name + "_H" + std::to_string(side) + "hat");
        }
        return exit_ok;
      }
      const bool holds = decomposition_check(g.graph, w);
      return verdict(ctx, holds, {{"decomposes", holds}, {"alpha", w.alpha.str()}}, "decomposes");
    }
    if (blow->parsed()) {
      const auto g = ctx.load(file_a);
      write_graph(out, blowup(g.graph, parse_multiplicity(mult)), g.name + "_blowup");
      return exit_ok;
    }
    if (family1->parsed() || family2->parsed()) {
      const FamilyVariant v = parse_family_variant(variant);
      const int which = family1->parsed() ? 1 : 2;
      const auto g = which == 1 ? family_subgraph1(k, v) : family_subgraph2(k, v);
      write_graph(out, g, "family" + std::to_string(which) + "_k" + std::to_string(k) + "_" + std::string(to_string(v)));
      return exit_ok;
    }
    if (fixture_cmd->parsed()) {
      write_graph(out, fixture(fixture_name), fixture_name);
      return exit_ok;
    }
    if (iso->parsed()) {
      const auto g = ctx.load(file_a);
      const auto h = ctx.load(file_b);
      const auto found = scaled_isomorphism(g.graph, h.graph);
      json doc{{"isomorphic", found.has_value()}};
      if (found) {
        doc["alpha"] = found->alpha.str();
        doc["map"] = found->map;
      }
      if (ctx.text && found) {
        out << "isomorphic: true alpha=" << found->alpha << '\n';
        for (const auto& [from, to] : found->map) out << from << " -> " << to << '\n';
        return exit_ok;
      }
      return verdict(ctx, found.has_value(), doc, "isomorphic");
    }
    if (alpha->parsed()) {
      const auto g = ctx.load(file_a);
      const auto h = ctx.load(file_b);
      const auto v = alpha_cospectral_check(g.graph, h.graph, Rational::parse(beta_text));
      return verdict(ctx, v.cospectral,
                     {{"cospectral", v.cospectral}, {"alpha_squared", v.alpha_squared.str()}, {"mode", to_string(v.mode)}},
                     "cospectral");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_input;
  }
  err << app.help();
  return exit_usage;
}

}  // namespace cospec::cli
