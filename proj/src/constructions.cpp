#include "cospec/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "cospec/errors.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

// ---------------------------------------------------------------------------
// Blowups
// ---------------------------------------------------------------------------

WeightedGraph blowup(const WeightedGraph& g, const Multiplicity& m) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (g.has_loop(u)) throw DomainError("blowup input has a loop at " + g.id(u));
  }
  if (!is_simple(g)) throw DomainError("blowup needs a simple graph (unit edge weights, no vertex weights)");
  for (const auto& [v, count] : m) {
    if (!g.contains(v)) throw GraphError("multiplicity given for unknown vertex " + v);
    if (count < 1) throw DomainError("multiplicity of " + v + " must be at least 1");
  }

  std::vector<std::vector<VertexId>> copies(g.order());
  std::vector<VertexSpec> vertices;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto it = m.find(g.id(u));
    const int count = it == m.end() ? 1 : it->second;
    for (int c = 1; c <= count; ++c) {
      copies[u].push_back(count == 1 ? g.id(u) : g.id(u) + "#" + std::to_string(c));
      vertices.push_back({copies[u].back(), Rational(0)});
    }
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    for (const auto& cu : copies[g.index_of(e.u)]) {
      for (const auto& cv : copies[g.index_of(e.v)]) edges.push_back({cu, cv, Rational(1)});
    }
  }
  return WeightedGraph::build(std::move(vertices), edges);
}

bool blowup_pair_valid(long a, long b, long s, long t, long s2, long t2) {
  if (a <= 0 || b <= 0 || s <= 0 || t <= 0 || s2 <= 0 || t2 <= 0) return false;
  return a * s + b * t == a * s2 + b * t2;
}

// ---------------------------------------------------------------------------
// Scaled isomorphism
// ---------------------------------------------------------------------------

namespace {

/// Vertex invariant under scaled isomorphism: (w(u), loop, sorted incident
/// weights), with G's side multiplied by alpha.
std::vector<Rational> profile(const WeightedGraph& g, std::size_t u, const Rational& factor) {
  std::vector<Rational> incident;
  for (const auto& [v, w] : g.neighbors(u)) {
    if (v != u) incident.push_back(w * factor);
  }
  std::sort(incident.begin(), incident.end());
  std::vector<Rational> key{g.vertex_weight(u) * factor, g.edge_weight(u, u) * factor};
  key.insert(key.end(), incident.begin(), incident.end());
  return key;
}

std::optional<Rational> forced_scale(const WeightedGraph& g, const WeightedGraph& h) {
  const Rational eg = total_edge_weight(g);
  const Rational eh = total_edge_weight(h);
  if (eg.is_zero() != eh.is_zero()) return std::nullopt;
  if (!eg.is_zero()) return eh / eg;
  Rational vg(0);
  Rational vh(0);
  for (std::size_t i = 0; i < g.order(); ++i) vg += g.vertex_weight(i);
  for (std::size_t i = 0; i < h.order(); ++i) vh += h.vertex_weight(i);
  if (vg.is_zero() != vh.is_zero()) return std::nullopt;
  if (vg.is_zero()) return Rational(1);
  return vh / vg;
}

}  // namespace

std::optional<ScaledIsomorphism> scaled_isomorphism(const WeightedGraph& g, const WeightedGraph& h) {
  if (g.order() != h.order()) return std::nullopt;
  const auto alpha = forced_scale(g, h);
  if (!alpha) return std::nullopt;
  const std::size_t n = g.order();

  std::vector<std::vector<std::size_t>> candidates(n);
  {
    std::vector<std::vector<Rational>> hp(n);
    for (std::size_t v = 0; v < n; ++v) hp[v] = profile(h, v, Rational(1));
    for (std::size_t u = 0; u < n; ++u) {
      const auto gp = profile(g, u, *alpha);
      for (std::size_t v = 0; v < n; ++v) {
        if (hp[v] == gp) candidates[u].push_back(v);
      }
      if (candidates[u].empty()) return std::nullopt;
    }
  }

  // Search order: most already-placed neighbours first, then fewest candidates.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  std::vector<int> placed_neighbours(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (placed[u]) continue;
      if (best == n || placed_neighbours[u] > placed_neighbours[best] ||
          (placed_neighbours[u] == placed_neighbours[best] && candidates[u].size() < candidates[best].size())) {
        best = u;
      }
    }
    placed[best] = true;
    order.push_back(best);
    for (const auto& [v, w] : g.neighbors(best)) ++placed_neighbours[v];
  }

  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> phi(n, unset);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const std::size_t u = order[depth];
    for (std::size_t v : candidates[u]) {
      if (used[v]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const std::size_t x = order[d];
        consistent = h.edge_weight(v, phi[x]) == *alpha * g.edge_weight(u, x);
      }
      if (!consistent) continue;
      phi[u] = v;
      used[v] = true;
      if (extend(depth + 1)) return true;
      used[v] = false;
      phi[u] = unset;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;

  ScaledIsomorphism out{{}, *alpha};
  for (std::size_t u = 0; u < n; ++u) out.map[g.id(u)] = h.id(phi[u]);
  return out;
}

Theorem3Report theorem3_report(const WeightedGraph& g, const WeightedGraph& h) {
  Theorem3Report r{false, coalesce_all(g), coalesce_all(h), std::nullopt};
  if (r.g.removed == r.h.removed) r.iso = scaled_isomorphism(r.g.graph, r.h.graph);
  r.holds = r.iso.has_value();
  if (r.holds && !cospectral(g, h, MatrixKind::normalized)) {
    throw InternalError("coalesced graphs are scaled-isomorphic but the originals are not cospectral");
  }
  return r;
}

bool theorem3_check(const WeightedGraph& g, const WeightedGraph& h) { return theorem3_report(g, h).holds; }

// ---------------------------------------------------------------------------
// Families of graphs cospectral with a subgraph
// ---------------------------------------------------------------------------

std::string_view to_string(FamilyVariant v) { return v == FamilyVariant::full ? "full" : "sub"; }

FamilyVariant parse_family_variant(std::string_view name) {
  if (name == "full") return FamilyVariant::full;
  if (name == "sub") return FamilyVariant::sub;
  throw ParseError("unknown family variant: " + std::string(name));
}

namespace {

void require_k(int k) {
  if (k < 1) throw DomainError("family parameter k must be at least 1, got " + std::to_string(k));
}

std::vector<VertexId> copy_names(const std::string& base, int count) {
  if (count == 1) return {base};
  std::vector<VertexId> out;
  for (int c = 1; c <= count; ++c) out.push_back(base + "#" + std::to_string(c));
  return out;
}

}  // namespace

WeightedGraph family_subgraph1(int k, FamilyVariant variant) {
  require_k(k);
  std::vector<EdgeSpec> edges{{"a", "m1"}, {"a", "m2"}, {"m1", "m2"}, {"m1", "b1"}, {"m2", "b2"}};
  if (variant == FamilyVariant::full) edges.push_back({"b1", "b2"});
  const auto base = WeightedGraph::build({{"a"}, {"m1"}, {"m2"}, {"b1"}, {"b2"}}, edges);
  return blowup(base, {{"a", k + 1}, {"b1", k}, {"b2", k}});
}

WeightedGraph family_subgraph2(int k, FamilyVariant variant) {
  require_k(k);
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  for (int j = 1; j <= k + 1; ++j) {
    const std::string t1 = "t1#" + std::to_string(j);
    const std::string t2 = "t2#" + std::to_string(j);
    vertices.push_back({t1});
    vertices.push_back({t2});
    edges.push_back({t1, t2});
    edges.push_back({t1, "u1"});
    edges.push_back({t2, "u2"});
  }
  vertices.push_back({"u1"});
  vertices.push_back({"u2"});
  edges.push_back({"u1", "u2"});
  const auto b1 = copy_names("b1", k);
  const auto b2 = copy_names("b2", k);
  for (const auto& v : b1) {
    vertices.push_back({v});
    edges.push_back({"u1", v});
  }
  for (const auto& v : b2) {
    vertices.push_back({v});
    edges.push_back({"u2", v});
  }
  if (variant == FamilyVariant::full) {
    for (const auto& x : b1) {
      for (const auto& y : b2) edges.push_back({x, y});
    }
  }
  return WeightedGraph::build(std::move(vertices), edges);
}

CoalesceResult family_coalesced(int family, int k, FamilyVariant variant) {
  if (family == 1) return coalesce_all(family_subgraph1(k, variant));
  if (family != 2) throw DomainError("family must be 1 or 2");

  const WeightedGraph original = family_subgraph2(k, variant);
  WeightedGraph g = coalesce_all(original).graph;
  for (int j = 2; j <= k + 1; ++j) {
    const std::string t1 = "t1#" + std::to_string(j);
    const std::string t2 = "t2#" + std::to_string(j);
    WitnessSets sets{{"t1#1", "t2#1"}, {t1, t2}, {}, {{"t1#1", t1}, {"t2#1", t2}}};
    for (const auto& v : g.vertices()) {
      if (v != "t1#1" && v != "t2#1" && v != t1 && v != t2) sets.v3.push_back(v);
    }
    g = quotient_graph(g, make_witness(g, std::move(sets)));
  }
  const std::size_t removed = original.order() - g.order();
  return {std::move(g), removed};
}

CharPoly family_charpoly_closed(int family, int k) {
  require_k(k);
  const Rational kk(k);
  const Rational k1 = kk + Rational(1);
  const Rational k1sq = k1 * k1;
  if (family == 1) {
    return CharPoly({Rational(0),
                     kk * (Rational(2) * kk + Rational(1)) / (Rational(4) * k1sq),
                     -Rational(1) / (Rational(4) * k1),
                     -(Rational(6) * kk * kk + Rational(8) * kk + Rational(3)) / (Rational(4) * k1sq),
                     Rational(0),
                     Rational(1)});
  }
  if (family == 2) {
    return CharPoly({-(kk * kk) / (Rational(16) * k1sq),
                     Rational(0),
                     kk * (Rational(13) * kk + Rational(8)) / (Rational(16) * k1sq),
                     Rational(0),
                     -(Rational(7) * kk * kk + Rational(10) * kk + Rational(4)) / (Rational(4) * k1sq),
                     Rational(0),
                     Rational(1)});
  }
  throw DomainError("family must be 1 or 2");
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

WeightedGraph comb(int n) {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= n; ++i) {
    const std::string c = "c" + std::to_string(i);
    const std::string p = "p" + std::to_string(i);
    vertices.push_back({c});
    vertices.push_back({p});
    edges.push_back({c, p});
    if (i > 1) edges.push_back({"c" + std::to_string(i - 1), c});
  }
  return WeightedGraph::build(std::move(vertices), edges);
}

WeightedGraph cycle(int n) {
  if (n < 3 || n > 26) throw DomainError("cycle length must be in 3..26");
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < n; ++i) {
    vertices.push_back({std::string(1, static_cast<char>('a' + i))});
    edges.push_back({std::string(1, static_cast<char>('a' + i)), std::string(1, static_cast<char>('a' + (i + 1) % n))});
  }
  return WeightedGraph::build(std::move(vertices), edges);
}

namespace {

Multiplicity around_hexagon(std::array<int, 6> m) {
  Multiplicity out;
  for (int i = 0; i < 6; ++i) out[std::string(1, static_cast<char>('a' + i))] = m[static_cast<std::size_t>(i)];
  return out;
}

/// Center "o" with three legs x1-x2-x3 (x in {x, y, z}); leg vertex
/// multiplicities (m, 1, m).
WeightedGraph spider_blowup(int mx, int my, int mz) {
  std::vector<VertexSpec> vertices{{"o"}};
  std::vector<EdgeSpec> edges;
  for (const char* leg : {"x", "y", "z"}) {
    const std::string l(leg);
    vertices.push_back({l + "1"});
    vertices.push_back({l + "2"});
    vertices.push_back({l + "3"});
    edges.push_back({"o", l + "1"});
    edges.push_back({l + "1", l + "2"});
    edges.push_back({l + "2", l + "3"});
  }
  const auto base = WeightedGraph::build(std::move(vertices), edges);
  return blowup(base, {{"x1", mx}, {"x3", mx}, {"y1", my}, {"y3", my}, {"z1", mz}, {"z3", mz}});
}

WeightedGraph alpha_left() {
  // Outer pentagon-on-a-rectangle with subdivided sides, plus three chords
  // and a spoke; vertices in reading order around the drawing.
  std::vector<VertexSpec> vertices;
  for (int i = 1; i <= 12; ++i) vertices.push_back({"v" + std::to_string(i)});
  // v1=(0,2) v2=(0,1) v3=(0,0) v4=(1,0) v5=(2,0) v6=(3,0) v7=(4,0)
  // v8=(4,1) v9=(4,2) v10=(2,3.5) v11=(2,2.5) v12=(2,1.5)
  const std::vector<EdgeSpec> edges{
      {"v3", "v4"}, {"v4", "v5"},   {"v5", "v6"},   {"v6", "v7"},  {"v7", "v8"},  {"v8", "v9"},
      {"v9", "v10"}, {"v10", "v1"}, {"v1", "v2"},   {"v2", "v3"},  {"v3", "v12"}, {"v12", "v7"},
      {"v1", "v6"},  {"v4", "v9"},  {"v12", "v11"}, {"v11", "v10"}};
  WeightedGraph g = WeightedGraph::build(std::move(vertices), edges);

  std::vector<double> expected{-1.0 - std::sqrt(3.0), 1.0 - std::sqrt(3.0), std::sqrt(3.0) - 1.0, 1.0 + std::sqrt(3.0)};
  for (int i = 0; i < 4; ++i) {
    expected.push_back(std::sqrt(2.0));
    expected.push_back(-std::sqrt(2.0));
  }
  std::sort(expected.begin(), expected.end());
  const auto got = eigenvalues_numeric(g, MatrixKind::adjacency);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(got[i] - expected[i]) > 1e-9) {
      throw InternalError("fig10_left transcription does not reproduce its printed adjacency spectrum");
    }
  }
  return g;
}

WeightedGraph alpha_right() {
  const auto k2 = WeightedGraph::build({{"x"}, {"y"}}, {{"x", "y"}});
  return disjoint_union(disjoint_union(disjoint_union(comb(3), k2), k2), k2);
}

const std::vector<std::pair<std::string, std::function<WeightedGraph()>>>& catalog() {
  static const std::vector<std::pair<std::string, std::function<WeightedGraph()>>> entries{
      {"fig1",
       [] {
         return WeightedGraph::build({{"a"}, {"b"}, {"c"}, {"d"}, {"e"}, {"f"}},
                                     {{"a", "d"},
                                      {"a", "e"},
                                      {"b", "d", Rational(2)},
                                      {"b", "e", Rational(2)},
                                      {"c", "d"},
                                      {"c", "e", Rational(2)},
                                      {"e", "f"}});
       }},
      {"fig2_left", [] { return blowup(cycle(6), around_hexagon({1, 3, 1, 3, 1, 3})); }},
      {"fig2_right", [] { return blowup(cycle(6), around_hexagon({2, 2, 2, 2, 2, 2})); }},
      {"fig3_left", [] { return blowup(cycle(6), around_hexagon({3, 6, 6, 3, 3, 3})); }},
      {"fig3_right", [] { return blowup(cycle(6), around_hexagon({4, 4, 8, 2, 4, 2})); }},
      {"fig4",
       [] {
         return WeightedGraph::build({{"a"}, {"b"}, {"c"}, {"d"}, {"e"}, {"a'"}, {"b'"}},
                                     {{"a", "b"},
                                      {"a", "c"},
                                      {"b", "d"},
                                      {"c", "d"},
                                      {"d", "e"},
                                      {"a'", "b'", Rational(2)},
                                      {"a'", "c", Rational(2)},
                                      {"b'", "d", Rational(2)}});
       }},
      {"fig5_Ghat",
       [] {
         return WeightedGraph::build(
             {{"a"}, {"b"}, {"c"}, {"d"}, {"e"}},
             {{"a", "b", Rational(3)}, {"a", "c", Rational(3)}, {"b", "d", Rational(3)}, {"c", "d"}, {"d", "e"}});
       }},
      {"fig5_H1hat",
       [] { return WeightedGraph::build({{"a", Rational(1)}, {"b", Rational(1)}}, {{"a", "b"}}); }},
      {"fig5_H2hat",
       [] {
         return WeightedGraph::build({{"a'", Rational(2)}, {"b'", Rational(2)}}, {{"a'", "b'", Rational(2)}});
       }},
      {"fig6_left", [] { return spider_blowup(2, 4, 5); }},
      {"fig6_right", [] { return spider_blowup(1, 3, 7); }},
      {"fig8_left", [] { return family_subgraph2(2, FamilyVariant::full); }},
      {"fig8_right", [] { return family_subgraph2(2, FamilyVariant::sub); }},
      {"fig10_left", alpha_left},
      {"fig10_right", alpha_right},
  };
  return entries;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, make] : catalog()) names.push_back(name);
  return names;
}

WeightedGraph fixture(std::string_view name) {
  for (const auto& [entry, make] : catalog()) {
    if (entry == name) return make();
  }
  throw DomainError("unknown fixture: " + std::string(name));
}

}  // namespace cospec
