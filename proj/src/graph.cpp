#include "cospec/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cospec/errors.hpp"

namespace cospec {

namespace {

void validate_id(const VertexId& id) {
  if (id.empty()) throw GraphError("empty vertex id");
  if (id.front() == '#') throw GraphError("vertex id may not start with '#': " + id);
  for (char c : id) {
    if (std::isspace(static_cast<unsigned char>(c))) throw GraphError("vertex id contains whitespace: '" + id + "'");
  }
}

}  // namespace

WeightedGraph WeightedGraph::build(std::vector<VertexSpec> vertices, const std::vector<EdgeSpec>& edges) {
  WeightedGraph g;
  g.ids_.reserve(vertices.size());
  g.vertex_weight_.reserve(vertices.size());
  for (auto& [id, weight] : vertices) {
    validate_id(id);
    if (weight.sign() < 0) throw GraphError("negative vertex weight at " + id + ": " + weight.str());
    if (!g.index_.emplace(id, g.ids_.size()).second) throw GraphError("duplicate vertex id: " + id);
    g.ids_.push_back(std::move(id));
    g.vertex_weight_.push_back(std::move(weight));
  }
  g.adjacency_.resize(g.ids_.size());

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    const auto iu = g.index_.find(e.u);
    const auto iv = g.index_.find(e.v);
    if (iu == g.index_.end()) throw GraphError("edge endpoint is not a vertex: " + e.u);
    if (iv == g.index_.end()) throw GraphError("edge endpoint is not a vertex: " + e.v);
    if (e.weight.sign() < 0) throw GraphError("negative edge weight on " + e.u + "-" + e.v + ": " + e.weight.str());
    const auto key = std::minmax(iu->second, iv->second);
    if (!seen.insert(key).second) throw GraphError("duplicate edge: " + e.u + "-" + e.v);
    if (e.weight.is_zero()) continue;
    g.adjacency_[key.first][key.second] = e.weight;
    g.adjacency_[key.second][key.first] = e.weight;
  }
  return g;
}

std::size_t WeightedGraph::index_of(const VertexId& v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) throw GraphError("unknown vertex: " + v);
  return it->second;
}

Rational WeightedGraph::edge_weight(std::size_t u, std::size_t v) const {
  const auto& nb = adjacency_.at(u);
  const auto it = nb.find(v);
  return it == nb.end() ? Rational(0) : it->second;
}

std::vector<EdgeSpec> WeightedGraph::edges() const {
  std::vector<EdgeSpec> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (auto it = adjacency_[u].lower_bound(u); it != adjacency_[u].end(); ++it) {
      out.push_back({ids_[u], ids_[it->first], it->second});
    }
  }
  return out;
}

std::vector<VertexSpec> WeightedGraph::vertex_specs() const {
  std::vector<VertexSpec> out;
  out.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) out.push_back({ids_[i], vertex_weight_[i]});
  return out;
}

Rational degree(const WeightedGraph& g, std::size_t u) {
  Rational d = g.vertex_weight(u);
  for (const auto& [v, w] : g.neighbors(u)) d += w;
  return d;
}

Rational degree(const WeightedGraph& g, const VertexId& u) { return degree(g, g.index_of(u)); }

std::vector<Rational> degrees(const WeightedGraph& g) {
  std::vector<Rational> d;
  d.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) d.push_back(degree(g, i));
  return d;
}

WeightedGraph scale(const WeightedGraph& g, const Rational& alpha) {
  if (alpha.sign() <= 0) throw DomainError("scaling factor must be positive, got " + alpha.str());
  auto vertices = g.vertex_specs();
  for (auto& v : vertices) v.weight *= alpha;
  auto edges = g.edges();
  for (auto& e : edges) e.weight *= alpha;
  return WeightedGraph::build(std::move(vertices), edges);
}

WeightedGraph restrict(const WeightedGraph& g, std::span<const VertexId> keep) {
  std::vector<bool> kept(g.order(), false);
  for (const auto& v : keep) kept[g.index_of(v)] = true;
  std::vector<VertexSpec> vertices;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (kept[i]) vertices.push_back({g.id(i), g.vertex_weight(i)});
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    if (kept[g.index_of(e.u)] && kept[g.index_of(e.v)]) edges.push_back(e);
  }
  return WeightedGraph::build(std::move(vertices), edges);
}

WeightedGraph disjoint_union(const WeightedGraph& g, const WeightedGraph& h) {
  const auto collides = [&](const std::string& prefix) {
    return std::any_of(h.vertices().begin(), h.vertices().end(),
                       [&](const VertexId& v) { return g.contains(prefix + v); });
  };
  std::string prefix;
  if (collides(prefix)) {
    prefix = "h.";
    while (collides(prefix)) prefix.insert(0, "h");
  }
  auto vertices = g.vertex_specs();
  for (auto v : h.vertex_specs()) {
    v.id = prefix + v.id;
    vertices.push_back(std::move(v));
  }
  auto edges = g.edges();
  for (auto e : h.edges()) {
    e.u = prefix + e.u;
    e.v = prefix + e.v;
    edges.push_back(std::move(e));
  }
  return WeightedGraph::build(std::move(vertices), edges);
}

std::size_t edge_count(const WeightedGraph& g) {
  std::size_t count = 0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto& nb = g.neighbors(u);
    count += static_cast<std::size_t>(std::distance(nb.lower_bound(u), nb.end()));
  }
  return count;
}

Rational total_edge_weight(const WeightedGraph& g) {
  Rational total(0);
  for (const auto& e : g.edges()) total += e.weight;
  return total;
}

bool is_simple(const WeightedGraph& g) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (!g.vertex_weight(u).is_zero() || g.has_loop(u)) return false;
    for (const auto& [v, w] : g.neighbors(u)) {
      if (w != Rational(1)) return false;
    }
  }
  return true;
}

WeightedGraph reorder(const WeightedGraph& g, std::span<const VertexId> order) {
  if (order.size() != g.order()) throw GraphError("reorder: not a permutation of the vertex set");
  std::vector<VertexSpec> vertices;
  std::set<VertexId> seen;
  for (const auto& v : order) {
    if (!seen.insert(v).second) throw GraphError("reorder: repeated vertex " + v);
    vertices.push_back({v, g.vertex_weight(v)});
  }
  return WeightedGraph::build(std::move(vertices), g.edges());
}

}  // namespace cospec
