#include "cospec/twins.hpp"

#include <cmath>
#include <set>
#include <string>
#include <unordered_map>

#include "cospec/errors.hpp"
#include "cospec/jacobi.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

namespace {

/// Accumulates pairs (a, b) that must satisfy alpha * a = b for one alpha > 0.
class ScaleFit {
 public:
  void add(const Rational& a, const Rational& b) {
    if (!consistent_ || (a.is_zero() && b.is_zero())) return;
    if (a.is_zero() || b.is_zero()) {
      consistent_ = false;
      return;
    }
    const Rational ratio = b / a;
    if (!alpha_) {
      alpha_ = ratio;
    } else if (*alpha_ != ratio) {
      consistent_ = false;
    }
  }

  std::optional<Rational> result() const {
    if (!consistent_ || !alpha_ || alpha_->sign() <= 0) return std::nullopt;
    return alpha_;
  }

 private:
  std::optional<Rational> alpha_;
  bool consistent_ = true;
};

bool isolated(const WeightedGraph& g, std::size_t i) { return g.neighbors(i).empty(); }

std::optional<Rational> twin_check_indices(const WeightedGraph& g, std::size_t u, std::size_t v) {
  if (!g.edge_weight(u, v).is_zero() || isolated(g, u) || isolated(g, v)) return std::nullopt;
  ScaleFit fit;
  fit.add(g.vertex_weight(u), g.vertex_weight(v));
  fit.add(g.edge_weight(u, u), g.edge_weight(v, v));
  for (const auto& [t, w] : g.neighbors(u)) {
    if (t != u && t != v) fit.add(w, g.edge_weight(v, t));
  }
  for (const auto& [t, w] : g.neighbors(v)) {
    if (t != u && t != v) fit.add(g.edge_weight(u, t), w);
  }
  return fit.result();
}

enum class Part { none, v1, v2, v3 };

struct PartitionIndex {
  std::vector<Part> part;
  std::vector<std::size_t> image;    // pi on V1 indices
  std::vector<std::size_t> preimage; // pi^-1 on V2 indices
};

PartitionIndex index_partition(const WeightedGraph& g, const WitnessSets& sets) {
  constexpr auto npos = static_cast<std::size_t>(-1);
  PartitionIndex idx{std::vector<Part>(g.order(), Part::none), std::vector<std::size_t>(g.order(), npos),
                     std::vector<std::size_t>(g.order(), npos)};
  const auto assign = [&](const std::vector<VertexId>& vs, Part p) {
    for (const auto& v : vs) {
      if (!g.contains(v)) throw DomainError("witness names unknown vertex " + v);
      auto& slot = idx.part[g.index_of(v)];
      if (slot != Part::none) throw DomainError("witness sets are not a partition: " + v + " appears twice");
      slot = p;
    }
  };
  assign(sets.v1, Part::v1);
  assign(sets.v2, Part::v2);
  assign(sets.v3, Part::v3);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (idx.part[i] == Part::none) throw DomainError("witness sets are not a partition: " + g.id(i) + " is missing");
  }
  if (sets.v1.empty()) throw DomainError("witness V1 is empty");
  if (sets.pi.size() != sets.v1.size() || sets.v1.size() != sets.v2.size()) {
    throw DomainError("pi is not a bijection V1 -> V2");
  }
  for (const auto& [from, to] : sets.pi) {
    if (!g.contains(from) || !g.contains(to)) throw DomainError("pi is not a bijection V1 -> V2");
    const std::size_t a = g.index_of(from);
    const std::size_t b = g.index_of(to);
    if (idx.part[a] != Part::v1 || idx.part[b] != Part::v2 || idx.preimage[b] != npos) {
      throw DomainError("pi is not a bijection V1 -> V2");
    }
    idx.image[a] = b;
    idx.preimage[b] = a;
  }
  return idx;
}

std::optional<Rational> fit_twin_subgraphs(const WeightedGraph& g, const PartitionIndex& idx) {
  ScaleFit fit;
  for (std::size_t u = 0; u < g.order(); ++u) {
    if (idx.part[u] != Part::v1) continue;
    const std::size_t pu = idx.image[u];
    fit.add(g.vertex_weight(u), g.vertex_weight(pu));
    for (const auto& [x, w] : g.neighbors(u)) {
      switch (idx.part[x]) {
        case Part::v2:
          return std::nullopt;
        case Part::v1:
          fit.add(w, g.edge_weight(pu, idx.image[x]));
          break;
        default:
          fit.add(w, g.edge_weight(pu, x));
      }
    }
    for (const auto& [x, w] : g.neighbors(pu)) {
      switch (idx.part[x]) {
        case Part::v1:
          return std::nullopt;
        case Part::v2:
          fit.add(g.edge_weight(u, idx.preimage[x]), w);
          break;
        default:
          fit.add(g.edge_weight(u, x), w);
      }
    }
  }
  return fit.result();
}

void require_verified(const WeightedGraph& g, const TwinSubgraphWitness& w) {
  const auto alpha = verify_twin_subgraphs(g, w.sets);
  if (!alpha || *alpha != w.alpha) throw DomainError("twin-subgraph witness does not verify on this graph");
}

double value_at(const HarmonicVector& y, const VertexId& v) {
  const auto it = y.values.find(v);
  if (it == y.values.end()) throw DomainError("harmonic vector has no value at vertex " + v);
  return it->second;
}

}  // namespace

std::optional<Rational> twin_check(const WeightedGraph& g, const VertexId& u, const VertexId& v) {
  const std::size_t iu = g.index_of(u);
  const std::size_t iv = g.index_of(v);
  if (iu == iv) throw GraphError("twin_check needs two distinct vertices, got " + u + " twice");
  return twin_check_indices(g, iu, iv);
}

std::vector<TwinClass> twin_classes(const WeightedGraph& g) {
  std::vector<TwinClass> classes;
  std::vector<bool> assigned(g.order(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (assigned[i] || isolated(g, i)) continue;
    TwinClass c{{g.id(i)}, {Rational(1)}};
    assigned[i] = true;
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      if (assigned[j] || isolated(g, j)) continue;
      if (auto alpha = twin_check_indices(g, i, j)) {
        c.members.push_back(g.id(j));
        c.scales.push_back(*alpha);
        assigned[j] = true;
      }
    }
    for (std::size_t p = 0; p < c.members.size(); ++p) {
      for (std::size_t q = p + 1; q < c.members.size(); ++q) {
        const auto alpha = twin_check(g, c.members[p], c.members[q]);
        if (!alpha || *alpha != c.scales[q] / c.scales[p]) {
          throw InternalError("twin relation not transitive on " + c.members[p] + ", " + c.members[q]);
        }
      }
    }
    classes.push_back(std::move(c));
  }
  return classes;
}

WeightedGraph coalesce_class(const WeightedGraph& g, const TwinClass& c) {
  if (c.members.size() < 2) throw DomainError("coalescing needs a twin class with at least two members");
  if (c.scales.size() != c.members.size() || c.scales.front() != Rational(1)) {
    throw DomainError("twin class scales do not match its members");
  }
  std::vector<bool> in_class(g.order(), false);
  for (const auto& m : c.members) {
    const std::size_t i = g.index_of(m);
    if (in_class[i]) throw DomainError("twin class repeats vertex " + m);
    in_class[i] = true;
  }
  for (std::size_t k = 1; k < c.members.size(); ++k) {
    const auto alpha = twin_check(g, c.members.front(), c.members[k]);
    if (!alpha || *alpha != c.scales[k]) {
      throw DomainError("not a twin class: " + c.members.front() + " and " + c.members[k]);
    }
  }

  VertexId merged;
  Rational merged_weight(0);
  for (const auto& m : c.members) {
    merged += (merged.empty() ? "" : "+") + m;
    merged_weight += g.vertex_weight(m);
  }
  const std::size_t anchor = g.index_of(c.members.front());

  std::vector<VertexSpec> vertices;
  std::vector<std::size_t> new_index(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (in_class[i] && i != anchor) continue;
    new_index[i] = vertices.size();
    vertices.push_back(i == anchor ? VertexSpec{merged, merged_weight} : VertexSpec{g.id(i), g.vertex_weight(i)});
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (in_class[i]) new_index[i] = new_index[anchor];
  }

  std::map<std::pair<std::size_t, std::size_t>, Rational> summed;
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (auto it = g.neighbors(u).lower_bound(u); it != g.neighbors(u).end(); ++it) {
      summed[std::minmax(new_index[u], new_index[it->first])] += it->second;
    }
  }
  std::vector<EdgeSpec> edges;
  edges.reserve(summed.size());
  for (const auto& [key, w] : summed) edges.push_back({vertices[key.first].id, vertices[key.second].id, w});
  return WeightedGraph::build(std::move(vertices), edges);
}

CoalesceResult coalesce_all(const WeightedGraph& g) {
  CoalesceResult out{g, 0};
  while (true) {
    bool merged = false;
    for (const auto& c : twin_classes(out.graph)) {
      if (c.members.size() < 2) continue;
      out.graph = coalesce_class(out.graph, c);
      merged = true;
    }
    if (!merged) break;
  }
  out.removed = g.order() - out.graph.order();
  return out;
}

std::optional<Rational> verify_twin_subgraphs(const WeightedGraph& g, const WitnessSets& sets) {
  return fit_twin_subgraphs(g, index_partition(g, sets));
}

TwinSubgraphWitness make_witness(const WeightedGraph& g, WitnessSets sets) {
  const auto alpha = verify_twin_subgraphs(g, sets);
  if (!alpha) throw DomainError("the given sets do not certify twin subgraphs");
  return {std::move(sets), *alpha};
}

WeightedGraph quotient_graph(const WeightedGraph& g, const TwinSubgraphWitness& w) {
  require_verified(g, w);
  const PartitionIndex idx = index_partition(g, w.sets);
  const Rational factor = Rational(1) + w.alpha;

  std::vector<VertexSpec> vertices;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (idx.part[i] == Part::v2) continue;
    vertices.push_back({g.id(i), idx.part[i] == Part::v1 ? g.vertex_weight(i) * factor : g.vertex_weight(i)});
  }
  std::vector<EdgeSpec> edges;
  for (auto e : g.edges()) {
    const Part pu = idx.part[g.index_of(e.u)];
    const Part pv = idx.part[g.index_of(e.v)];
    if (pu == Part::v2 || pv == Part::v2) continue;
    if (pu == Part::v1 || pv == Part::v1) e.weight *= factor;
    edges.push_back(std::move(e));
  }
  return WeightedGraph::build(std::move(vertices), edges);
}

WeightedGraph hat_subgraph(const WeightedGraph& g, const TwinSubgraphWitness& w, int side) {
  if (side != 1 && side != 2) throw DomainError("hat subgraph side must be 1 or 2");
  require_verified(g, w);
  const PartitionIndex idx = index_partition(g, w.sets);
  const auto& keep = side == 1 ? w.sets.v1 : w.sets.v2;
  const WeightedGraph induced = restrict(g, keep);

  auto vertices = induced.vertex_specs();
  for (auto& v : vertices) {
    for (const auto& [t, wt] : g.neighbors(g.index_of(v.id))) {
      if (idx.part[t] == Part::v3) v.weight += wt;
    }
  }
  return WeightedGraph::build(std::move(vertices), induced.edges());
}

bool decomposition_check(const WeightedGraph& g, const TwinSubgraphWitness& w) {
  const CharPoly whole = char_poly(g, MatrixKind::transition);
  const CharPoly quotient = char_poly(quotient_graph(g, w), MatrixKind::transition);
  const CharPoly hat = char_poly(hat_subgraph(g, w, 1), MatrixKind::transition);
  return whole == quotient * hat;
}

std::vector<HarmonicVector> harmonic_eigenvectors(const WeightedGraph& g) {
  if (g.order() == 0) return {};
  const auto eig = jacobi_eigen(normalized_laplacian(g));
  const auto d = degrees(g);
  std::vector<HarmonicVector> out(g.order());
  for (std::size_t k = 0; k < g.order(); ++k) {
    out[k].lambda = eig.values(static_cast<Eigen::Index>(k));
    for (std::size_t u = 0; u < g.order(); ++u) {
      out[k].values[g.id(u)] = eig.vectors(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(k)) /
                               std::sqrt(d[u].to_double());
    }
  }
  return out;
}

double harmonic_residual(const WeightedGraph& g, const HarmonicVector& y) {
  double worst = 0.0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    double lhs = 0.0;
    for (const auto& [v, w] : g.neighbors(u)) lhs += w.to_double() * value_at(y, g.id(v));
    const double rhs = (1.0 - y.lambda) * degree(g, u).to_double() * value_at(y, g.id(u));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

HarmonicVector lift_from_quotient(const TwinSubgraphWitness& w, const HarmonicVector& xhat) {
  HarmonicVector x;
  x.lambda = xhat.lambda;
  for (const auto& v : w.sets.v1) x.values[v] = value_at(xhat, v);
  for (const auto& v : w.sets.v3) x.values[v] = value_at(xhat, v);
  for (const auto& [from, to] : w.sets.pi) x.values[to] = value_at(xhat, from);
  return x;
}

HarmonicVector lift_from_hat(const TwinSubgraphWitness& w, const HarmonicVector& yhat) {
  HarmonicVector y;
  y.lambda = yhat.lambda;
  const double alpha = w.alpha.to_double();
  for (const auto& [from, to] : w.sets.pi) {
    const double value = value_at(yhat, from);
    y.values[from] = alpha * value;
    y.values[to] = -value;
  }
  for (const auto& v : w.sets.v3) y.values[v] = 0.0;
  return y;
}

double d_inner_product(const WeightedGraph& g, const HarmonicVector& y, const HarmonicVector& z) {
  double sum = 0.0;
  for (std::size_t u = 0; u < g.order(); ++u) {
    sum += degree(g, u).to_double() * value_at(y, g.id(u)) * value_at(z, g.id(u));
  }
  return sum;
}

}  // namespace cospec
