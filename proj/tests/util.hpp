#pragma once

#include <random>

#include "polyac/polyac.hpp"

// Shared deterministic generators for the property tests.

namespace testutil {

using namespace polyac;

inline std::mt19937_64 rng(std::uint64_t seed = 20240901) {
  return std::mt19937_64(seed);
}

inline Rational random_rational(std::mt19937_64& g, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return Rational(num(g), den(g));
}

inline FieldElem random_field(std::mt19937_64& g, int span = 5) {
  return FieldElem(random_rational(g, span));
}

inline std::vector<FieldElem> random_point(std::mt19937_64& g, int n,
                                           int span = 5) {
  std::vector<FieldElem> p;
  for (int i = 0; i < n; ++i) p.push_back(random_field(g, span));
  return p;
}

inline Poly random_poly(std::mt19937_64& g, int nvars, int maxdeg,
                        int span = 5) {
  Poly p(nvars);
  for (const auto& m : monomials_up_to(nvars, maxdeg)) {
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(g) == 0) continue;  // keep it sparse-ish
    p.add_term(m, random_field(g, span));
  }
  return p;
}

inline PolyMap random_poly_map(std::mt19937_64& g, int nvars, int dim,
                               int maxdeg, int span = 5) {
  std::vector<Poly> comps;
  for (int i = 0; i < dim; ++i) comps.push_back(random_poly(g, nvars, maxdeg, span));
  return PolyMap(std::move(comps));
}

/// Random circuit DAG: edges only run from lower to higher node index.
inline CircuitGraph random_circuit(std::mt19937_64& g, int max_nodes = 12) {
  std::uniform_int_distribution<int> nn(3, max_nodes);
  const int n = nn(g);
  std::vector<CircuitGraph::Gate> nodes;
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> var(0, 2);
  for (int i = 0; i < n; ++i) {
    CircuitGraph::Gate gate;
    gate.id = "n" + std::to_string(i);
    const int k = i < 2 ? 0 : kind(g);  // keep some sources around
    switch (k) {
      case 0:
        gate.kind = CircuitGraph::GateKind::InputVar;
        gate.var = var(g);
        break;
      case 1: gate.kind = CircuitGraph::GateKind::ConstOne; break;
      case 2: gate.kind = CircuitGraph::GateKind::Sum; break;
      default: gate.kind = CircuitGraph::GateKind::Product; break;
    }
    nodes.push_back(std::move(gate));
  }
  std::vector<CircuitGraph::Edge> edges;
  std::uniform_int_distribution<int> coin(0, 2);
  for (int j = 0; j < n; ++j) {
    const auto k = nodes[j].kind;
    if (k == CircuitGraph::GateKind::InputVar ||
        k == CircuitGraph::GateKind::ConstOne)
      continue;
    for (int i = 0; i < j; ++i)
      if (coin(g) == 0) edges.push_back({i, j});
  }
  std::vector<int> outputs;
  std::uniform_int_distribution<int> out(0, n - 1);
  outputs.push_back(out(g));
  if (coin(g) == 0) outputs.push_back(out(g));
  return CircuitGraph(std::move(nodes), std::move(edges), std::move(outputs), 3);
}

inline std::vector<FieldElem> random_labels(std::mt19937_64& g,
                                            const CircuitGraph& c) {
  return random_point(g, c.size(), 3);
}

/// Rank oracle: a 5-tuple in F^2 is non-elusive for (s=1, r=1) iff the
/// points fit on an affine line (or a single point).
inline bool collinear(const std::vector<std::vector<FieldElem>>& pts) {
  Matrix<FieldElem> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i)
    diffs.push_back({pts[i][0] - pts[0][0], pts[i][1] - pts[0][1]});
  return rank(diffs) <= 1;
}

}  // namespace testutil
