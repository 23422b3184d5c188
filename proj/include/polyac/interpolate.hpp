#pragma once

#include <vector>

#include "polyac/poly.hpp"

namespace polyac {

/// The lattice { (i_1,...,i_s) in N^s : sum i_j <= r }, lex-ascending.
struct SimplexLattice {
  int s = 0;
  int r = 0;
  std::vector<Monomial> points;
};

inline SimplexLattice simplex_lattice(int s, int r) {
  if (s < 1 || r < 0) throw InvalidParams("simplex_lattice: need s >= 1, r >= 0");
  return {s, r, monomials_up_to(s, r)};
}

/// Values in F^m attached to the lattice points, in lattice order.
struct ValueTable {
  SimplexLattice lattice;
  std::vector<std::vector<FieldElem>> values;

  int m() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }

  void validate() const {
    if (values.size() != lattice.points.size())
      throw LengthMismatch("value table: count != lattice size");
    for (const auto& v : values)
      if (v.size() != values[0].size())
        throw DimensionMismatch("value table: inconsistent target dimension");
  }
};

namespace detail {

inline std::vector<FieldElem> as_field_point(const Monomial& m) {
  std::vector<FieldElem> p;
  p.reserve(m.size());
  for (int e : m) p.emplace_back(Rational(e));
  return p;
}

/// Scalar interpolation on the simplex lattice by recursion on the last
/// variable: f = sum_k X_s (X_s - 1) ... (X_s - k + 1) P^{r-k}(X_1..X_{s-1}).
/// Substituting X_s = k turns the system unitriangular with pivots k!.
inline Poly interp_scalar(int s, int r,
                          const std::vector<FieldElem>& values,
                          const std::vector<Monomial>& lattice) {
  if (s == 0) return Poly::constant(0, values.at(0));

  // slice the table by the last coordinate
  std::map<Monomial, FieldElem> table;
  for (std::size_t i = 0; i < lattice.size(); ++i) table[lattice[i]] = values[i];

  std::vector<Poly> layers;  // layers[k] = P^{r-k}, in s-1 variables
  Poly result(s);
  for (int k = 0; k <= r; ++k) {
    const auto sub = monomials_up_to(s - 1, r - k);
    std::vector<FieldElem> rhs;
    rhs.reserve(sub.size());
    for (const auto& pt : sub) {
      Monomial full = pt;
      full.push_back(k);
      FieldElem b = table.at(full);
      // subtract the already-known layers, with falling-factorial weights
      FieldElem weight(1);
      const auto eval_pt = as_field_point(pt);
      for (int j = 0; j < k; ++j) {
        if (j > 0) weight = weight * FieldElem(Rational(k - j + 1));
        const FieldElem w = j == 0 ? FieldElem(1)
                                   : weight;
        b -= w * layers[j].eval(eval_pt);
      }
      rhs.push_back(b / FieldElem(factorial(k)));
    }
    Poly layer = interp_scalar(s - 1, r - k, rhs, sub);
    layers.push_back(layer);
    // psi_k in the last variable
    Poly psi = Poly::constant(s, FieldElem(1));
    for (int j = 0; j < k; ++j)
      psi *= Poly::variable(s, s - 1) - Poly::constant(s, FieldElem(Rational(j)));
    result += psi * layer.shifted(s, 0);
  }
  return result;
}

}  // namespace detail

/// Unique f in Pol^r(F^s, F^m) with f(q) = table value at every lattice
/// point q, built componentwise.  Exact; always solvable.
inline PolyMap interpolate(const ValueTable& table) {
  table.validate();
  const int s = table.lattice.s, r = table.lattice.r, m = table.m();
  std::vector<Poly> comps;
  comps.reserve(m);
  for (int c = 0; c < m; ++c) {
    std::vector<FieldElem> vals;
    vals.reserve(table.values.size());
    for (const auto& v : table.values) vals.push_back(v[c]);
    comps.push_back(detail::interp_scalar(s, r, vals, table.lattice.points));
  }
  return PolyMap(std::move(comps));
}

/// Homogeneous degree-r map on F^{s+1} with f(q, 1) = table value.
inline PolyMap interpolate_homogeneous(const ValueTable& table) {
  return homogenize(interpolate(table), table.lattice.r);
}

/// The linear isomorphism F^{m b(s,r)} -> Pol^r(F^s, F^m); the flat vector
/// lists the m target coordinates per lattice point, in lattice order.
inline PolyMap iso_values_to_poly(const std::vector<FieldElem>& flat, int s,
                                  int r, int m) {
  ValueTable t;
  t.lattice = simplex_lattice(s, r);
  if (flat.size() != t.lattice.points.size() * static_cast<std::size_t>(m))
    throw LengthMismatch("iso_values_to_poly: flat length != m * lattice size");
  for (std::size_t i = 0; i < t.lattice.points.size(); ++i)
    t.values.emplace_back(flat.begin() + i * m, flat.begin() + (i + 1) * m);
  return interpolate(t);
}

/// Inverse of iso_values_to_poly: evaluation on the lattice, flattened.
inline std::vector<FieldElem> poly_to_lattice_values(const PolyMap& f, int r) {
  const auto lattice = simplex_lattice(f.nvars(), r);
  std::vector<FieldElem> flat;
  flat.reserve(lattice.points.size() * f.dim());
  for (const auto& pt : lattice.points)
    for (auto& v : f.eval(detail::as_field_point(pt))) flat.push_back(std::move(v));
  return flat;
}

}  // namespace polyac
