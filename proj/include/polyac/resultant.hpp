#pragma once

#include <string>
#include <vector>

#include "polyac/linalg.hpp"
#include "polyac/poly.hpp"

namespace polyac {

/// One-sided image test: value != 0 certifies b off the image of f;
/// value == 0 is inconclusive.
struct ResultantCertificate {
  std::string method;  // "sylvester" | "macaulay"
  FieldElem value;
  std::size_t matrix_dim = 0;
  std::size_t minor_dim = 0;

  bool certifies_off_image() const { return !value.is_zero(); }
};

namespace resdetail {

/// Coefficient ring element attached to an X-monomial: either a scalar
/// (value form) or a polynomial in the Y variables (symbolic form).
template <class C>
using XPoly = std::map<Monomial, C>;

inline bool entry_is_zero(const FieldElem& c) { return c.is_zero(); }
inline bool entry_is_zero(const Poly& c) { return c.is_zero(); }

template <class C>
int xdegree(const XPoly<C>& f) {
  int d = 0;
  for (const auto& [m, c] : f)
    if (!entry_is_zero(c)) d = std::max(d, total_degree(m));
  return d;
}

/// Exact quotient p / q; throws when the division is not exact.
inline Poly exact_div(Poly p, const Poly& q) {
  if (q.is_zero()) throw DivisionByZero();
  const MonomialOrder order = MonomialOrder::lex();
  Poly h(p.nvars());
  while (!p.is_zero()) {
    const auto& [pm, pc] = p.leading_term(order);
    const auto& [qm, qc] = q.leading_term(order);
    if (!divides(qm, pm))
      throw DegenerateSystem("inexact polynomial division in resultant");
    const Monomial tm = mono_div(pm, qm);
    const FieldElem tc = pc / qc;
    h.add_term(tm, tc);
    p -= q * Poly::term(p.nvars(), tm, tc);
  }
  return h;
}

inline FieldElem det_entries(Matrix<FieldElem> m) {
  return determinant(std::move(m));
}

/// Fraction-free Bareiss elimination; divisions are exact by construction.
inline Poly det_entries(Matrix<Poly> a) {
  const std::size_t n = a.size();
  if (n == 0) return Poly::constant(0, FieldElem(1));
  const int nv = a[0][0].nvars();
  bool negate = false;
  Poly prev = Poly::constant(nv, FieldElem(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return Poly(nv);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  Poly det = a[n - 1][n - 1];
  return negate ? -det : det;
}

/// Row/column layout of the classical Macaulay matrix for k homogeneous
/// forms in k variables of the given degrees.
struct MacaulayShape {
  int D = 0;
  std::vector<Monomial> monos;   // degree-D monomials, lex-ascending
  std::vector<int> assigned;     // smallest i with x_i^{d_i} | mono
  std::vector<char> nonreduced;  // divisible by x_i^{d_i} for >= 2 i
};

inline MacaulayShape macaulay_shape(int k, const std::vector<int>& deg) {
  MacaulayShape sh;
  sh.D = 1;
  for (int d : deg) sh.D += d - 1;
  for (const auto& m : monomials_up_to(k, sh.D))
    if (total_degree(m) == sh.D) sh.monos.push_back(m);
  for (const auto& m : sh.monos) {
    int first = -1, count = 0;
    for (int i = 0; i < k; ++i)
      if (m[i] >= deg[i]) {
        ++count;
        if (first < 0) first = i;
      }
    if (first < 0) throw DegenerateSystem("macaulay: unassignable monomial");
    sh.assigned.push_back(first);
    sh.nonreduced.push_back(count >= 2);
  }
  return sh;
}

/// Macaulay determinant quotient det(M)/det(M') for homogeneous forms
/// given as X-monomial -> coefficient maps.  C is the coefficient ring.
template <class C>
C macaulay_quotient(const std::vector<XPoly<C>>& forms,
                    const std::vector<int>& deg, const C& zero,
                    std::size_t& dim_out, std::size_t& minor_out) {
  const int k = static_cast<int>(forms.size());
  const MacaulayShape sh = macaulay_shape(k, deg);
  const std::size_t n = sh.monos.size();
  std::map<Monomial, std::size_t> col;
  for (std::size_t j = 0; j < n; ++j) col[sh.monos[j]] = j;

  Matrix<C> big(n, std::vector<C>(n, zero));
  for (std::size_t i = 0; i < n; ++i) {
    const int fi = sh.assigned[i];
    Monomial shift = sh.monos[i];
    shift[fi] -= deg[fi];
    for (const auto& [m, c] : forms[fi]) {
      if (entry_is_zero(c)) continue;
      big[i][col.at(mono_mul(m, shift))] = c;
    }
  }
  std::vector<std::size_t> sub;
  for (std::size_t i = 0; i < n; ++i)
    if (sh.nonreduced[i]) sub.push_back(i);
  Matrix<C> minor(sub.size(), std::vector<C>(sub.size(), zero));
  for (std::size_t a = 0; a < sub.size(); ++a)
    for (std::size_t b = 0; b < sub.size(); ++b)
      minor[a][b] = big[sub[a]][sub[b]];

  dim_out = n;
  minor_out = sub.size();
  if (sub.empty()) return det_entries(std::move(big));  // empty minor: det 1
  const C denom = det_entries(std::move(minor));
  if (entry_is_zero(denom))
    throw DegenerateSystem("macaulay: vanishing minor determinant");
  const C numer = det_entries(std::move(big));
  if constexpr (std::is_same_v<C, FieldElem>) {
    return numer / denom;
  } else {
    return entry_is_zero(numer) ? numer : exact_div(numer, denom);
  }
}

/// Homogenizes an affine X-polynomial to total degree d using a fresh
/// last variable; the coefficient ring is untouched.
template <class C>
XPoly<C> homogenize_x(const XPoly<C>& f, int nx, int d) {
  XPoly<C> out;
  for (const auto& [m, c] : f) {
    if (entry_is_zero(c)) continue;
    if (total_degree(m) > d) throw DegreeTooHigh("homogenize: degree exceeds d");
    Monomial hm = m;
    hm.push_back(d - total_degree(m));
    (void)nx;
    out.emplace(std::move(hm), c);
  }
  return out;
}

template <class C>
C sylvester_det(const XPoly<C>& f, const XPoly<C>& g, const C& zero,
                const C& one, std::size_t& dim_out) {
  auto coeff = [](const XPoly<C>& p, int e, const C& z) {
    auto it = p.find(Monomial{e});
    return it == p.end() ? z : it->second;
  };
  const int df = xdegree(f), dg = xdegree(g);
  dim_out = df + dg;
  if (df == 0 && dg == 0) return one;
  Matrix<C> m(df + dg, std::vector<C>(df + dg, zero));
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= df; ++j) m[i][i + j] = coeff(f, df - j, zero);
  for (int i = 0; i < df; ++i)
    for (int j = 0; j <= dg; ++j) m[dg + i][i + j] = coeff(g, dg - j, zero);
  return det_entries(std::move(m));
}

inline XPoly<FieldElem> as_xpoly(const Poly& p) {
  XPoly<FieldElem> out;
  for (const auto& [m, c] : p.terms()) out.emplace(m, c);
  return out;
}

}  // namespace resdetail

/// Determinant of the Sylvester matrix; zero iff f and g share a root in
/// the algebraic closure.
inline FieldElem sylvester_resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero())
    throw ZeroPolynomial("sylvester_resultant of zero polynomial");
  if (f.nvars() != 1 || g.nvars() != 1)
    throw DimensionMismatch("sylvester_resultant needs univariate input");
  std::size_t dim;
  return resdetail::sylvester_det(resdetail::as_xpoly(f), resdetail::as_xpoly(g),
                                  FieldElem(), FieldElem(1), dim);
}

/// Macaulay resultant of k homogeneous forms in k variables; exposed for
/// cross-checks against the Sylvester path.
inline FieldElem macaulay_resultant(const std::vector<Poly>& forms) {
  if (forms.empty()) throw InvalidParams("macaulay_resultant: empty system");
  const int k = static_cast<int>(forms.size());
  std::vector<resdetail::XPoly<FieldElem>> sys;
  std::vector<int> deg;
  for (const auto& f : forms) {
    if (f.nvars() != k)
      throw DimensionMismatch("macaulay_resultant: need k forms in k variables");
    if (f.is_zero()) return FieldElem();
    if (!f.is_homogeneous())
      throw InvalidParams("macaulay_resultant: forms must be homogeneous");
    sys.push_back(resdetail::as_xpoly(f));
    deg.push_back(f.degree());
  }
  std::size_t dim, minor;
  return resdetail::macaulay_quotient(sys, deg, FieldElem(), dim, minor);
}

/// R(f_1 - b_1, ..., f_{n+1} - b_{n+1}) via homogenize-then-resultant:
/// Sylvester for n = 1, Macaulay otherwise.  Zero whenever b = f(a).
inline ResultantCertificate resultant_test_value(const PolyMap& f,
                                                 const std::vector<FieldElem>& b) {
  const int n = f.nvars();
  if (f.dim() != n + 1)
    throw DimensionMismatch("resultant test needs n+1 components in n vars");
  if (static_cast<int>(b.size()) != n + 1)
    throw DimensionMismatch("resultant test point needs n+1 coordinates");

  std::vector<Poly> g;
  std::vector<int> deg;
  for (int i = 0; i <= n; ++i) {
    if (f.components[i].is_constant())
      throw InvalidParams("resultant test: constant component");
    g.push_back(f.components[i] - Poly::constant(n, b[i]));
    deg.push_back(f.components[i].degree());
  }
  ResultantCertificate cert;
  if (n == 1) {
    cert.method = "sylvester";
    if (g[0].is_zero() || g[1].is_zero()) {
      cert.value = FieldElem();
      return cert;
    }
    cert.value = resdetail::sylvester_det(resdetail::as_xpoly(g[0]),
                                          resdetail::as_xpoly(g[1]), FieldElem(),
                                          FieldElem(1), cert.matrix_dim);
    return cert;
  }
  cert.method = "macaulay";
  std::vector<resdetail::XPoly<FieldElem>> sys;
  for (int i = 0; i <= n; ++i) {
    if (g[i].is_zero()) {
      cert.value = FieldElem();
      return cert;
    }
    sys.push_back(resdetail::homogenize_x(resdetail::as_xpoly(g[i]), n, deg[i]));
  }
  cert.value = resdetail::macaulay_quotient(sys, deg, FieldElem(),
                                            cert.matrix_dim, cert.minor_dim);
  return cert;
}

/// The symbolic test polynomial R_f(Y_1, ..., Y_{n+1}): vanishes on the
/// image of f and lies in ker f*.
inline Poly resultant_test_poly(const PolyMap& f) {
  const int n = f.nvars();
  const int ny = n + 1;
  if (f.dim() != ny)
    throw DimensionMismatch("resultant test needs n+1 components in n vars");

  // coefficients live in F[Y_1, ..., Y_{n+1}]
  std::vector<resdetail::XPoly<Poly>> sys;
  std::vector<int> deg;
  const Poly yzero(ny);
  for (int i = 0; i < ny; ++i) {
    if (f.components[i].is_constant())
      throw InvalidParams("resultant test: constant component");
    resdetail::XPoly<Poly> gi;
    for (const auto& [m, c] : f.components[i].terms()) {
      auto [it, ins] = gi.try_emplace(m, yzero);
      it->second += Poly::constant(ny, c);
    }
    auto [it, ins] = gi.try_emplace(Monomial(n, 0), yzero);
    it->second -= Poly::variable(ny, i);
    deg.push_back(f.components[i].degree());
    sys.push_back(std::move(gi));
  }
  std::size_t dim, minor;
  if (n == 1)
    return resdetail::sylvester_det(sys[0], sys[1], yzero,
                                    Poly::constant(ny, FieldElem(1)), dim);
  std::vector<resdetail::XPoly<Poly>> hsys;
  for (int i = 0; i < ny; ++i)
    hsys.push_back(resdetail::homogenize_x(sys[i], n, deg[i]));
  return resdetail::macaulay_quotient(hsys, deg, yzero, dim, minor);
}

}  // namespace polyac
