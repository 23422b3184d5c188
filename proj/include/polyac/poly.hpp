#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "polyac/errors.hpp"
#include "polyac/field.hpp"

namespace polyac {

/// Exponent tuple; length equals the ambient variable count.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

/// Total, multiplicative, well-founded monomial order.  The block order
/// (grevlex on the first block, ties broken by grevlex on the rest) is an
/// elimination order for its initial block.
struct MonomialOrder {
  enum class Kind { Lex, GrevLex, Block };
  Kind kind = Kind::GrevLex;
  int block = 0;  // first-block size, Kind::Block only

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static MonomialOrder elimination(int first_block) {
    return {Kind::Block, first_block};
  }

  /// >0 when u is greater, <0 when v is greater, 0 when equal.
  int cmp(const Monomial& u, const Monomial& v) const {
    switch (kind) {
      case Kind::Lex:
        return cmp_lex(u, v, 0, u.size());
      case Kind::GrevLex:
        return cmp_grevlex(u, v, 0, u.size());
      case Kind::Block: {
        const std::size_t b = static_cast<std::size_t>(block);
        if (int c = cmp_grevlex(u, v, 0, b)) return c;
        return cmp_grevlex(u, v, b, u.size());
      }
    }
    return 0;
  }

  bool greater(const Monomial& u, const Monomial& v) const { return cmp(u, v) > 0; }
  bool less(const Monomial& u, const Monomial& v) const { return cmp(u, v) < 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  static int cmp_lex(const Monomial& u, const Monomial& v, std::size_t lo,
                     std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
    return 0;
  }
  static int cmp_grevlex(const Monomial& u, const Monomial& v, std::size_t lo,
                         std::size_t hi) {
    int du = 0, dv = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      du += u[i];
      dv += v[i];
    }
    if (du != dv) return du > dv ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
    return 0;
  }
};

/// Sparse multivariate polynomial with exact coefficients.
class Poly {
 public:
  using TermMap = std::map<Monomial, FieldElem>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const FieldElem& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }
  static Poly variable(int nvars, int i) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, FieldElem(1));
    return p;
  }
  static Poly term(int nvars, const Monomial& m, const FieldElem& c) {
    Poly p(nvars);
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }

  FieldElem coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElem() : it->second;
  }

  void add_term(const Monomial& m, const FieldElem& c) {
    if (static_cast<int>(m.size()) != nvars_)
      throw DimensionMismatch("term length != nvars");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Max total degree; 0 for the zero polynomial by convention.
  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) != d) return false;
    return true;
  }

  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  Poly operator+(const Poly& o) const {
    check_nvars(o);
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    check_nvars(o);
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  Poly operator*(const FieldElem& s) const {
    Poly r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly r = Poly::constant(nvars_, FieldElem(1));
    Poly base = *this;
    while (e) {
      if (e & 1) r *= base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  bool operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  FieldElem eval(const std::vector<FieldElem>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw DimensionMismatch("point length != nvars");
    // power tables per variable
    std::vector<int> maxe(nvars_, 0);
    for (const auto& [m, c] : terms_)
      for (int i = 0; i < nvars_; ++i) maxe[i] = std::max(maxe[i], m[i]);
    std::vector<std::vector<FieldElem>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      powers[i].resize(maxe[i] + 1, FieldElem(1));
      for (int e = 1; e <= maxe[i]; ++e) powers[i][e] = powers[i][e - 1] * point[i];
    }
    FieldElem sum;
    for (const auto& [m, c] : terms_) {
      FieldElem t = c;
      for (int i = 0; i < nvars_; ++i)
        if (m[i]) t *= powers[i][m[i]];
      sum += t;
    }
    return sum;
  }

  /// Same polynomial over a larger variable set, variable i -> i + offset.
  Poly shifted(int new_nvars, int offset) const {
    Poly r(new_nvars);
    for (const auto& [m, c] : terms_) {
      Monomial nm(new_nvars, 0);
      for (int i = 0; i < nvars_; ++i) nm[i + offset] = m[i];
      r.terms_.emplace(std::move(nm), c);
    }
    return r;
  }

  const std::pair<const Monomial, FieldElem>& leading_term(
      const MonomialOrder& order) const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return *best;
  }

 private:
  int nvars_;
  TermMap terms_;

  void check_nvars(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("nvars mismatch");
  }
};

inline Poly operator*(const FieldElem& s, const Poly& p) { return p * s; }

/// Ordered m-tuple of polynomials: a mapping F^n -> F^m.
struct PolyMap {
  std::vector<Poly> components;

  PolyMap() = default;
  explicit PolyMap(std::vector<Poly> comps) : components(std::move(comps)) {
    if (components.empty()) throw InvalidParams("PolyMap needs >= 1 component");
    for (const auto& c : components)
      if (c.nvars() != components[0].nvars())
        throw DimensionMismatch("PolyMap components disagree on nvars");
  }

  int nvars() const { return components.at(0).nvars(); }
  int dim() const { return static_cast<int>(components.size()); }

  int degree() const {
    int d = 0;
    for (const auto& c : components) d = std::max(d, c.degree());
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& c : components)
      if (!c.is_homogeneous()) return false;
    // all components of a homogeneous mapping must share one degree
    int d = -1;
    for (const auto& c : components) {
      if (c.is_zero()) continue;
      if (d < 0) d = c.degree();
      if (c.degree() != d) return false;
    }
    return true;
  }

  bool is_constant() const {
    for (const auto& c : components)
      if (!c.is_constant()) return false;
    return true;
  }

  std::vector<FieldElem> eval(const std::vector<FieldElem>& point) const {
    std::vector<FieldElem> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.eval(point));
    return out;
  }

  bool operator==(const PolyMap& o) const { return components == o.components; }
};

/// dim Pol^r(F^s) = C(s+r, s).
inline BigInt dim_pol(int s, int r) {
  if (s < 0 || r < 0) throw InvalidParams("dim_pol: negative parameter");
  return binomial(s + r, s);
}

/// All exponent tuples of total degree <= r in n variables, lex-ascending.
inline std::vector<Monomial> monomials_up_to(int n, int r) {
  std::vector<Monomial> out;
  Monomial cur(n, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, r);
  std::sort(out.begin(), out.end());  // ascending lex on exponent tuples
  return out;
}

/// H^r_{n,m}: flattens a PolyMap of degree <= r to its coefficient vector.
/// Components outer, monomials inner, lex-ascending.  Linear and injective.
inline std::vector<FieldElem> coeff_vector(const PolyMap& f, int r) {
  if (f.degree() > r) throw DegreeTooHigh("coeff_vector: degree exceeds r");
  const auto basis = monomials_up_to(f.nvars(), r);
  std::vector<FieldElem> out;
  out.reserve(f.components.size() * basis.size());
  for (const auto& comp : f.components)
    for (const auto& m : basis) out.push_back(comp.coeff(m));
  return out;
}

/// Inverse of coeff_vector on its range.
inline PolyMap poly_map_from_coeff_vector(const std::vector<FieldElem>& v,
                                          int n, int m, int r) {
  const auto basis = monomials_up_to(n, r);
  if (v.size() != basis.size() * static_cast<std::size_t>(m))
    throw LengthMismatch("coefficient vector has wrong length");
  std::vector<Poly> comps;
  comps.reserve(m);
  std::size_t k = 0;
  for (int i = 0; i < m; ++i) {
    Poly p(n);
    for (const auto& mono : basis) p.add_term(mono, v[k++]);
    comps.push_back(std::move(p));
  }
  return PolyMap(std::move(comps));
}

/// Adds one variable and pads every term to total degree exactly r.
inline PolyMap homogenize(const PolyMap& f, int r) {
  if (f.degree() > r) throw DegreeTooHigh("homogenize: degree exceeds r");
  const int n = f.nvars();
  std::vector<Poly> comps;
  for (const auto& comp : f.components) {
    Poly h(n + 1);
    for (const auto& [m, c] : comp.terms()) {
      Monomial nm = m;
      nm.push_back(r - total_degree(m));
      h.add_term(nm, c);
    }
    comps.push_back(std::move(h));
  }
  return PolyMap(std::move(comps));
}

/// Substitutes 1 for the last variable.
inline PolyMap dehomogenize(const PolyMap& f) {
  const int n = f.nvars() - 1;
  if (n < 0) throw InvalidParams("dehomogenize: no variables");
  std::vector<Poly> comps;
  for (const auto& comp : f.components) {
    Poly p(n);
    for (const auto& [m, c] : comp.terms())
      p.add_term(Monomial(m.begin(), m.end() - 1), c);
    comps.push_back(std::move(p));
  }
  return PolyMap(std::move(comps));
}

// ---------------------------------------------------------------------------
// Pseudo-monomial basis: psi_a(X) = prod_i X_i (X_i - 1) ... (X_i - a_i + 1).
// Triangular against the monomial basis under lex ordering.
// ---------------------------------------------------------------------------

inline Poly pseudo_monomial(int nvars, const Monomial& a) {
  Poly p = Poly::constant(nvars, FieldElem(1));
  for (int i = 0; i < nvars; ++i)
    for (int j = 0; j < a[i]; ++j)
      p *= Poly::variable(nvars, i) - Poly::constant(nvars, FieldElem(Rational(j)));
  return p;
}

/// Basis of Pol^p(F^n) indexed by the monomial lattice, lex-ascending.
inline std::vector<Poly> pseudo_monomial_basis(int n, int p) {
  std::vector<Poly> out;
  for (const auto& a : monomials_up_to(n, p)) out.push_back(pseudo_monomial(n, a));
  return out;
}

/// Lower-unitriangular change of basis, stored sparsely.  Row = pseudo
/// index, column = monomial index, both in lex-ascending lattice order.
struct BasisChange {
  std::size_t dimension = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries;
};

inline BasisChange pseudo_monomial_basis_change(int n, int p) {
  const auto lattice = monomials_up_to(n, p);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < lattice.size(); ++i) index[lattice[i]] = i;
  BasisChange bc;
  bc.dimension = lattice.size();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const Poly psi = pseudo_monomial(n, lattice[i]);
    for (const auto& [m, c] : psi.terms())
      bc.entries[{i, index.at(m)}] = c.rational();
  }
  return bc;
}

/// Coefficients of f against the pseudo-monomial lattice basis of Pol^p.
inline std::vector<FieldElem> to_pseudo(const Poly& f, int p) {
  if (f.degree() > p) throw DegreeTooHigh("to_pseudo: degree exceeds p");
  const auto lattice = monomials_up_to(f.nvars(), p);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < lattice.size(); ++i) index[lattice[i]] = i;
  std::vector<FieldElem> coeffs(lattice.size(), FieldElem());
  Poly g = f;
  while (!g.is_zero()) {
    // psi_a is monic in X^a and otherwise lex-smaller, so peel from the top
    const auto& [m, c] = *g.terms().rbegin();
    coeffs[index.at(m)] = c;
    g -= pseudo_monomial(g.nvars(), m) * c;
  }
  return coeffs;
}

inline Poly from_pseudo(const std::vector<FieldElem>& coeffs, int n, int p) {
  const auto lattice = monomials_up_to(n, p);
  if (coeffs.size() != lattice.size())
    throw LengthMismatch("from_pseudo: coefficient count != lattice size");
  Poly f(n);
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (!coeffs[i].is_zero()) f += pseudo_monomial(n, lattice[i]) * coeffs[i];
  return f;
}

}  // namespace polyac
