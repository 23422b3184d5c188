#pragma once

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <vector>

#include "polyac/poly.hpp"

namespace polyac {

/// Step/size caps for Groebner computations.  Exceeding a cap raises
/// BudgetExceeded; it never yields a wrong answer.
struct Budget {
  std::size_t max_basis = 4000;
  std::size_t max_reduction_steps = 20000000;

  static const Budget& standard() {
    static const Budget b{};
    return b;
  }
};

struct Ideal {
  int nvars = 0;
  std::vector<Poly> generators;
  MonomialOrder order = MonomialOrder::grevlex();
};

struct GroebnerBasis {
  Ideal ideal;
  std::vector<Poly> basis;  // reduced: monic, auto-reduced, sorted by LM
  MonomialOrder order = MonomialOrder::grevlex();

  bool contains_nonzero_constant() const {
    for (const auto& g : basis)
      if (!g.is_zero() && g.degree() == 0) return true;
    return false;
  }
};

namespace gbdetail {

using Term = std::pair<Monomial, FieldElem>;
using OPoly = std::vector<Term>;  // sorted descending under the active order

inline OPoly to_opoly(const Poly& p, const MonomialOrder& order) {
  OPoly f(p.terms().begin(), p.terms().end());
  std::sort(f.begin(), f.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.first, b.first);
  });
  return f;
}

inline Poly to_poly(const OPoly& f, int nvars) {
  Poly p(nvars);
  for (const auto& [m, c] : f) p.add_term(m, c);
  return p;
}

/// fscale * f[from..] - c * x^shift * g, merging the sorted term lists.
/// fscale != 1 supports pseudo-reduction, which avoids inverting
/// cyclotomic leading coefficients (a dense-field-degree hazard).
inline OPoly sub_scaled(const OPoly& f, std::size_t from, const FieldElem& fscale,
                        const OPoly& g, const FieldElem& c, const Monomial& shift,
                        const MonomialOrder& order) {
  const bool scaled = !fscale.is_one();
  OPoly out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < f.size() && j < g.size()) {
    const Monomial gm = mono_mul(g[j].first, shift);
    const int cv = order.cmp(f[i].first, gm);
    if (cv > 0) {
      out.emplace_back(f[i].first, scaled ? f[i].second * fscale : f[i].second);
      ++i;
    } else if (cv < 0) {
      out.emplace_back(gm, -(c * g[j].second));
      ++j;
    } else {
      FieldElem nc =
          (scaled ? f[i].second * fscale : f[i].second) - c * g[j].second;
      if (!nc.is_zero()) out.emplace_back(f[i].first, std::move(nc));
      ++i;
      ++j;
    }
  }
  for (; i < f.size(); ++i)
    out.emplace_back(f[i].first, scaled ? f[i].second * fscale : f[i].second);
  for (; j < g.size(); ++j)
    out.emplace_back(mono_mul(g[j].first, shift), -(c * g[j].second));
  return out;
}

/// Scales to coprime integer coefficients with positive lead (rational
/// case) or to a monic polynomial (cyclotomic coefficients present).
/// Keeps coefficient growth in check during the Buchberger loop.
inline void normalize(OPoly& f) {
  if (f.empty()) return;
  bool all_rational = true;
  for (const auto& [m, c] : f)
    if (!c.is_rational()) {
      all_rational = false;
      break;
    }
  if (!all_rational) return;  // no cheap canonical scale; leave as-is
  BigInt den = 1, num = 0;
  for (const auto& [m, c] : f) {
    den = lcm(den, c.rational().denominator());
    num = gcd(num, c.rational().numerator());
  }
  if (f[0].second.rational().sign() < 0) num = -num;
  const Rational scale{den, num};
  for (auto& [m, c] : f) c = FieldElem(c.rational() * scale);
}

inline void make_monic(OPoly& f) {
  if (f.empty() || f[0].second.is_one()) return;
  // cyclotomic inverses go through a dense power basis; skip leads whose
  // field degree would not fit (the basis stays correct up to scale)
  if (!f[0].second.is_rational() &&
      f[0].second.cyclo().field_degree() >
          BigInt(static_cast<unsigned long>(kMaxDenseFieldDegree)))
    return;
  const FieldElem inv = f[0].second.inverse();
  for (auto& [m, c] : f) c = c * inv;
}

struct Engine {
  MonomialOrder order;
  const Budget& budget;
  std::size_t steps = 0;

  Engine(const MonomialOrder& ord, const Budget& b) : order(ord), budget(b) {}

  void tick() {
    if (++steps > budget.max_reduction_steps)
      throw BudgetExceeded("groebner: reduction step cap exceeded");
  }

  /// Full normal form of f modulo gens (skip[i] marks gens to ignore).
  OPoly reduce(OPoly f, const std::vector<OPoly>& gens,
               const std::vector<char>* skip = nullptr) {
    OPoly out;
    while (!f.empty()) {
      // find a reducer for the current head; irreducible monomials can
      // never receive later contributions, so move them out in blocks
      std::size_t pos = 0;
      const OPoly* reducer = nullptr;
      while (pos < f.size()) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          if (skip && (*skip)[gi]) continue;
          if (gens[gi].empty()) continue;
          if (divides(gens[gi][0].first, f[pos].first)) {
            reducer = &gens[gi];
            break;
          }
        }
        if (reducer) break;
        out.push_back(std::move(f[pos]));
        ++pos;
      }
      if (!reducer) break;
      tick();
      const OPoly& g = *reducer;
      const Monomial shift = mono_div(f[pos].first, g[0].first);
      if (g[0].second.is_rational()) {
        f = sub_scaled(f, pos, FieldElem(1), g, f[pos].second / g[0].second,
                       shift, order);
      } else {
        // pseudo-reduction: scale f by lc(g) instead of dividing
        for (auto& [m, c] : out) c = c * g[0].second;
        f = sub_scaled(f, pos, g[0].second, g, f[pos].second, shift, order);
      }
    }
    return out;
  }

  OPoly s_poly(const OPoly& f, const OPoly& g) {
    const Monomial lcm = mono_lcm(f[0].first, g[0].first);
    const Monomial sf = mono_div(lcm, f[0].first);
    const Monomial sg = mono_div(lcm, g[0].first);
    OPoly a;
    a.reserve(f.size());
    if (f[0].second.is_rational() && g[0].second.is_rational()) {
      // lcm/LM(f) * f / lc(f)  -  lcm/LM(g) * g / lc(g)
      const FieldElem invf = f[0].second.inverse();
      for (const auto& [m, c] : f) a.emplace_back(mono_mul(m, sf), c * invf);
      return sub_scaled(a, 0, FieldElem(1), g, g[0].second.inverse(), sg, order);
    }
    // pseudo S-polynomial: lc(g) x^sf f - lc(f) x^sg g
    for (const auto& [m, c] : f) a.emplace_back(mono_mul(m, sf), c);
    return sub_scaled(a, 0, g[0].second, g, f[0].second, sg, order);
  }
};

}  // namespace gbdetail

/// Reduced Groebner basis by Buchberger's algorithm with the
/// Gebauer-Moeller pair criteria.  Deterministic: S-pairs are processed
/// by minimal lcm total degree, ties broken by lex on the pair's leading
/// monomials.
inline GroebnerBasis buchberger(const Ideal& ideal,
                                const Budget& budget = Budget::standard()) {
  using namespace gbdetail;
  const MonomialOrder& order = ideal.order;
  Engine eng(order, budget);
  const bool trace = std::getenv("POLYAC_GB_TRACE") != nullptr;

  std::vector<OPoly> basis;   // every element ever admitted
  std::vector<char> retired;  // leading monomial superseded; skip for pairs
  struct PairKey {
    int deg;
    Monomial lm_i, lm_j;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (lm_i != o.lm_i) return lm_i < o.lm_i;
      if (lm_j != o.lm_j) return lm_j < o.lm_j;
      return std::tie(i, j) < std::tie(o.i, o.j);
    }
  };
  std::set<PairKey> pairs;

  auto pair_lcm = [&](std::size_t i, std::size_t j) {
    return mono_lcm(basis[i][0].first, basis[j][0].first);
  };
  auto pair_key = [&](std::size_t i, std::size_t j) {
    return PairKey{total_degree(pair_lcm(i, j)), basis[i][0].first,
                   basis[j][0].first, i, j};
  };

  // Gebauer-Moeller update with the new element at index t
  auto update = [&](std::size_t t) {
    const Monomial& lmt = basis[t][0].first;
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < t; ++i)
      if (!retired[i]) cand.push_back(i);
    std::vector<Monomial> L;
    L.reserve(cand.size());
    for (std::size_t i : cand) L.push_back(pair_lcm(i, t));
    std::vector<char> keep(cand.size(), 1);
    // M: drop (i,t) when some (j,t) has a strictly smaller dividing lcm;
    // F: among equal lcms keep only the smallest index
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || !keep[a]) continue;
        if (L[b] == L[a]) {
          if (b < a) keep[a] = 0;
        } else if (divides(L[b], L[a])) {
          keep[a] = 0;
        }
      }
    }
    // B: prune old pairs whose lcm is a proper multiple through lmt
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Monomial l = pair_lcm(it->i, it->j);
      if (divides(lmt, l) && pair_lcm(it->i, t) != l && pair_lcm(it->j, t) != l)
        it = pairs.erase(it);
      else
        ++it;
    }
    // coprime (product) criterion, then enqueue
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (L[a] == mono_mul(basis[cand[a]][0].first, lmt)) continue;
      pairs.insert(pair_key(cand[a], t));
    }
    for (std::size_t i = 0; i < t; ++i)
      if (!retired[i] && divides(lmt, basis[i][0].first)) retired[i] = 1;
  };

  for (const auto& g : ideal.generators) {
    if (g.is_zero()) continue;
    if (g.nvars() != ideal.nvars)
      throw DimensionMismatch("ideal generator nvars mismatch");
    OPoly og = to_opoly(g, order);
    normalize(og);
    basis.push_back(std::move(og));
    retired.push_back(0);
    update(basis.size() - 1);
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    const PairKey pk = *pairs.begin();
    pairs.erase(pairs.begin());
    OPoly s = eng.s_poly(basis[pk.i], basis[pk.j]);
    s = eng.reduce(std::move(s), basis, &retired);
    ++processed;
    if (s.empty()) continue;
    normalize(s);
    basis.push_back(std::move(s));
    retired.push_back(0);
    if (basis.size() > budget.max_basis)
      throw BudgetExceeded("groebner: basis size cap exceeded");
    update(basis.size() - 1);
    if (trace && basis.size() % 10 == 0)
      std::cerr << "[gb] basis=" << basis.size() << " pairs=" << pairs.size()
                << " processed=" << processed << " steps=" << eng.steps
                << " deg=" << pk.deg << "\n";
  }

  // minimal basis: drop superseded leads, then fully reduce tails
  std::vector<OPoly> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!retired[i]) reduced.push_back(basis[i]);
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<char> skip(reduced.size(), 0);
    skip[i] = 1;
    OPoly head{reduced[i][0]};
    OPoly tail(reduced[i].begin() + 1, reduced[i].end());
    tail = eng.reduce(std::move(tail), reduced, &skip);
    head.insert(head.end(), tail.begin(), tail.end());
    reduced[i] = std::move(head);
    make_monic(reduced[i]);
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const OPoly& a, const OPoly& b) {
              return order.less(a[0].first, b[0].first);
            });

  GroebnerBasis gb;
  gb.ideal = ideal;
  gb.order = order;
  for (const auto& f : reduced) gb.basis.push_back(to_poly(f, ideal.nvars));
  return gb;
}

/// Remainder of f modulo the basis: no term divisible by a basis leading
/// monomial.  Zero iff f lies in the ideal.
inline Poly normal_form(const Poly& f, const GroebnerBasis& gb,
                        const Budget& budget = Budget::standard()) {
  using namespace gbdetail;
  if (f.nvars() != gb.ideal.nvars)
    throw DimensionMismatch("normal_form: nvars mismatch");
  Engine eng(gb.order, budget);
  std::vector<OPoly> gens;
  for (const auto& g : gb.basis) gens.push_back(to_opoly(g, gb.order));
  return to_poly(eng.reduce(to_opoly(f, gb.order), gens), f.nvars());
}

/// Nullstellensatz test: the system { f_i = b_i } has a solution over C
/// iff the Groebner basis of <f_i - b_i> contains no nonzero constant.
/// Valid over C regardless of the (rational/cyclotomic) input field.
inline bool solvable_over_C(
    const std::vector<std::pair<Poly, FieldElem>>& system,
    const Budget& budget = Budget::standard()) {
  if (system.empty()) return true;
  Ideal ideal;
  ideal.nvars = system[0].first.nvars();
  ideal.order = MonomialOrder::grevlex();
  for (const auto& [f, b] : system) {
    Poly g = f - Poly::constant(ideal.nvars, b);
    if (g.is_zero()) continue;  // trivially satisfied equation
    if (g.is_constant()) return false;
    ideal.generators.push_back(std::move(g));
  }
  if (ideal.generators.empty()) return true;
  return !buchberger(ideal, budget).contains_nonzero_constant();
}

/// Generators (a reduced Groebner basis) of ker f^* = I(image closure),
/// computed as <Y_i - f^i> intersected with F[Y], via a block elimination
/// order with the X block first.
inline std::vector<Poly> image_ideal(const PolyMap& f,
                                     const Budget& budget = Budget::standard()) {
  const int n = f.nvars();
  const int m = f.dim();
  Ideal ideal;
  ideal.nvars = n + m;
  ideal.order = MonomialOrder::elimination(n);
  for (int i = 0; i < m; ++i) {
    Poly g = Poly::variable(n + m, n + i) - f.components[i].shifted(n + m, 0);
    ideal.generators.push_back(std::move(g));
  }
  const GroebnerBasis gb = buchberger(ideal, budget);
  std::vector<Poly> out;
  for (const auto& g : gb.basis) {
    bool pure_y = true;
    for (const auto& [mono, c] : g.terms())
      for (int i = 0; i < n && pure_y; ++i)
        if (mono[i] != 0) pure_y = false;
    if (!pure_y) continue;
    Poly h(m);
    for (const auto& [mono, c] : g.terms())
      h.add_term(Monomial(mono.begin() + n, mono.end()), c);
    out.push_back(std::move(h));
  }
  return out;
}

/// b lies in the Zariski closure of the image iff every generator of the
/// image ideal vanishes at b.
inline bool in_zariski_closure(const std::vector<FieldElem>& b, const PolyMap& f,
                               const Budget& budget = Budget::standard()) {
  if (static_cast<int>(b.size()) != f.dim())
    throw DimensionMismatch("point dimension != target dimension");
  for (const auto& g : image_ideal(f, budget))
    if (!g.eval(b).is_zero()) return false;
  return true;
}

/// Exact image membership over C: solvability of f(X) = b.
inline bool in_image_over_C(const std::vector<FieldElem>& b, const PolyMap& f,
                            const Budget& budget = Budget::standard()) {
  if (static_cast<int>(b.size()) != f.dim())
    throw DimensionMismatch("point dimension != target dimension");
  std::vector<std::pair<Poly, FieldElem>> system;
  for (int i = 0; i < f.dim(); ++i) system.emplace_back(f.components[i], b[i]);
  return solvable_over_C(system, budget);
}

/// Indexed family of parametrizations P-hat_alpha; system_for(alpha)
/// yields the defining equations "P-hat_alpha(v) = f" in the unknowns v.
struct ComplexityFamily {
  std::function<std::vector<std::pair<Poly, FieldElem>>(int)> system_for;
  bool monotone = true;
};

/// Smallest alpha in [alpha_min, alpha_max] whose system is solvable over
/// C; nullopt when every probe fails (AboveCap).  Ascending scan.
inline std::optional<int> complexity_search(
    const ComplexityFamily& fam, int alpha_min, int alpha_max,
    const Budget& budget = Budget::standard()) {
  for (int alpha = alpha_min; alpha <= alpha_max; ++alpha)
    if (solvable_over_C(fam.system_for(alpha), budget)) return alpha;
  return std::nullopt;
}

namespace gbdetail {

/// Symbolic m x m determinant by Laplace expansion along the first column.
inline Poly det_poly(const std::vector<std::vector<Poly>>& a) {
  const std::size_t m = a.size();
  if (m == 1) return a[0][0];
  const int nvars = a[0][0].nvars();
  Poly det(nvars);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i][0].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == i) continue;
      minor.emplace_back(a[r].begin() + 1, a[r].end());
    }
    const Poly cof = a[i][0] * det_poly(minor);
    if (i % 2 == 0)
      det += cof;
    else
      det -= cof;
  }
  return det;
}

}  // namespace gbdetail

/// Defining system for "f is the pullback of Det_m by an affine map":
/// unknowns are the m^2 (n+1) affine coefficients; one equation per
/// X-monomial of A* Det_m matched against the coefficient of f.
inline std::vector<std::pair<Poly, FieldElem>> det_membership_system(
    const Poly& f, int m) {
  const int n = f.nvars();
  const int u = m * m * (n + 1);  // unknowns first, then the X variables
  std::vector<std::vector<Poly>> entries(m, std::vector<Poly>(u + n, Poly(u + n)));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      const int base = (k * m + l) * (n + 1);
      Poly e = Poly::variable(u + n, base);  // constant part
      for (int j = 0; j < n; ++j)
        e += Poly::variable(u + n, base + 1 + j) * Poly::variable(u + n, u + j);
      entries[k][l] = std::move(e);
    }
  const Poly det = gbdetail::det_poly(entries);
  // collect coefficients with respect to the X block
  std::map<Monomial, Poly> by_xmono;
  for (const auto& [mono, c] : det.terms()) {
    Monomial xm(mono.begin() + u, mono.end());
    Monomial um(mono.begin(), mono.begin() + u);
    um.resize(u);
    auto [it, inserted] = by_xmono.try_emplace(xm, Poly(u));
    it->second.add_term(um, c);
  }
  for (const auto& [mono, c] : f.terms())
    by_xmono.try_emplace(mono, Poly(u));
  std::vector<std::pair<Poly, FieldElem>> system;
  for (auto& [xm, g] : by_xmono) system.emplace_back(std::move(g), f.coeff(xm));
  return system;
}

/// c_det(f): least m <= m_max with f = A* Det_m for some affine A;
/// nullopt = AboveCap.  The family is monotone, so an ascending scan.
inline std::optional<int> det_complexity(
    const Poly& f, int m_max, const Budget& budget = Budget::standard()) {
  if (f.is_zero()) throw ZeroPolynomial("det_complexity of zero");
  ComplexityFamily fam;
  fam.system_for = [&f](int m) { return det_membership_system(f, m); };
  return complexity_search(fam, 1, m_max, budget);
}

}  // namespace polyac
