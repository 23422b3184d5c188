#pragma once

#include <string>
#include <vector>

#include "polyac/groebner.hpp"
#include "polyac/interpolate.hpp"
#include "polyac/linalg.hpp"

namespace polyac {

enum class FieldKind { Real, Complex };
enum class CoeffBasis { Monomial, PseudoMonomial };

/// Parameters of the evaluation map
/// Ev^k_{r,s,m}: Pol^r(F^s, F^m) x (F^s)^k -> (F^m)^k.
struct EvMapSpec {
  int k = 1;
  int r = 1;
  int s = 1;
  int m = 1;

  void validate() const {
    if (k < 1 || r < 0 || s < 0 || m < 1)
      throw InvalidParams("ev map: need k, m >= 1 and r, s >= 0");
  }
};

/// Ordered k-tuple of points in F^m, identified with its flattening
/// S-bar in F^{mk} (point-major).
struct KTuple {
  int m = 0;
  std::vector<std::vector<FieldElem>> points;

  int k() const { return static_cast<int>(points.size()); }

  void validate() const {
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != m)
        throw DimensionMismatch("k-tuple: point dimension != m");
  }

  std::vector<FieldElem> flattened() const {
    validate();
    std::vector<FieldElem> out;
    out.reserve(points.size() * m);
    for (const auto& p : points) out.insert(out.end(), p.begin(), p.end());
    return out;
  }
};

/// Ev^k_{r,s,m}(g, pts): exact evaluation, flattened point-major.
inline std::vector<FieldElem> ev_map(
    const EvMapSpec& spec, const PolyMap& g,
    const std::vector<std::vector<FieldElem>>& pts) {
  spec.validate();
  if (g.nvars() != spec.s || g.dim() != spec.m || g.degree() > spec.r)
    throw DimensionMismatch("ev_map: g not in Pol^r(F^s, F^m)");
  if (static_cast<int>(pts.size()) != spec.k)
    throw DimensionMismatch("ev_map: need k points");
  std::vector<FieldElem> out;
  out.reserve(spec.k * spec.m);
  for (const auto& p : pts)
    for (auto& v : g.eval(p)) out.push_back(std::move(v));
  return out;
}

/// Ev^k_{r,s,m} written out as a polynomial map in the unknowns
/// (coefficients of g | the k domain points), in that variable order.
/// Coefficient variables: component-major, monomials lex-ascending.
inline PolyMap ev_polynomial_map(const EvMapSpec& spec) {
  spec.validate();
  const auto basis = monomials_up_to(spec.s, spec.r);
  const int nc = spec.m * static_cast<int>(basis.size());
  const int nv = nc + spec.k * spec.s;
  std::vector<Poly> comps;
  comps.reserve(spec.k * spec.m);
  for (int i = 0; i < spec.k; ++i)
    for (int c = 0; c < spec.m; ++c) {
      Poly comp(nv);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        Monomial mono(nv, 0);
        mono[c * basis.size() + t] = 1;  // the coefficient unknown
        for (int v = 0; v < spec.s; ++v) mono[nc + i * spec.s + v] = basis[t][v];
        comp.add_term(mono, FieldElem(1));
      }
      comps.push_back(std::move(comp));
    }
  return PolyMap(std::move(comps));
}

/// Least K for which an (s,r)-elusive K-tuple in F^m exists by dimension
/// count: ceil((m binom(s+r,s) + 1) / (m - s)).
inline BigInt elusive_k_bound(int s, int r, int m) {
  if (s < 1 || s >= m) throw InvalidParams("elusive_k_bound: need 1 <= s < m");
  if (r < 0) throw InvalidParams("elusive_k_bound: need r >= 0");
  const BigInt num = BigInt(m) * binomial(s + r, s) + 1;
  const BigInt den = m - s;
  BigInt q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return rem == 0 ? q : q + 1;
}

/// Effective elimination degree bound D(m,r) = (m+1)(m+2)(r^m+1)^{m+2}.
inline BigInt effective_degree_bound(int m, int r) {
  if (m < 1 || r < 1) throw InvalidParams("effective_degree_bound: m, r >= 1");
  BigInt rm;
  mpz_ui_pow_ui(rm.get_mpz_t(), r, m);
  BigInt base = rm + 1;
  BigInt pw;
  mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), m + 2);
  return BigInt(m + 1) * BigInt(m + 2) * pw;
}

namespace eldetail {

/// Smallest `count` distinct primes >= threshold, ascending.
inline std::vector<std::uint64_t> primes_from(const BigInt& threshold, int count,
                                              std::uint64_t prime_cap) {
  if (threshold > BigInt(static_cast<unsigned long>(prime_cap)))
    throw PrimeCapExceeded("prime threshold " + threshold.get_str() +
                           " exceeds cap");
  std::uint64_t lower = std::max<std::uint64_t>(threshold.get_ui(), 3);
  std::vector<std::uint64_t> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t p = next_prime(lower);
    if (p > prime_cap)
      throw PrimeCapExceeded("prime " + std::to_string(p) + " exceeds cap");
    out.push_back(p);
    lower = p + 1;
  }
  return out;
}

inline FieldElem base_root(std::uint64_t p, FieldKind field,
                           std::uint64_t prime_cap) {
  const FieldElem z = root_of_unity(p, prime_cap);
  return field == FieldKind::Complex ? z : z + z.conj();
}

}  // namespace eldetail

struct KlpsCertificate {
  std::vector<std::uint64_t> primes;
  BigInt threshold;
  FieldKind field = FieldKind::Complex;
  bool compliant = true;  // primes meet the stated degree-bound threshold
};

struct KlpsPoint {
  std::vector<FieldElem> point;
  KlpsCertificate cert;
};

/// Point off the image of every degree-bounded map defined over Q:
/// b~^i = sum_{j<=i} a^i_j b^j with b^j a root of unity at the i-th prime
/// (real case: b^j + conj b^j), rational tail afterwards.
inline KlpsPoint klps_point(int s, int m, const BigInt& degree_bound,
                            const Matrix<Rational>& mixing,
                            const std::vector<Rational>& tail, FieldKind field,
                            std::uint64_t prime_cap = kDefaultPrimeCap) {
  if (s < 0 || m < 1 || s > m - 1)
    throw InvalidParams("klps_point: need 0 <= s <= m-1");
  const std::size_t sz = static_cast<std::size_t>(s) + 1;
  if (mixing.size() != sz)
    throw DimensionMismatch("klps_point: mixing must be (s+1)x(s+1)");
  for (std::size_t i = 0; i < sz; ++i) {
    if (mixing[i].size() != sz)
      throw DimensionMismatch("klps_point: mixing must be (s+1)x(s+1)");
    if (mixing[i][i].is_zero())
      throw InvalidParams("klps_point: mixing diagonal must be nonzero");
    for (std::size_t j = i + 1; j < sz; ++j)
      if (!mixing[i][j].is_zero())
        throw InvalidParams("klps_point: mixing must be lower triangular");
  }
  if (tail.size() != static_cast<std::size_t>(m - s - 1))
    throw LengthMismatch("klps_point: tail needs m-s-1 entries");

  KlpsPoint out;
  out.cert.field = field;
  out.cert.threshold = field == FieldKind::Complex ? BigInt(degree_bound + 2)
                                                   : BigInt(2 * degree_bound + 3);
  out.cert.primes =
      eldetail::primes_from(out.cert.threshold, s + 1, prime_cap);
  std::vector<FieldElem> base;
  for (const std::uint64_t p : out.cert.primes)
    base.push_back(eldetail::base_root(p, field, prime_cap));
  for (std::size_t i = 0; i < sz; ++i) {
    FieldElem acc;
    for (std::size_t j = 0; j <= i; ++j)
      acc += FieldElem(mixing[i][j]) * base[j];
    out.point.push_back(std::move(acc));
  }
  for (const auto& t : tail) out.point.emplace_back(t);
  return out;
}

/// Parameters of the explicit (s,r)-elusive map construction.  min_prime
/// overrides the paper-scale threshold for executable desk-scale runs;
/// certificates then carry compliant = false.
struct ElusiveSpec {
  int n = 1;
  int p = 1;  // degree of the constructed map
  int s = 1;
  int r = 1;  // elusiveness parameters targeted
  int m = 2;
  FieldKind field = FieldKind::Complex;
  CoeffBasis basis = CoeffBasis::Monomial;
  std::uint64_t min_prime = 0;  // 0 = use the degree-bound threshold

  BigInt K() const { return binomial(n + p, n); }
};

struct ElusiveCertificate {
  std::vector<std::vector<std::uint64_t>> primes;  // per component, K each
  BigInt threshold;
  FieldKind field = FieldKind::Complex;
  CoeffBasis basis = CoeffBasis::Monomial;
  bool compliant = true;  // false: heuristic run below the paper threshold
};

struct ElusiveMap {
  PolyMap map;
  ElusiveCertificate cert;
};

/// The explicit degree-p map C^n -> C^m whose K = binom(n+p,n) coefficients
/// per component are roots of unity at distinct primes, placed lex-ascending
/// beginning with the smallest term (real case: b + conj b).
inline ElusiveMap build_elusive_map(const ElusiveSpec& spec,
                                    std::uint64_t prime_cap = kDefaultPrimeCap) {
  if (spec.n < 1 || spec.p < 1 || spec.m < 1 || spec.s < 1 || spec.r < 1)
    throw InvalidParams("build_elusive_map: parameters must be positive");
  if (spec.s >= spec.m) throw InvalidParams("build_elusive_map: need s < m");
  if (spec.K() < elusive_k_bound(spec.s, spec.r, spec.m))
    throw InvalidParams(
        "build_elusive_map: K = binom(n+p,n) below the elusive bound");

  ElusiveMap out;
  out.cert.field = spec.field;
  out.cert.basis = spec.basis;
  const BigInt D = effective_degree_bound(spec.m, spec.r);
  out.cert.threshold =
      spec.field == FieldKind::Complex ? BigInt(D + 2) : BigInt(2 * D + 3);
  BigInt start = out.cert.threshold;
  if (spec.min_prime != 0) {
    start = BigInt(static_cast<unsigned long>(spec.min_prime));
    out.cert.compliant = start >= out.cert.threshold;
  }
  const int K = static_cast<int>(spec.K().get_ui());
  const auto grid = eldetail::primes_from(start, K * spec.m, prime_cap);

  const auto lattice = monomials_up_to(spec.n, spec.p);
  std::vector<Poly> comps;
  for (int j = 0; j < spec.m; ++j) {
    std::vector<std::uint64_t> row(grid.begin() + j * K,
                                   grid.begin() + (j + 1) * K);
    std::vector<FieldElem> coeffs;
    for (const std::uint64_t p : row)
      coeffs.push_back(eldetail::base_root(p, spec.field, prime_cap));
    out.cert.primes.push_back(std::move(row));
    if (spec.basis == CoeffBasis::PseudoMonomial) {
      comps.push_back(from_pseudo(coeffs, spec.n, spec.p));
    } else {
      Poly c(spec.n);
      for (int i = 0; i < K; ++i) c.add_term(lattice[i], coeffs[i]);
      comps.push_back(std::move(c));
    }
  }
  out.map = PolyMap(std::move(comps));
  return out;
}

struct DetHardCertificate {
  int claimed_bound = 0;  // c_det(f) >= claimed_bound
  std::vector<std::uint64_t> primes;
  BigInt threshold;
  FieldKind field = FieldKind::Complex;
  bool compliant = true;
};

struct DetHardPolynomial {
  Poly poly;
  DetHardCertificate cert;
};

/// Degree-r polynomial in n variables with c_det >= m+1 (at compliant
/// primes): the first (n+1)m^2 + 1 lex-smallest monomial coefficients are
/// the KLPS coordinates, the remaining ones are 1.
inline DetHardPolynomial det_hard_polynomial(
    int n, int m, int r, FieldKind field, std::uint64_t min_prime = 0,
    std::uint64_t prime_cap = kDefaultPrimeCap) {
  if (n < 1 || m < 1 || r < 1)
    throw InvalidParams("det_hard_polynomial: parameters must be positive");
  const BigInt ncoeff = binomial(r + n, n);
  const BigInt unknowns = BigInt(n + 1) * m * m;
  if (ncoeff - 1 < unknowns)
    throw InvalidParams("det_hard_polynomial: binom(r+n,n) - 1 < (n+1)m^2");

  DetHardPolynomial out;
  out.cert.claimed_bound = m + 1;
  out.cert.field = field;
  const BigInt D = effective_degree_bound(
      static_cast<int>(unknowns.get_ui()), m);
  out.cert.threshold =
      field == FieldKind::Complex ? BigInt(D + 2) : BigInt(2 * D + 3);
  BigInt start = out.cert.threshold;
  if (min_prime != 0) {
    start = BigInt(static_cast<unsigned long>(min_prime));
    out.cert.compliant = start >= out.cert.threshold;
  }
  const int ncyclo = static_cast<int>(unknowns.get_ui()) + 1;
  out.cert.primes = eldetail::primes_from(start, ncyclo, prime_cap);

  const auto lattice = monomials_up_to(n, r);  // lex-ascending = lambda order
  Poly f(n);
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (i < static_cast<std::size_t>(ncyclo))
      f.add_term(lattice[i],
                 eldetail::base_root(out.cert.primes[i], field, prime_cap));
    else
      f.add_term(lattice[i], FieldElem(1));
  }
  out.poly = std::move(f);
  return out;
}

/// Raz lift f~: F^{2n} -> F^n of f: F^n -> F^{n^2}:
/// f~_i(X, Z) = sum_j f_{ji}(X) Z_j, with f_{ji} = component (j-1) n + i.
inline PolyMap raz_lift(const PolyMap& f) {
  const int n = f.nvars();
  if (f.dim() != n * n)
    throw NotASquare("raz_lift: target dimension must be nvars^2");
  std::vector<Poly> comps;
  for (int i = 0; i < n; ++i) {
    Poly c(2 * n);
    for (int j = 0; j < n; ++j)
      c += f.components[j * n + i].shifted(2 * n, 0) *
           Poly::variable(2 * n, n + j);
    comps.push_back(std::move(c));
  }
  return PolyMap(std::move(comps));
}

/// f^: the scalar sum_i f~_i(X, Z) Y_i in nvars + dim variables.
inline Poly flatten_to_scalar(const PolyMap& ft) {
  const int nv = ft.nvars() + ft.dim();
  Poly out(nv);
  for (int i = 0; i < ft.dim(); ++i)
    out += ft.components[i].shifted(nv, 0) * Poly::variable(nv, ft.nvars() + i);
  return out;
}

struct ScheduleC45 {
  int n, p, m, s;
  std::string claimed_size_bound;  // recorded, not verified
  bool degenerate = false;         // s = 0
};

/// Parameter schedule n = 5 n' r, p = 5r, m = n'^2, s = floor(n'^2 / 2);
/// valid for n' >= r^2.
inline ScheduleC45 schedule_c45(int n_prime, int r) {
  if (n_prime < 1 || r < 1) throw InvalidParams("schedule_c45: positive input");
  if (n_prime < r * r) throw InvalidParams("schedule_c45: need n' >= r^2");
  ScheduleC45 out{5 * n_prime * r, 5 * r, n_prime * n_prime,
                  n_prime * n_prime / 2, "", false};
  out.claimed_size_bound =
      "n^2/(50 r^2) = " + std::to_string(out.n) + "^2/" +
      std::to_string(50 * r * r);
  out.degenerate = out.s == 0;
  return out;
}

struct ScheduleSuper {
  BigInt s, m;
  int p, r;
  bool side_condition_ok = true;  // (n + r - 4)^4 >= r!
};

/// Parameter schedule s = (floor(n / ((r'-1) r')))^{r'-3},
/// m = n binom(n-1+r', r'), p = (r'-1)(2r'-1), with r = 2r'-1;
/// valid for r' >= 4.
inline ScheduleSuper schedule_super(int n, int r_prime) {
  if (r_prime < 4) throw InvalidParams("schedule_super: need r' >= 4");
  if (n < 1) throw InvalidParams("schedule_super: need n >= 1");
  ScheduleSuper out;
  out.r = 2 * r_prime - 1;
  out.p = (r_prime - 1) * (2 * r_prime - 1);
  const long base = n / ((r_prime - 1) * r_prime);
  BigInt s;
  mpz_ui_pow_ui(s.get_mpz_t(), base < 0 ? 0 : base, r_prime - 3);
  out.s = s;
  out.m = BigInt(n) * binomial(n - 1 + r_prime, r_prime);
  BigInt lhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), std::max(n + out.r - 4, 0), 4);
  BigInt rfact;
  mpz_fac_ui(rfact.get_mpz_t(), out.r);
  out.side_condition_ok = lhs >= rfact;
  if (!out.side_condition_ok)
    throw InvalidParams("schedule_super: side condition (n+r-4)^4 >= r! fails");
  return out;
}

/// Decides (s,r)-elusiveness of the tuple by the Nullstellensatz: S-bar is
/// elusive iff it is off the image of Ev^k_{r,s,m}, with the coefficients
/// of g and the k preimage points as unknowns.
inline bool is_elusive_bruteforce(const KTuple& S, int s, int r,
                                  const Budget& budget = Budget::standard()) {
  S.validate();
  if (s < 0 || r < 0) throw InvalidParams("is_elusive_bruteforce: s, r >= 0");
  if (S.points.empty()) throw InvalidParams("is_elusive_bruteforce: empty tuple");
  if (s == 0) {
    // image of Ev is the diagonal: constant maps only
    for (const auto& p : S.points)
      if (p != S.points[0]) return true;
    return false;
  }
  EvMapSpec spec{S.k(), r, s, S.m};
  const PolyMap ev = ev_polynomial_map(spec);
  const std::vector<FieldElem> target = S.flattened();
  std::vector<std::pair<Poly, FieldElem>> system;
  for (int i = 0; i < ev.dim(); ++i)
    system.emplace_back(ev.components[i], target[i]);
  return !solvable_over_C(system, budget);
}

/// Is f strongly (s_probe, r)-elusive: its values on the simplex lattice
/// of its own degree form an (s_probe, r)-elusive tuple.
inline bool strong_elusiveness(const PolyMap& f, int r, int s_probe,
                               const Budget& budget = Budget::standard()) {
  KTuple S;
  S.m = f.dim();
  for (const auto& q : simplex_lattice(f.nvars(), f.degree()).points)
    S.points.push_back(f.eval(detail::as_field_point(q)));
  return is_elusive_bruteforce(S, s_probe, r, budget);
}

/// The moment curve t -> (t, t^2, ..., t^m).
inline PolyMap moment_curve(int m) {
  if (m < 1) throw InvalidParams("moment_curve: need m >= 1");
  std::vector<Poly> comps;
  for (int i = 1; i <= m; ++i)
    comps.push_back(Poly::term(1, Monomial{i}, FieldElem(1)));
  return PolyMap(std::move(comps));
}

}  // namespace polyac
