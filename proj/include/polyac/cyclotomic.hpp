#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polyac/errors.hpp"
#include "polyac/linalg.hpp"
#include "polyac/rational.hpp"

namespace polyac {

/// Default refusal threshold for primes indexing cyclotomic extensions.
inline constexpr std::uint64_t kDefaultPrimeCap = 1000000;

/// Cap on the Q-dimension of the ambient field for dense operations
/// (inverse, minimal polynomial).  Sparse ring operations are not capped.
inline constexpr std::uint64_t kMaxDenseFieldDegree = 4096;

/// Element of a compositum Q(zeta_{p_1}, ..., zeta_{p_t}) for distinct odd
/// primes p_i, written in the tensor power basis
/// zeta_{p_1}^{e_1} ... zeta_{p_t}^{e_t} with 0 <= e_i <= p_i - 2.
/// The relation 1 + zeta + ... + zeta^{p-1} = 0 eliminates exponent p-1.
/// Canonical form: no zero coefficients, no unused primes.
class CycloElem {
 public:
  using Exps = std::vector<unsigned>;
  using TermMap = std::map<Exps, Rational>;

  CycloElem() = default;
  explicit CycloElem(const Rational& r) {
    if (!r.is_zero()) coeffs_[{}] = r;
  }

  /// zeta_p for an odd prime p.
  static CycloElem root_of_unity(std::uint64_t p,
                                 std::uint64_t prime_cap = kDefaultPrimeCap) {
    if (p < 3 || next_prime(p) != p)
      throw NotPrime("root_of_unity: " + std::to_string(p) +
                     " is not an odd prime");
    if (p > prime_cap)
      throw PrimeCapExceeded("root_of_unity: prime " + std::to_string(p) +
                             " exceeds cap " + std::to_string(prime_cap));
    CycloElem e;
    e.primes_ = {static_cast<unsigned>(p)};
    e.coeffs_[{1}] = Rational(1);
    return e;
  }

  const std::vector<unsigned>& primes() const { return primes_; }
  const TermMap& terms() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const {
    return coeffs_.empty() ||
           (coeffs_.size() == 1 &&
            coeffs_.begin()->first == Exps(primes_.size(), 0));
  }
  Rational rational_value() const {
    if (is_zero()) return Rational(0);
    if (!is_rational()) throw InvalidParams("not a rational element");
    return coeffs_.begin()->second;
  }

  CycloElem operator-() const {
    CycloElem r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
  }

  CycloElem operator+(const CycloElem& o) const {
    auto [a, b, primes] = aligned(*this, o);
    CycloElem r;
    r.primes_ = primes;
    r.coeffs_ = std::move(a);
    for (auto& [e, c] : b) {
      auto it = r.coeffs_.find(e);
      if (it == r.coeffs_.end()) {
        r.coeffs_.emplace(e, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
    r.strip_unused_primes();
    return r;
  }

  CycloElem operator-(const CycloElem& o) const { return *this + (-o); }

  CycloElem operator*(const CycloElem& o) const {
    auto [a, b, primes] = aligned(*this, o);
    CycloElem r;
    r.primes_ = primes;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        Exps e(primes.size());
        for (std::size_t i = 0; i < primes.size(); ++i) e[i] = ea[i] + eb[i];
        add_reduced(r.coeffs_, std::move(e), ca * cb, primes);
      }
    }
    r.strip_unused_primes();
    return r;
  }

  bool operator==(const CycloElem& o) const {
    auto [a, b, primes] = aligned(*this, o);
    (void)primes;
    return a == b;
  }
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  /// Complex conjugation: zeta_p -> zeta_p^{p-1}, extended multiplicatively.
  CycloElem conj() const {
    CycloElem r;
    r.primes_ = primes_;
    for (const auto& [e, c] : coeffs_) {
      Exps inv(e.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        inv[i] = e[i] == 0 ? 0 : primes_[i] - e[i];
      add_reduced(r.coeffs_, std::move(inv), c, primes_);
    }
    r.strip_unused_primes();
    return r;
  }

  /// (x + conj(x)) / 2.
  CycloElem real_part() const {
    CycloElem s = *this + conj();
    for (auto& [e, c] : s.coeffs_) c = c * Rational(1, 2);
    return s;
  }

  /// Multiplicative inverse via a dense linear solve over the power basis.
  CycloElem inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return CycloElem(rational_value().inverse());
    const std::vector<Exps> basis = power_basis();
    const std::size_t d = basis.size();
    std::map<Exps, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index[basis[i]] = i;
    // column j = coordinates of (this * basis_j)
    Matrix<Rational> m(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
      TermMap prod;
      for (const auto& [e, c] : coeffs_) {
        Exps sum(primes_.size());
        for (std::size_t i = 0; i < primes_.size(); ++i)
          sum[i] = e[i] + basis[j][i];
        add_reduced(prod, std::move(sum), c, primes_);
      }
      for (const auto& [e, c] : prod) m[index.at(e)][j] = c;
    }
    std::vector<Rational> rhs(d, Rational(0));
    rhs[index.at(Exps(primes_.size(), 0))] = Rational(1);
    auto x = solve(m, rhs);
    if (!x) throw DivisionByZero();  // cannot happen in a field
    CycloElem r;
    r.primes_ = primes_;
    for (std::size_t i = 0; i < d; ++i)
      if (!(*x)[i].is_zero()) r.coeffs_[basis[i]] = (*x)[i];
    r.strip_unused_primes();
    return r;
  }

  /// Degree of the minimal polynomial over Q.
  unsigned minimal_poly_degree() const {
    if (is_zero()) throw InvalidParams("minimal_poly_degree of zero");
    if (is_rational()) return 1;
    const std::vector<Exps> basis = power_basis();
    const std::size_t d = basis.size();
    std::map<Exps, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index[basis[i]] = i;
    // Powers 1, x, x^2, ... until the rank stops growing.
    Matrix<Rational> rows;
    for (unsigned k = 1;; ++k) {
      rows.clear();
      CycloElem acc{Rational(1)};
      for (unsigned i = 0; i <= k; ++i) {
        std::vector<Rational> row(d, Rational(0));
        CycloElem embedded = acc;
        embedded.embed(primes_);
        for (const auto& [e, c] : embedded.coeffs_) row[index.at(e)] = c;
        rows.push_back(std::move(row));
        if (i < k) acc = acc * *this;
      }
      if (rank(rows) <= k) return k;
      if (k >= d) throw Error("minimal_poly_degree: no relation found");
    }
  }

  /// Numerical embedding (first complex embedding zeta_p -> e^{2 pi i / p}).
  std::complex<double> to_complex() const {
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> sum = 0;
    for (const auto& [e, c] : coeffs_) {
      std::complex<double> term = c.to_double();
      for (std::size_t i = 0; i < primes_.size(); ++i) {
        const double theta = two_pi * e[i] / primes_[i];
        term *= std::complex<double>(std::cos(theta), std::sin(theta));
      }
      sum += term;
    }
    return sum;
  }

  /// Re-expresses the element over a superset of its prime list.
  void embed(const std::vector<unsigned>& primes) {
    if (primes == primes_) return;
    TermMap out;
    for (const auto& [e, c] : coeffs_) {
      Exps ne(primes.size(), 0);
      std::size_t k = 0;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (k < primes_.size() && primes_[k] == primes[i]) ne[i] = e[k++];
      if (k != primes_.size())
        throw InvalidParams("embed: target prime list is not a superset");
      out.emplace(std::move(ne), c);
    }
    primes_ = primes;
    coeffs_ = std::move(out);
  }

  /// Q-dimension of the ambient compositum.
  BigInt field_degree() const {
    BigInt d = 1;
    for (unsigned p : primes_) d *= (p - 1);
    return d;
  }

 private:
  std::vector<unsigned> primes_;
  TermMap coeffs_;

  /// Adds c * zeta^e to acc, rewriting exponents into the canonical range.
  static void add_reduced(TermMap& acc, Exps e, const Rational& c,
                          const std::vector<unsigned>& primes) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const unsigned p = primes[i];
      e[i] %= p;
      if (e[i] == p - 1) {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (unsigned j = 0; j + 1 < p; ++j) {
          Exps e2 = e;
          e2[i] = j;
          add_reduced(acc, std::move(e2), -c, primes);
        }
        return;
      }
    }
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(std::move(e), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
  }

  void strip_unused_primes() {
    std::vector<bool> used(primes_.size(), false);
    for (const auto& [e, c] : coeffs_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<unsigned> np;
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (used[i]) np.push_back(primes_[i]);
    TermMap out;
    for (const auto& [e, c] : coeffs_) {
      Exps ne;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (used[i]) ne.push_back(e[i]);
      out.emplace(std::move(ne), c);
    }
    primes_ = std::move(np);
    coeffs_ = std::move(out);
  }

  std::vector<Exps> power_basis() const {
    if (field_degree() > kMaxDenseFieldDegree)
      throw BudgetExceeded("cyclotomic field degree " + field_degree().get_str() +
                           " exceeds dense-operation cap");
    std::vector<Exps> basis{{}};
    for (unsigned p : primes_) {
      std::vector<Exps> next;
      next.reserve(basis.size() * (p - 1));
      for (const auto& b : basis)
        for (unsigned e = 0; e + 1 < p; ++e) {
          Exps ne = b;
          ne.push_back(e);
          next.push_back(std::move(ne));
        }
      basis = std::move(next);
    }
    return basis;
  }

  /// Embeds both operands into the union prime list.
  static std::tuple<TermMap, TermMap, std::vector<unsigned>> aligned(
      const CycloElem& a, const CycloElem& b) {
    std::vector<unsigned> primes;
    std::set_union(a.primes_.begin(), a.primes_.end(), b.primes_.begin(),
                   b.primes_.end(), std::back_inserter(primes));
    CycloElem ea = a, eb = b;
    ea.embed(primes);
    eb.embed(primes);
    return {std::move(ea.coeffs_), std::move(eb.coeffs_), std::move(primes)};
  }
};

}  // namespace polyac
