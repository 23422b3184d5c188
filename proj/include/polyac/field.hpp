#pragma once

#include <complex>
#include <variant>

#include "polyac/cyclotomic.hpp"
#include "polyac/rational.hpp"

namespace polyac {

/// Exact scalar: a rational or a cyclotomic field element.  A cyclotomic
/// value whose only term is the empty power product normalizes back to
/// the Rational alternative, so equality is structural.
class FieldElem {
 public:
  FieldElem() : v_(Rational(0)) {}
  FieldElem(long n) : v_(Rational(n)) {}  // NOLINT: implicit by design
  FieldElem(const Rational& r) : v_(r) {}  // NOLINT
  FieldElem(const CycloElem& c) {  // NOLINT
    if (c.is_rational())
      v_ = c.rational_value();
    else
      v_ = c;
  }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_zero() const {
    return is_rational() && std::get<Rational>(v_).is_zero();
  }
  bool is_one() const {
    return is_rational() && std::get<Rational>(v_).is_one();
  }

  const Rational& rational() const {
    if (!is_rational()) throw InvalidParams("FieldElem is not rational");
    return std::get<Rational>(v_);
  }

  CycloElem cyclo() const {
    if (is_rational()) return CycloElem(std::get<Rational>(v_));
    return std::get<CycloElem>(v_);
  }

  FieldElem operator-() const {
    if (is_rational()) return FieldElem(-std::get<Rational>(v_));
    return FieldElem(-std::get<CycloElem>(v_));
  }
  FieldElem operator+(const FieldElem& o) const {
    if (is_rational() && o.is_rational())
      return FieldElem(rational() + o.rational());
    return FieldElem(cyclo() + o.cyclo());
  }
  FieldElem operator-(const FieldElem& o) const {
    if (is_rational() && o.is_rational())
      return FieldElem(rational() - o.rational());
    return FieldElem(cyclo() - o.cyclo());
  }
  FieldElem operator*(const FieldElem& o) const {
    if (is_rational() && o.is_rational())
      return FieldElem(rational() * o.rational());
    if (is_zero() || o.is_zero()) return FieldElem();
    return FieldElem(cyclo() * o.cyclo());
  }
  FieldElem inverse() const {
    if (is_rational()) return FieldElem(rational().inverse());
    return FieldElem(std::get<CycloElem>(v_).inverse());
  }
  FieldElem operator/(const FieldElem& o) const {
    if (is_rational() && o.is_rational())
      return FieldElem(rational() / o.rational());
    return *this * o.inverse();
  }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

  bool operator==(const FieldElem& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return rational() == o.rational();
    return std::get<CycloElem>(v_) == std::get<CycloElem>(o.v_);
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem conj() const {
    if (is_rational()) return *this;
    return FieldElem(std::get<CycloElem>(v_).conj());
  }
  FieldElem real_part() const {
    if (is_rational()) return *this;
    return FieldElem(std::get<CycloElem>(v_).real_part());
  }

  unsigned minimal_poly_degree() const {
    if (is_rational()) {
      if (std::get<Rational>(v_).is_zero())
        throw InvalidParams("minimal_poly_degree of zero");
      return 1;
    }
    return std::get<CycloElem>(v_).minimal_poly_degree();
  }

  std::complex<double> to_complex() const {
    if (is_rational()) return {rational().to_double(), 0.0};
    return std::get<CycloElem>(v_).to_complex();
  }

  /// Deterministic total order, used only for canonical sorting of
  /// containers (not a field-compatible order).
  bool sort_less(const FieldElem& o) const {
    if (is_rational() != o.is_rational()) return is_rational();
    if (is_rational()) return rational() < o.rational();
    const auto& a = std::get<CycloElem>(v_);
    const auto& b = std::get<CycloElem>(o.v_);
    if (a.primes() != b.primes()) return a.primes() < b.primes();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
      if (ia->first != ib->first) return ia->first < ib->first;
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return a.terms().size() < b.terms().size();
  }

 private:
  std::variant<Rational, CycloElem> v_;
};

inline FieldElem root_of_unity(std::uint64_t p,
                               std::uint64_t prime_cap = kDefaultPrimeCap) {
  return FieldElem(CycloElem::root_of_unity(p, prime_cap));
}

}  // namespace polyac
