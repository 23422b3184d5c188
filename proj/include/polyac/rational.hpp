#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "polyac/errors.hpp"

namespace polyac {

using BigInt = mpz_class;

/// Exact rational number.  Always canonical: positive denominator,
/// gcd(|num|, den) = 1, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw InvalidParams("bad rational: " + s);
    q.canonicalize();
    return Rational(q);
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1 / v_));
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  /// "p" when integral, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

inline Rational factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return Rational(r);
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Smallest prime >= lower, by trial division.  Desk scale only.
inline std::uint64_t next_prime(std::uint64_t lower) {
  if (lower < 2) throw InvalidParams("next_prime: lower must be >= 2");
  auto is_prime = [](std::uint64_t n) {
    if (n < 4) return n >= 2;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  };
  std::uint64_t n = lower;
  while (!is_prime(n)) ++n;
  return n;
}

}  // namespace polyac
