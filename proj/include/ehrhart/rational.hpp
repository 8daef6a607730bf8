#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace ehrhart {

/// Arbitrary-precision integer.
using Int = mpz_class;

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Exact binomial coefficient C(n, k); zero when k > n.
inline Int big_binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// zero is 0/1. All arithmetic is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  /// Parses "p/q" or "p" (base 10).
  static Rational parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    Rational r;
    if (mpq_set_str(r.q_.get_mpq_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    if (r.q_.get_den() == 0)
      throw std::invalid_argument("Rational: zero denominator in \"" + s + "\"");
    r.q_.canonicalize();
    return r;
  }

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return q_.get_str(); }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend Rational abs(const Rational& a) {
    Rational r;
    r.q_ = abs(a.q_);
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class q_;
};

}  // namespace ehrhart
