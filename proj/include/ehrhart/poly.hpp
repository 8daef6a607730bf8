#pragma once

#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

/// Dense univariate polynomial over Rational in the variable n.
/// Coefficient i is the coefficient of n^i. Never stores trailing zeros;
/// the zero polynomial is the empty list and has no degree.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly constant(const Rational& c) { return Poly({c}); }

  /// c * n^k
  static Poly monomial(int k, const Rational& c = Rational(1)) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v[static_cast<size_t>(k)] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }

  /// Highest power with a nonzero coefficient; nullopt for the zero polynomial.
  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  const Rational& coeff(int i) const {
    static const Rational zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
  }

  const std::vector<Rational>& coeffs() const { return c_; }

  const Rational& leading() const {
    if (c_.empty()) throw std::invalid_argument("Poly: zero polynomial has no leading coefficient");
    return c_.back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(Poly p, const Rational& c) {
    if (c.is_zero()) return Poly();
    for (auto& x : p.c_) x *= c;
    return p;
  }
  friend Poly operator*(const Rational& c, Poly p) { return std::move(p) * c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Exact evaluation by Horner's rule.
  Rational eval(const Rational& x) const {
    Rational acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(r));
  }

  /// Per-power serialization: entry i is coeff(i) as "p/q".
  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
  }

  /// Human-readable form, highest power first, e.g. "7/2n^2 + 7/2n + 1".
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
      const Rational& c = c_[i];
      if (c.is_zero()) continue;
      Rational a = abs(c);
      if (first) {
        if (c.sign() < 0) os << "-";
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      if (i == 0) {
        os << a.str();
      } else {
        if (a != Rational(1)) os << a.str();
        os << "n";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace detail {

/// Integer coefficients of prod_{j=0}^{d-1} (a*n + b - j), ascending powers.
inline std::vector<Int> linear_product(const Int& a, const Int& b, int d) {
  std::vector<Int> c{Int(1)};
  c.reserve(static_cast<size_t>(d) + 1);
  for (int j = 0; j < d; ++j) {
    const Int t = b - j;
    c.emplace_back(0);
    for (size_t k = c.size() - 1; k > 0; --k) c[k] = a * c[k - 1] + t * c[k];
    c[0] *= t;
  }
  return c;
}

}  // namespace detail

/// The degree-<=d polynomial C(a*n + b, d) = (1/d!) * prod_{j=0}^{d-1} (a*n + b - j).
inline Poly binom_linear(const Int& a, const Int& b, int d) {
  if (d < 0) throw std::invalid_argument("binom_linear: d must be nonnegative");
  std::vector<Int> num = detail::linear_product(a, b, d);
  const Int dfact = factorial(static_cast<unsigned long>(d));
  std::vector<Rational> coeffs;
  coeffs.reserve(num.size());
  for (const auto& x : num) coeffs.emplace_back(x, dfact);
  return Poly(std::move(coeffs));
}

/// Unique polynomial of degree < #points through all (x, y) pairs, by Newton
/// divided differences. All x must be distinct.
inline Poly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  if (points.empty()) throw std::invalid_argument("lagrange_interpolate: needs at least one point");
  const size_t k = points.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("lagrange_interpolate: duplicate x value " +
                                    points[i].first.str());

  std::vector<Rational> dd(k);
  for (size_t i = 0; i < k; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < k; ++level)
    for (size_t i = k - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

  // Horner expansion of the Newton form.
  Poly p = Poly::constant(dd[k - 1]);
  for (size_t i = k - 1; i-- > 0;) {
    Poly lin({-points[i].first, Rational(1)});
    p = p * lin + Poly::constant(dd[i]);
  }
  return p;
}

/// Exact division with remainder: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
  const int db = *b.degree();
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  int dr = a.is_zero() ? -1 : *a.degree();
  if (dr < db) return {Poly(), a};
  std::vector<Rational> quot(static_cast<size_t>(dr - db) + 1);
  while (dr >= db) {
    Rational f = rem[static_cast<size_t>(dr)] / b.leading();
    quot[static_cast<size_t>(dr - db)] = f;
    for (int i = 0; i <= db; ++i)
      rem[static_cast<size_t>(dr - db + i)] -= f * b.coeff(i);
    rem[static_cast<size_t>(dr)] = Rational(0);
    while (dr >= 0 && rem[static_cast<size_t>(dr)].is_zero()) --dr;
  }
  rem.resize(static_cast<size_t>(dr + 1));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Scales by a positive rational so coefficients become coprime integers.
/// Positive scaling keeps every sign, so Sturm chains may use this freely.
inline Poly make_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Int l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  Int g(0);
  for (const auto& c : p.coeffs()) g = gcd(g, Int(c.num() * (l / c.den())));
  return p * Rational(l, g);
}

/// Primitive gcd with positive leading coefficient; gcd(p, 0) = p (normalized).
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = make_primitive(a);
  Poly y = make_primitive(b);
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = make_primitive(r);
  }
  if (!x.is_zero() && x.leading().sign() < 0) x = -x;
  return x;
}

/// p divided by gcd(p, p'): same roots, all simple.
inline Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  Poly g = poly_gcd(p, p.derivative());
  auto [q, r] = poly_divmod(p, g);
  if (!r.is_zero()) throw std::logic_error("squarefree_part: gcd does not divide input");
  return q;
}

}  // namespace ehrhart
