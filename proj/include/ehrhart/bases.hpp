#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart/poly.hpp"

namespace ehrhart {

/// Expansion of a degree-<=d polynomial in the basis {n^i (1+n)^(d-i)}.
/// The ambient degree d is part of the value: the same polynomial has
/// different coefficients for different d.
struct MagicForm {
  int d = 0;
  std::vector<Rational> a;  // a_0 .. a_d
};

/// Coefficients h*_0 .. h*_d of the binomial-basis expansion
/// p(n) = sum_j h*_j C(n+d-j, d).
struct HStarVector {
  int d = 0;
  std::vector<Rational> h;
};

struct MagicVerdict {
  bool positive = true;
  std::vector<std::pair<int, Rational>> negative_witnesses;  // (index, value)
};

namespace detail {

inline void check_form_size(int d, size_t n, const char* what) {
  if (d < 0 || n != static_cast<size_t>(d) + 1)
    throw std::invalid_argument(std::string(what) + ": coefficient list does not match degree");
}

/// Numerators of p over the common denominator L, padded to d+1 entries.
inline std::pair<std::vector<Int>, Int> common_denominator(const Poly& p, int d) {
  Int l(1);
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<Int> num(static_cast<size_t>(d) + 1, Int(0));
  for (size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    num[k] = c.num() * (l / c.den());
  }
  return {std::move(num), std::move(l)};
}

}  // namespace detail

/// Change of basis n^k = n^k ((n+1) - n)^(d-k):
/// a_i = sum_{k<=i} c_k (-1)^(i-k) C(d-k, i-k).
inline MagicForm power_to_magic(const Poly& p, int d) {
  if (d < 0) throw std::invalid_argument("power_to_magic: d must be nonnegative");
  if (!p.is_zero() && *p.degree() > d)
    throw std::invalid_argument("power_to_magic: polynomial degree exceeds ambient degree");
  auto [num, l] = detail::common_denominator(p, d);
  MagicForm m;
  m.d = d;
  m.a.resize(static_cast<size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    Int acc(0);
    for (int k = 0; k <= i; ++k) {
      if (num[static_cast<size_t>(k)] == 0) continue;
      Int t = num[static_cast<size_t>(k)] *
              big_binom(static_cast<unsigned long>(d - k), static_cast<unsigned long>(i - k));
      if ((i - k) % 2) acc -= t; else acc += t;
    }
    m.a[static_cast<size_t>(i)] = Rational(acc, l);
  }
  return m;
}

/// Expands sum_i a_i n^i (1+n)^(d-i): c_m = sum_{i<=m} a_i C(d-i, m-i).
inline Poly magic_to_power(const MagicForm& m) {
  detail::check_form_size(m.d, m.a.size(), "magic_to_power");
  Int l(1);
  for (const auto& c : m.a) l = lcm(l, c.den());
  std::vector<Int> num(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) num[i] = m.a[i].num() * (l / m.a[i].den());
  std::vector<Rational> c(static_cast<size_t>(m.d) + 1);
  for (int k = 0; k <= m.d; ++k) {
    Int acc(0);
    for (int i = 0; i <= k; ++i) {
      if (num[static_cast<size_t>(i)] == 0) continue;
      acc += num[static_cast<size_t>(i)] *
             big_binom(static_cast<unsigned long>(m.d - i), static_cast<unsigned long>(k - i));
    }
    c[static_cast<size_t>(k)] = Rational(acc, l);
  }
  return Poly(std::move(c));
}

/// Positive iff every a_i >= 0; otherwise lists every negative index with its
/// exact value.
inline MagicVerdict is_magic_positive(const MagicForm& m) {
  detail::check_form_size(m.d, m.a.size(), "is_magic_positive");
  MagicVerdict v;
  for (size_t i = 0; i < m.a.size(); ++i)
    if (m.a[i].sign() < 0) {
      v.positive = false;
      v.negative_witnesses.emplace_back(static_cast<int>(i), m.a[i]);
    }
  return v;
}

inline bool is_palindromic(const MagicForm& m) {
  detail::check_form_size(m.d, m.a.size(), "is_palindromic");
  for (size_t i = 0, j = m.a.size() - 1; i < j; ++i, --j)
    if (m.a[i] != m.a[j]) return false;
  return true;
}

/// Inversion h*_j = sum_{i<=j} (-1)^i C(d+1, i) p(j-i). The result is
/// re-checked against the defining identity at n = 0..d before returning.
inline HStarVector power_to_hstar(const Poly& p, int d) {
  if (d < 0) throw std::invalid_argument("power_to_hstar: d must be nonnegative");
  if (!p.is_zero() && *p.degree() > d)
    throw std::invalid_argument("power_to_hstar: polynomial degree exceeds ambient degree");
  std::vector<Rational> values(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) values[static_cast<size_t>(n)] = p.eval(Rational(static_cast<long>(n)));
  HStarVector h;
  h.d = d;
  h.h.resize(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    Rational acc;
    for (int i = 0; i <= j; ++i) {
      Rational t = Rational(big_binom(static_cast<unsigned long>(d + 1),
                                      static_cast<unsigned long>(i))) *
                   values[static_cast<size_t>(j - i)];
      if (i % 2) acc -= t; else acc += t;
    }
    h.h[static_cast<size_t>(j)] = acc;
  }
  // sum_j h_j C(n+d-j, d) must reproduce p at d+1 points.
  for (int n = 0; n <= d; ++n) {
    Rational s;
    for (int j = 0; j <= d; ++j)
      s += h.h[static_cast<size_t>(j)] *
           Rational(big_binom(static_cast<unsigned long>(n + d - j), static_cast<unsigned long>(d)));
    if (s != values[static_cast<size_t>(n)])
      throw std::logic_error("power_to_hstar: binomial-basis identity failed at n=" + std::to_string(n));
  }
  return h;
}

inline Poly hstar_to_power(const HStarVector& h) {
  detail::check_form_size(h.d, h.h.size(), "hstar_to_power");
  Poly p;
  for (int j = 0; j <= h.d; ++j) {
    if (h.h[static_cast<size_t>(j)].is_zero()) continue;
    p += binom_linear(Int(1), Int(h.d - j), h.d) * h.h[static_cast<size_t>(j)];
  }
  return p;
}

}  // namespace ehrhart
