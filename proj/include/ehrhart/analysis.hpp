#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ehrhart/bases.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/poly.hpp"

namespace ehrhart {

struct RootCountReport {
  int squarefree_degree = 0;
  int distinct_real_roots = 0;
  bool real_rooted = false;  // distinct_real_roots == squarefree_degree
};

namespace detail {

/// Signed remainder chain of a squarefree polynomial, every element scaled
/// primitive by a positive rational (positive scaling preserves signs).
inline std::vector<Poly> sturm_chain(const Poly& q) {
  std::vector<Poly> chain;
  chain.push_back(make_primitive(q));
  Poly dq = q.derivative();
  if (dq.is_zero()) return chain;
  chain.push_back(make_primitive(dq));
  while (*chain.back().degree() > 0) {
    Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;  // cannot happen for squarefree input
    chain.push_back(make_primitive(-r));
  }
  return chain;
}

inline int sign_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace detail

/// Exact count of distinct real roots via a Sturm chain of the squarefree
/// part, evaluated at -inf and +inf. Real-rooted means every root of the
/// squarefree part is real, so repeated real roots still qualify.
inline RootCountReport real_root_report(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("real_root_report: zero polynomial");
  const Poly q = squarefree_part(p);
  RootCountReport rep;
  rep.squarefree_degree = *q.degree();
  if (rep.squarefree_degree == 0) {
    rep.distinct_real_roots = 0;
    rep.real_rooted = true;
    return rep;
  }
  const auto chain = detail::sturm_chain(q);
  std::vector<int> at_pos, at_neg;
  at_pos.reserve(chain.size());
  at_neg.reserve(chain.size());
  for (const auto& s : chain) {
    const int lead = s.leading().sign();
    const int deg = *s.degree();
    at_pos.push_back(lead);
    at_neg.push_back(deg % 2 ? -lead : lead);
  }
  rep.distinct_real_roots =
      detail::sign_variations(at_neg) - detail::sign_variations(at_pos);
  rep.real_rooted = (rep.distinct_real_roots == rep.squarefree_degree);
  return rep;
}

struct SequenceFlags {
  bool nonnegative = true;
  bool log_concave = true;  // a_i^2 >= a_{i-1} a_{i+1} for all interior i
  bool unimodal = true;
  bool palindromic = true;
};

inline SequenceFlags sequence_checks(const std::vector<Rational>& seq) {
  SequenceFlags f;
  const size_t k = seq.size();
  for (const auto& a : seq)
    if (a.sign() < 0) f.nonnegative = false;
  for (size_t i = 1; i + 1 < k; ++i)
    if (seq[i] * seq[i] < seq[i - 1] * seq[i + 1]) f.log_concave = false;
  size_t i = 0;
  while (i + 1 < k && seq[i] <= seq[i + 1]) ++i;
  while (i + 1 < k && seq[i] >= seq[i + 1]) ++i;
  f.unimodal = (i + 1 >= k);
  for (size_t a = 0, b = k; b-- > a + 1; ++a)
    if (seq[a] != seq[b]) f.palindromic = false;
  return f;
}

// --- Per-subset expansion of the cycle dual's magic coefficients ----------
//
// C((d+1-2i)n + (d-i), d) = (1/d!) prod_{j=1}^{d} ((j-i) n + (d+1-j-i)(n+1));
// expanding each factor into its n or (n+1) part indexes the terms by the
// subset I of positions taking the (n+1) part. All values carry the 1/d!
// factor so that summing C_I over |I| = i reproduces the magic coefficients
// exactly.

namespace detail {

/// d! * B_i^I, as an integer:
/// (-1)^i C(d+1, i) prod_{j in I} (d+1-j-i) prod_{j notin I} (j-i).
inline Int cycle_B_numerator(int d, int i, const std::vector<char>& in_set) {
  Int prod = big_binom(static_cast<unsigned long>(d + 1), static_cast<unsigned long>(i));
  for (int j = 1; j <= d; ++j) {
    const long factor = in_set[static_cast<size_t>(j)] ? (d + 1 - j - i) : (j - i);
    if (factor == 0) return Int(0);
    prod *= factor;
  }
  if (i % 2) prod = -prod;
  return prod;
}

inline std::vector<char> subset_mask(int d, const std::vector<int>& subset) {
  std::vector<char> mask(static_cast<size_t>(d) + 1, 0);
  for (int j : subset) {
    if (j < 1 || j > d) throw std::invalid_argument("cycle coefficient: subset entry out of [1, d]");
    if (mask[static_cast<size_t>(j)]) throw std::invalid_argument("cycle coefficient: repeated subset entry");
    mask[static_cast<size_t>(j)] = 1;
  }
  return mask;
}

}  // namespace detail

/// B_i^I for the cycle on d+1 vertices; shift index 0 <= i <= floor(d/2).
/// Zero whenever i >= 1 and (i not in I or d+1-i in I).
inline Rational cycle_B_term(int d, int i, const std::vector<int>& subset) {
  if (d < 1) throw std::invalid_argument("cycle_B_term: d must be >= 1");
  if (i < 0 || i > d / 2) throw std::invalid_argument("cycle_B_term: shift index out of range");
  const auto mask = detail::subset_mask(d, subset);
  return Rational(detail::cycle_B_numerator(d, i, mask), factorial(static_cast<unsigned long>(d)));
}

/// C_I = sum_{i=0}^{floor(d/2)} B_i^I (the i = 0 term included).
inline Rational cycle_C(int d, const std::vector<int>& subset) {
  if (d < 1) throw std::invalid_argument("cycle_C: d must be >= 1");
  const auto mask = detail::subset_mask(d, subset);
  Int acc(0);
  for (int i = 0; i <= d / 2; ++i) acc += detail::cycle_B_numerator(d, i, mask);
  return Rational(acc, factorial(static_cast<unsigned long>(d)));
}

/// Magic coefficient a_i of cycle_dual(d) as the sum of C_I over all
/// i-element subsets of {1..d}. The enumeration refuses to start when
/// C(d, i) exceeds the budget.
inline Rational cycle_coeff_via_C(int d, int i,
                                  unsigned long long budget = 10'000'000ULL) {
  if (d < 1) throw std::invalid_argument("cycle_coeff_via_C: d must be >= 1");
  if (i < 0 || i > d) throw std::invalid_argument("cycle_coeff_via_C: index out of range");
  const Int nsub = big_binom(static_cast<unsigned long>(d), static_cast<unsigned long>(i));
  if (nsub > Int(static_cast<unsigned long>(budget)))
    throw BudgetExceeded("cycle_coeff_via_C: C(" + std::to_string(d) + ", " + std::to_string(i) +
                             ") = " + nsub.get_str() + " subsets exceed the budget",
                         budget);
  std::vector<char> mask(static_cast<size_t>(d) + 1, 0);
  std::vector<int> subset(static_cast<size_t>(i));
  for (int k = 0; k < i; ++k) {
    subset[static_cast<size_t>(k)] = k + 1;
    mask[static_cast<size_t>(k + 1)] = 1;
  }
  Int acc(0);
  const int half = d / 2;
  while (true) {
    for (int s = 0; s <= half; ++s) acc += detail::cycle_B_numerator(d, s, mask);
    // next i-combination of {1..d}
    int k = i - 1;
    while (k >= 0 && subset[static_cast<size_t>(k)] == d - (i - 1 - k)) --k;
    if (k < 0) break;
    mask[static_cast<size_t>(subset[static_cast<size_t>(k)])] = 0;
    ++subset[static_cast<size_t>(k)];
    mask[static_cast<size_t>(subset[static_cast<size_t>(k)])] = 1;
    for (int t = k + 1; t < i; ++t) {
      mask[static_cast<size_t>(subset[static_cast<size_t>(t)])] = 0;
      subset[static_cast<size_t>(t)] = subset[static_cast<size_t>(t - 1)] + 1;
      mask[static_cast<size_t>(subset[static_cast<size_t>(t)])] = 1;
    }
  }
  return Rational(acc, factorial(static_cast<unsigned long>(d)));
}

}  // namespace ehrhart
