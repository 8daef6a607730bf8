#pragma once

#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/poly.hpp"

namespace ehrhart {

/// Polytope families with closed-form Ehrhart polynomials. For the graph
/// families (tree, complete, cycle) d is the dimension, i.e. one less than
/// the number of vertices of the underlying graph.
enum class Family {
  cross_dual,
  typeA_dual,
  typeC_dual,
  tree_dual,      // same polynomial as cross_dual
  complete_dual,  // same polynomial as typeA_dual
  stasheff_dual,
  cycle_dual,
};

struct FamilyId {
  Family kind = Family::cross_dual;
  int d = 0;
};

inline const char* family_prefix(Family f) {
  switch (f) {
    case Family::cross_dual: return "cross";
    case Family::typeA_dual: return "typeA";
    case Family::typeC_dual: return "typeC";
    case Family::tree_dual: return "tree";
    case Family::complete_dual: return "complete";
    case Family::stasheff_dual: return "stasheff";
    case Family::cycle_dual: return "cycle";
  }
  return "?";
}

inline std::string to_string(const FamilyId& id) {
  return std::string(family_prefix(id.kind)) + ":" + std::to_string(id.d);
}

/// Parses "cross:d", "typeA:d", "typeC:d", "stasheff:d", "cycle:d",
/// "tree:d", "complete:d".
inline FamilyId parse_family_id(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("family: expected \"name:d\", got \"" + s + "\"");
  const std::string name = s.substr(0, colon);
  const std::string dstr = s.substr(colon + 1);
  FamilyId id;
  if (name == "cross") id.kind = Family::cross_dual;
  else if (name == "typeA") id.kind = Family::typeA_dual;
  else if (name == "typeC") id.kind = Family::typeC_dual;
  else if (name == "tree") id.kind = Family::tree_dual;
  else if (name == "complete") id.kind = Family::complete_dual;
  else if (name == "stasheff") id.kind = Family::stasheff_dual;
  else if (name == "cycle") id.kind = Family::cycle_dual;
  else throw std::invalid_argument("family: unknown family \"" + name + "\"");
  size_t pos = 0;
  int d;
  try {
    d = std::stoi(dstr, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("family: bad dimension \"" + dstr + "\"");
  }
  if (pos != dstr.size() || d < 0)
    throw std::invalid_argument("family: bad dimension \"" + dstr + "\"");
  id.d = d;
  return id;
}

/// (2n+1)^d, the dual of the cross polytope (a cube).
inline Poly cross_dual(int d) {
  if (d < 0) throw std::invalid_argument("cross_dual: d must be nonnegative");
  std::vector<Rational> c(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    c[static_cast<size_t>(k)] = Rational(
        big_binom(static_cast<unsigned long>(d), static_cast<unsigned long>(k)) *
        int_pow(Int(2), static_cast<unsigned long>(k)));
  return Poly(std::move(c));
}

/// sum_{k=0}^{d} C(d+1, k) n^k, the dual of the type A root polytope.
inline Poly typeA_dual(int d) {
  if (d < 0) throw std::invalid_argument("typeA_dual: d must be nonnegative");
  std::vector<Rational> c(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    c[static_cast<size_t>(k)] =
        Rational(big_binom(static_cast<unsigned long>(d + 1), static_cast<unsigned long>(k)));
  return Poly(std::move(c));
}

/// (n+1)^d + n^d, the dual of the type C root polytope. Degenerate at d=0
/// where the closed form gives the constant 2.
inline Poly typeC_dual(int d) {
  if (d < 0) throw std::invalid_argument("typeC_dual: d must be nonnegative");
  std::vector<Rational> c(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    c[static_cast<size_t>(k)] =
        Rational(big_binom(static_cast<unsigned long>(d), static_cast<unsigned long>(k)));
  c[static_cast<size_t>(d)] += Rational(1);
  return Poly(std::move(c));
}

/// Ehrhart polynomial of the dual Stasheff polytope (associahedron dual),
/// by the recurrence E_d = (2n+1) E_{d-1} - (1/2) n (n+1) E_{d-2} with
/// E_0 = 1 and E_1 = 2n+1. Results are cached; the cache only grows and
/// entries are immutable once computed.
inline Poly stasheff_dual(int d) {
  if (d < 0) throw std::invalid_argument("stasheff_dual: d must be nonnegative");
  static std::mutex mu;
  static std::vector<Poly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.push_back(Poly::constant(Rational(1)));
    cache.push_back(Poly({Rational(1), Rational(2)}));
  }
  const Poly two_n_plus_1({Rational(1), Rational(2)});
  const Poly half_n_n_plus_1({Rational(0), Rational(1, 2), Rational(1, 2)});
  while (static_cast<int>(cache.size()) <= d) {
    const size_t k = cache.size();
    cache.push_back(two_n_plus_1 * cache[k - 1] - half_n_n_plus_1 * cache[k - 2]);
  }
  return cache[static_cast<size_t>(d)];
}

/// Ehrhart polynomial of the dual symmetric edge polytope of the cycle on
/// d+1 vertices:
///   sum_{i=0}^{floor(d/2)} (-1)^i C(d+1, i) C((d+1-2i)n + (d-i), d).
/// Accumulated over integers with a single division by d! at the end.
inline Poly cycle_dual(int d) {
  if (d < 1) throw std::invalid_argument("cycle_dual: d must be >= 1");
  std::vector<Int> acc(static_cast<size_t>(d) + 1, Int(0));
  for (int i = 0; i <= d / 2; ++i) {
    std::vector<Int> term = detail::linear_product(Int(d + 1 - 2 * i), Int(d - i), d);
    Int w = big_binom(static_cast<unsigned long>(d + 1), static_cast<unsigned long>(i));
    if (i % 2) w = -w;
    for (size_t k = 0; k < term.size(); ++k) acc[k] += w * term[k];
  }
  const Int dfact = factorial(static_cast<unsigned long>(d));
  std::vector<Rational> c;
  c.reserve(acc.size());
  for (const auto& x : acc) c.emplace_back(x, dfact);
  return Poly(std::move(c));
}

/// F_d(n) = E_d(n) - (1/2) n E_{d-1}(n) for the Stasheff duals; the sequence
/// whose positivity carries the induction for their magic positivity.
inline Poly stasheff_aux(int d) {
  if (d < 1) throw std::invalid_argument("stasheff_aux: d must be >= 1");
  const Poly half_n({Rational(0), Rational(1, 2)});
  return stasheff_dual(d) - half_n * stasheff_dual(d - 1);
}

inline Poly family_ehrhart(const FamilyId& id) {
  switch (id.kind) {
    case Family::cross_dual:
    case Family::tree_dual:
      return cross_dual(id.d);
    case Family::typeA_dual:
    case Family::complete_dual:
      return typeA_dual(id.d);
    case Family::typeC_dual:
      return typeC_dual(id.d);
    case Family::stasheff_dual:
      return stasheff_dual(id.d);
    case Family::cycle_dual:
      return cycle_dual(id.d);
  }
  throw std::logic_error("family_ehrhart: unreachable");
}

}  // namespace ehrhart
