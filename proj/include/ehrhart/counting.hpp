#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ehrhart/errors.hpp"
#include "ehrhart/graph.hpp"
#include "ehrhart/poly.hpp"

namespace ehrhart {

/// Node cap for the enumeration counters. Exceeding it raises
/// BudgetExceeded; a partial count is never returned.
inline constexpr unsigned long long kDefaultBudget = 20'000'000ULL;

enum class CountMethod { brute, graph_dfs, bipartite_closed, minus_edge_closed };

inline const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::graph_dfs: return "graph_dfs";
    case CountMethod::bipartite_closed: return "bipartite_closed";
    case CountMethod::minus_edge_closed: return "minus_edge_closed";
  }
  return "?";
}

struct CountReport {
  long n = 0;
  Int count;
  CountMethod method = CountMethod::brute;
};

/// Lattice points of the n-th dilate of the dual Stasheff polytope:
/// x in [-n, n]^d with x_j + ... + x_k <= n for all 1 <= j < k <= d.
/// Plain depth-first enumeration; the only shortcut is the running minimum
/// of prefix sums, which turns the window constraints into one upper bound
/// per coordinate.
inline Int count_stasheff_dual(int d, long n, unsigned long long budget = kDefaultBudget) {
  if (d < 1) throw std::invalid_argument("count_stasheff_dual: d must be >= 1");
  if (n < 0) throw std::invalid_argument("count_stasheff_dual: n must be >= 0");
  unsigned long long nodes = 0, found = 0;
  std::vector<long> prefix(static_cast<size_t>(d) + 1, 0);   // prefix[t] = x_1 + ... + x_t
  std::vector<long> minpref(static_cast<size_t>(d) + 1, 0);  // min of prefix[0..t]
  auto rec = [&](auto&& self, int t) -> void {
    if (t > d) {
      ++found;
      return;
    }
    long hi = n;
    if (t >= 2) hi = std::min(hi, n + minpref[static_cast<size_t>(t - 2)] - prefix[static_cast<size_t>(t - 1)]);
    for (long x = -n; x <= hi; ++x) {
      if (++nodes > budget)
        throw BudgetExceeded("count_stasheff_dual: node budget exceeded", nodes);
      prefix[static_cast<size_t>(t)] = prefix[static_cast<size_t>(t - 1)] + x;
      minpref[static_cast<size_t>(t)] =
          std::min(minpref[static_cast<size_t>(t - 1)], prefix[static_cast<size_t>(t)]);
      self(self, t + 1);
    }
  };
  rec(rec, 1);
  return Int(static_cast<unsigned long>(found));
}

/// Lattice points of the n-th dilate of the dual symmetric edge polytope of
/// a cycle: x in [-n, n]^d with |x_1 + ... + x_d| <= n. Depth-first with a
/// reachability bound on the running sum.
inline Int count_cycle_dual(int d, long n, unsigned long long budget = kDefaultBudget) {
  if (d < 1) throw std::invalid_argument("count_cycle_dual: d must be >= 1");
  if (n < 0) throw std::invalid_argument("count_cycle_dual: n must be >= 0");
  unsigned long long nodes = 0, found = 0;
  auto rec = [&](auto&& self, int t, long sum) -> void {
    if (t > d) {
      ++found;
      return;
    }
    const long cap = n * static_cast<long>(d - t + 1);  // |sum| reachable after this level
    const long lo = std::max(-n, -cap - sum);
    const long hi = std::min(n, cap - sum);
    for (long x = lo; x <= hi; ++x) {
      if (++nodes > budget)
        throw BudgetExceeded("count_cycle_dual: node budget exceeded", nodes);
      self(self, t + 1, sum + x);
    }
  };
  rec(rec, 1, 0);
  return Int(static_cast<unsigned long>(found));
}

/// Lattice points of n * P_G^* in the root gauge: integer vertex labels y
/// with y_root = 0 and |y_u - y_v| <= n on every edge. Depth-first in BFS
/// order from the root; every unassigned vertex keeps the intersection of
/// [y_u - n, y_u + n] over its assigned neighbors and empty intervals prune.
inline Int count_graph_dual(const GraphSpec& g, long n, unsigned long long budget = kDefaultBudget) {
  g.validate();
  if (n < 0) throw std::invalid_argument("count_graph_dual: n must be >= 0");
  const int v = g.num_vertices;
  const auto adj = g.adjacency();

  std::vector<int> order;
  order.reserve(static_cast<size_t>(v));
  std::vector<int> pos(static_cast<size_t>(v), -1);
  order.push_back(g.root);
  pos[static_cast<size_t>(g.root)] = 0;
  for (size_t head = 0; head < order.size(); ++head)
    for (int w : adj[static_cast<size_t>(order[head])])
      if (pos[static_cast<size_t>(w)] < 0) {
        pos[static_cast<size_t>(w)] = static_cast<int>(order.size());
        order.push_back(w);
      }

  const long inf = n * static_cast<long>(v) + 1;
  std::vector<long> lo(static_cast<size_t>(v), -inf), hi(static_cast<size_t>(v), inf);
  lo[static_cast<size_t>(g.root)] = hi[static_cast<size_t>(g.root)] = 0;

  unsigned long long nodes = 0, found = 0;
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == v) {
      ++found;
      return;
    }
    const int u = order[static_cast<size_t>(idx)];
    const long ul = lo[static_cast<size_t>(u)], uh = hi[static_cast<size_t>(u)];
    for (long y = ul; y <= uh; ++y) {
      if (++nodes > budget)
        throw BudgetExceeded("count_graph_dual: node budget exceeded after " +
                                 std::to_string(nodes) + " nodes",
                             nodes);
      std::vector<std::tuple<int, long, long>> trail;
      bool dead = false;
      for (int w : adj[static_cast<size_t>(u)]) {
        if (pos[static_cast<size_t>(w)] <= idx) continue;  // already assigned
        trail.emplace_back(w, lo[static_cast<size_t>(w)], hi[static_cast<size_t>(w)]);
        lo[static_cast<size_t>(w)] = std::max(lo[static_cast<size_t>(w)], y - n);
        hi[static_cast<size_t>(w)] = std::min(hi[static_cast<size_t>(w)], y + n);
        if (lo[static_cast<size_t>(w)] > hi[static_cast<size_t>(w)]) {
          dead = true;
          break;
        }
      }
      if (!dead) self(self, idx + 1);
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        lo[static_cast<size_t>(std::get<0>(*it))] = std::get<1>(*it);
        hi[static_cast<size_t>(std::get<0>(*it))] = std::get<2>(*it);
      }
    }
  };
  rec(rec, 0);
  return Int(static_cast<unsigned long>(found));
}

/// N_k(s): integer k-tuples whose union with {0} has max - min exactly s.
/// N_k(0) = 1 and, for s >= 1,
///   N_k(s) = 2[(s+1)^k - s^k] + (s-1)[(s+1)^k - 2 s^k + (s-1)^k].
inline Int spread_count(int k, long s) {
  if (k < 0) throw std::invalid_argument("spread_count: k must be >= 0");
  if (s < 0) throw std::invalid_argument("spread_count: s must be >= 0");
  if (s == 0) return Int(1);
  const Int a = int_pow(Int(s + 1), static_cast<unsigned long>(k));
  const Int b = int_pow(Int(s), static_cast<unsigned long>(k));
  const Int c = int_pow(Int(s - 1), static_cast<unsigned long>(k));
  return Int(2 * (a - b) + (s - 1) * (a - 2 * b + c));
}

/// Dual symmetric edge polytope of K_{m,m2}, root on the size-m side. The
/// m-1 free root-side labels have spread s (together with the root's 0);
/// each far-side label then ranges over a window of width 2n+1-s.
inline Int count_bipartite_dual(int m, int m2, long n) {
  if (m < 1 || m2 < 1) throw std::invalid_argument("count_bipartite_dual: sides must be >= 1");
  if (n < 0) throw std::invalid_argument("count_bipartite_dual: n must be >= 0");
  Int total(0);
  for (long s = 0; s <= 2 * n; ++s)
    total += spread_count(m - 1, s) * int_pow(Int(2 * n + 1 - s), static_cast<unsigned long>(m2));
  return total;
}

/// Dual symmetric edge polytope of K_v minus one edge. The v-2 mutually
/// adjacent core vertices (root included) have spread s <= n; the two
/// endpoints of the missing edge range independently over windows of width
/// 2n+1-s.
inline Int count_complete_minus_edge_dual(int v, long n) {
  if (v < 4) throw std::invalid_argument("count_complete_minus_edge_dual: v must be >= 4");
  if (n < 0) throw std::invalid_argument("count_complete_minus_edge_dual: n must be >= 0");
  Int total(0);
  for (long s = 0; s <= n; ++s) {
    const Int w(2 * n + 1 - s);
    total += spread_count(v - 3, s) * w * w;
  }
  return total;
}

/// Lagrange interpolation of counter values at n = 0..degree, then a
/// mandatory over-sample check at degree+1. A mismatch (wrong degree or a
/// wrong counter) refuses to return a polynomial.
template <class Counter>
inline Poly ehrhart_from_counts(Counter&& counter, int degree) {
  if (degree < 0) throw std::invalid_argument("ehrhart_from_counts: degree must be >= 0");
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(static_cast<size_t>(degree) + 1);
  for (long x = 0; x <= degree; ++x) pts.emplace_back(Rational(x), Rational(Int(counter(x))));
  Poly p = lagrange_interpolate(pts);
  const long probe = degree + 1;
  const Int expect = counter(probe);
  const Rational got = p.eval(Rational(probe));
  if (got != Rational(expect))
    throw InterpolationMismatch("ehrhart_from_counts: interpolant gives " + got.str() +
                                " at n=" + std::to_string(probe) + " but the counter returns " +
                                expect.get_str());
  return p;
}

/// Routes a graph to its fastest exact counter.
inline CountReport count_graph_auto(const GraphSource& src, long n,
                                    unsigned long long budget = kDefaultBudget) {
  CountReport r;
  r.n = n;
  switch (src.shape) {
    case GraphSource::Shape::bipartite:
      r.count = count_bipartite_dual(src.p1, src.p2, n);
      r.method = CountMethod::bipartite_closed;
      return r;
    case GraphSource::Shape::minus_edge:
      r.count = count_complete_minus_edge_dual(src.p1, n);
      r.method = CountMethod::minus_edge_closed;
      return r;
    case GraphSource::Shape::generic:
      break;
  }
  r.count = count_graph_dual(src.spec, n, budget);
  r.method = CountMethod::graph_dfs;
  return r;
}

}  // namespace ehrhart
