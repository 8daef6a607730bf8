#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ehrhart/analysis.hpp"
#include "ehrhart/bases.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/families.hpp"
#include "ehrhart/poly.hpp"

namespace ehrhart {

struct SelfTestResult {
  std::string name;
  bool ok = false;
  std::string detail;  // first mismatch, empty when ok
};

namespace detail {

/// Brute-force N_k(s): odometer over [-s, s]^k, spread of the tuple with 0.
inline Int spread_count_brute(int k, long s) {
  std::vector<long> t(static_cast<size_t>(k), -s);
  unsigned long count = 0;
  while (true) {
    long mx = 0, mn = 0;
    for (long x : t) {
      mx = std::max(mx, x);
      mn = std::min(mn, x);
    }
    if (mx - mn == s) ++count;
    int i = 0;
    while (i < k && t[static_cast<size_t>(i)] == s) t[static_cast<size_t>(i++)] = -s;
    if (i == k) break;
    ++t[static_cast<size_t>(i)];
  }
  return Int(count);
}

inline bool integer_count_matches(const Poly& p, long n, const Int& count) {
  return p.eval(Rational(n)) == Rational(count);
}

}  // namespace detail

/// Cross-oracle consistency suite: recurrences vs counters, closed forms vs
/// the generic counter, basis round-trips, and the two bipartite /
/// minus-edge witnesses. Everything is exact; each entry reports the first
/// mismatch it finds.
inline std::vector<SelfTestResult> run_selftest() {
  std::vector<SelfTestResult> out;
  auto run = [&out](const std::string& name, const std::function<std::string()>& body) {
    SelfTestResult r;
    r.name = name;
    try {
      r.detail = body();
      r.ok = r.detail.empty();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  };

  run("stasheff_table", []() -> std::string {
    const std::vector<std::vector<Rational>> magic = {
        {1, {3, 2}, 1},
        {1, 2, 2, 1},
        {1, {5, 2}, {13, 4}, {5, 2}, 1},
        {1, 3, {19, 4}, {19, 4}, 3, 1},
    };
    for (int d = 2; d <= 5; ++d) {
      const MagicForm m = power_to_magic(stasheff_dual(d), d);
      if (m.a != magic[static_cast<size_t>(d - 2)])
        return "magic mismatch at d=" + std::to_string(d);
    }
    return "";
  });

  run("stasheff_recurrence", []() -> std::string {
    const Poly two_n_plus_1({1, 2});
    const Poly half_n_n1({0, {1, 2}, {1, 2}});
    for (int d = 2; d <= 30; ++d) {
      const Poly rhs = two_n_plus_1 * stasheff_dual(d - 1) - half_n_n1 * stasheff_dual(d - 2);
      if (stasheff_dual(d) != rhs) return "recurrence fails at d=" + std::to_string(d);
    }
    return "";
  });

  run("stasheff_counts", []() -> std::string {
    for (int d = 1; d <= 4; ++d)
      for (long n = 0; n <= 3; ++n)
        if (!detail::integer_count_matches(stasheff_dual(d), n, count_stasheff_dual(d, n)))
          return "mismatch at d=" + std::to_string(d) + " n=" + std::to_string(n);
    return "";
  });

  run("cycle_counts", []() -> std::string {
    for (int d = 1; d <= 5; ++d)
      for (long n = 0; n <= 3; ++n)
        if (!detail::integer_count_matches(cycle_dual(d), n, count_cycle_dual(d, n)))
          return "mismatch at d=" + std::to_string(d) + " n=" + std::to_string(n);
    return "";
  });

  run("family_aliases", []() -> std::string {
    if (cycle_dual(2) != typeA_dual(2)) return "cycle_dual(2) != typeA_dual(2)";
    for (int d = 0; d <= 8; ++d) {
      if (family_ehrhart({Family::tree_dual, d}) != cross_dual(d))
        return "tree alias fails at d=" + std::to_string(d);
      if (family_ehrhart({Family::complete_dual, d}) != typeA_dual(d))
        return "complete alias fails at d=" + std::to_string(d);
    }
    return "";
  });

  run("graph_counter_vs_closed_forms", []() -> std::string {
    for (long n = 0; n <= 3; ++n) {
      if (!detail::integer_count_matches(cross_dual(3), n, count_graph_dual(make_path(4), n)))
        return "path:4 mismatch at n=" + std::to_string(n);
      if (!detail::integer_count_matches(typeA_dual(2), n, count_graph_dual(make_complete(3), n)))
        return "complete:3 mismatch at n=" + std::to_string(n);
      if (!detail::integer_count_matches(cycle_dual(3), n, count_graph_dual(make_cycle(4), n)))
        return "cycle:4 mismatch at n=" + std::to_string(n);
    }
    return "";
  });

  run("root_gauge_independence", []() -> std::string {
    for (long n = 0; n <= 2; ++n) {
      GraphSpec g = make_complete_minus_edge(4);
      const Int ref = count_graph_dual(g, n);
      for (int r = 1; r < 4; ++r) {
        g.root = r;
        if (count_graph_dual(g, n) != ref)
          return "K4 minus edge differs at root=" + std::to_string(r) + " n=" + std::to_string(n);
      }
      GraphSpec c = make_cycle(5);
      const Int cref = count_graph_dual(c, n);
      for (int r = 1; r < 5; ++r) {
        c.root = r;
        if (count_graph_dual(c, n) != cref)
          return "cycle:5 differs at root=" + std::to_string(r) + " n=" + std::to_string(n);
      }
    }
    return "";
  });

  run("spread_closed_form", []() -> std::string {
    for (int k = 0; k <= 3; ++k)
      for (long s = 0; s <= 6; ++s)
        if (spread_count(k, s) != detail::spread_count_brute(k, s))
          return "mismatch at k=" + std::to_string(k) + " s=" + std::to_string(s);
    return "";
  });

  run("bipartite_vs_generic", []() -> std::string {
    const std::vector<std::pair<int, int>> shapes = {{2, 2}, {2, 3}, {3, 3}};
    for (auto [m, mm] : shapes)
      for (long n = 0; n <= 3; ++n)
        if (count_bipartite_dual(m, mm, n) != count_graph_dual(make_complete_bipartite(m, mm), n))
          return "K_{" + std::to_string(m) + "," + std::to_string(mm) + "} mismatch at n=" +
                 std::to_string(n);
    return "";
  });

  run("minus_edge_vs_generic", []() -> std::string {
    for (int v = 4; v <= 5; ++v)
      for (long n = 0; n <= 3; ++n)
        if (count_complete_minus_edge_dual(v, n) != count_graph_dual(make_complete_minus_edge(v), n))
          return "v=" + std::to_string(v) + " mismatch at n=" + std::to_string(n);
    return "";
  });

  run("complete_graph_spread_identity", []() -> std::string {
    for (int v = 2; v <= 6; ++v)
      for (long n = 0; n <= 5; ++n) {
        Int sum(0);
        for (long s = 0; s <= n; ++s) sum += spread_count(v - 1, s);
        if (Rational(sum) != typeA_dual(v - 1).eval(Rational(n)))
          return "v=" + std::to_string(v) + " mismatch at n=" + std::to_string(n);
      }
    return "";
  });

  run("k_bipartite_3_7_witness", []() -> std::string {
    const Poly p = ehrhart_from_counts([](long n) { return count_bipartite_dual(3, 7, n); }, 9);
    if (p.eval(Rational(1)) != Rational(2967)) return "E(1) != 2967";
    const MagicForm m = power_to_magic(p, 9);
    const Rational w(-142, 15);
    if (m.a[3] != w || m.a[6] != w) return "witness coefficients are not -142/15";
    if (!is_palindromic(m)) return "magic form not palindromic";
    const auto verdict = is_magic_positive(m);
    if (verdict.positive || verdict.negative_witnesses.size() != 2)
      return "expected exactly two negative witnesses";
    const HStarVector h = power_to_hstar(p, 9);
    if (!real_root_report(Poly(h.h)).real_rooted) return "h* not real-rooted";
    return "";
  });

  run("k10_minus_edge_witness", []() -> std::string {
    const Poly p =
        ehrhart_from_counts([](long n) { return count_complete_minus_edge_dual(10, n); }, 9);
    if (p.eval(Rational(1)) != Rational(1025)) return "E(1) != 1025";
    if (p.coeff(9) != Rational(92, 9)) return "leading coefficient != 92/9";
    const MagicForm m = power_to_magic(p, 9);
    const Rational w(-19, 45);
    if (m.a[3] != w || m.a[6] != w) return "witness coefficients are not -19/45";
    const HStarVector h = power_to_hstar(p, 9);
    if (!real_root_report(Poly(h.h)).real_rooted) return "h* not real-rooted";
    return "";
  });

  run("basis_round_trips", []() -> std::string {
    std::vector<std::pair<Poly, int>> cases;
    for (int d = 1; d <= 8; ++d) {
      cases.emplace_back(stasheff_dual(d), d);
      cases.emplace_back(cycle_dual(d), d);
      cases.emplace_back(cross_dual(d), d);
    }
    cases.emplace_back(Poly({{1, 3}, {-7, 2}, 0, 5}), 6);  // degenerate deg < d
    for (const auto& [p, d] : cases) {
      if (magic_to_power(power_to_magic(p, d)) != p) return "magic round trip fails for " + p.str();
      if (hstar_to_power(power_to_hstar(p, d)) != p) return "h* round trip fails for " + p.str();
    }
    return "";
  });

  run("cycle_subset_expansion", []() -> std::string {
    for (int d = 2; d <= 8; ++d) {
      const MagicForm m = power_to_magic(cycle_dual(d), d);
      for (int i = 0; i <= d; ++i)
        if (cycle_coeff_via_C(d, i) != m.a[static_cast<size_t>(i)])
          return "a_" + std::to_string(i) + " mismatch at d=" + std::to_string(d);
    }
    return "";
  });

  run("magic_positive_families", []() -> std::string {
    for (int d = 1; d <= 12; ++d) {
      if (!is_magic_positive(power_to_magic(stasheff_dual(d), d)).positive)
        return "stasheff:" + std::to_string(d) + " not positive";
      if (!is_magic_positive(power_to_magic(stasheff_aux(d), d)).positive)
        return "stasheff aux " + std::to_string(d) + " not positive";
    }
    for (int d = 1; d <= 20; ++d)
      if (!is_magic_positive(power_to_magic(cycle_dual(d), d)).positive)
        return "cycle:" + std::to_string(d) + " not positive";
    return "";
  });

  return out;
}

}  // namespace ehrhart
