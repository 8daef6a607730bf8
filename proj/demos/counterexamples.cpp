// Recovers the two graph duals whose Ehrhart polynomials fail magic
// positivity (K_{3,7} and K_10 minus an edge) from exact lattice-point
// counts, and shows that their h* vectors are still real-rooted.

#include <iostream>

#include "ehrhart/ehrhart.hpp"

using namespace ehrhart;

static void show(const std::string& name, const Poly& p, int d) {
  const MagicForm m = power_to_magic(p, d);
  const auto verdict = is_magic_positive(m);
  const HStarVector h = power_to_hstar(p, d);
  std::cout << name << "\n";
  std::cout << "  E(n) = " << p.str() << "\n";
  std::cout << "  magic =";
  for (const auto& a : m.a) std::cout << " " << a;
  std::cout << "\n  magic positive: " << (verdict.positive ? "yes" : "no");
  if (!verdict.positive) {
    std::cout << "  (witnesses:";
    for (const auto& [i, v] : verdict.negative_witnesses) std::cout << " a[" << i << "]=" << v;
    std::cout << ")";
  }
  std::cout << "\n  h* =";
  for (const auto& x : h.h) std::cout << " " << x;
  std::cout << "\n  h* real-rooted: "
            << (real_root_report(Poly(h.h)).real_rooted ? "yes" : "no") << "\n\n";
}

int main() {
  show("K_{3,7} dual",
       ehrhart_from_counts([](long n) { return count_bipartite_dual(3, 7, n); }, 9), 9);
  show("K_10 minus edge dual",
       ehrhart_from_counts([](long n) { return count_complete_minus_edge_dual(10, n); }, 9), 9);
  return 0;
}
