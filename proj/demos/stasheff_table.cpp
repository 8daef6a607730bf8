// Prints the Ehrhart polynomials of the dual Stasheff polytopes for
// d = 2..5 in the power and magic bases, and re-derives each one from the
// recurrence and from direct lattice-point counting.

#include <iostream>

#include "ehrhart/ehrhart.hpp"

using namespace ehrhart;

int main() {
  for (int d = 2; d <= 5; ++d) {
    const Poly p = stasheff_dual(d);
    const MagicForm m = power_to_magic(p, d);
    std::cout << "d=" << d << "\n";
    std::cout << "  E(n)  = " << p.str() << "\n";
    std::cout << "  magic =";
    for (const auto& a : m.a) std::cout << " " << a;
    std::cout << (is_magic_positive(m).positive ? "   (magic positive)" : "   (NOT positive)")
              << "\n";
    if (d <= 4) {
      std::cout << "  counts:";
      for (long n = 0; n <= 3; ++n) std::cout << " " << count_stasheff_dual(d, n).get_str();
      std::cout << "\n";
    }
  }
  return 0;
}
