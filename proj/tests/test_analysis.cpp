#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/analysis.hpp"
#include "ehrhart/families.hpp"

using namespace ehrhart;

namespace {
Rational R(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("real root counting") {
  const auto two = real_root_report(Poly({2, 3, 1}));  // (n+1)(n+2)
  CHECK(two.squarefree_degree == 2);
  CHECK(two.distinct_real_roots == 2);
  CHECK(two.real_rooted);

  const auto none = real_root_report(Poly({1, 0, 1}));  // n^2 + 1
  CHECK(none.distinct_real_roots == 0);
  CHECK_FALSE(none.real_rooted);

  CHECK(real_root_report(Poly({1, 6, 1})).real_rooted);  // discriminant 32 > 0

  // repeated real roots still count as real-rooted
  const Poly sq = Poly({1, 1}) * Poly({1, 1});
  const auto rep = real_root_report(sq);
  CHECK(rep.squarefree_degree == 1);
  CHECK(rep.distinct_real_roots == 1);
  CHECK(rep.real_rooted);

  const auto mixed = real_root_report(Poly({1, 0, 1}) * Poly({2, 3, 1}));
  CHECK(mixed.squarefree_degree == 4);
  CHECK(mixed.distinct_real_roots == 2);
  CHECK_FALSE(mixed.real_rooted);

  CHECK(real_root_report(Poly({5})).real_rooted);  // vacuous for constants
  CHECK_THROWS_AS(real_root_report(Poly()), std::invalid_argument);
}

TEST_CASE("real root report is invariant under positive scaling") {
  const std::vector<Poly> polys = {Poly({2, 3, 1}), Poly({1, 0, 1}), Poly({1, 6, 1}),
                                   Poly({-3, R(1, 2), 0, 1})};
  for (const auto& p : polys) {
    const auto a = real_root_report(p);
    const auto b = real_root_report(p * R(3, 7));
    CHECK(a.squarefree_degree == b.squarefree_degree);
    CHECK(a.distinct_real_roots == b.distinct_real_roots);
    CHECK(a.real_rooted == b.real_rooted);
  }
}

TEST_CASE("real-rootedness of family h* vectors") {
  for (int d = 1; d <= 14; ++d) {
    CHECK(real_root_report(Poly(power_to_hstar(stasheff_dual(d), d).h)).real_rooted);
    CHECK(real_root_report(Poly(power_to_hstar(cross_dual(d), d).h)).real_rooted);
    CHECK(real_root_report(Poly(power_to_hstar(cycle_dual(d), d).h)).real_rooted);
  }
}

TEST_CASE("sequence checks") {
  const auto a = sequence_checks({1, 6, 1});
  CHECK((a.nonnegative && a.log_concave && a.unimodal && a.palindromic));

  const auto b = sequence_checks({1, 1, 2});
  CHECK(b.nonnegative);
  CHECK_FALSE(b.log_concave);  // 1*1 < 1*2
  CHECK(b.unimodal);
  CHECK_FALSE(b.palindromic);

  const auto c = sequence_checks({1, 0, 1});
  CHECK(c.nonnegative);
  CHECK_FALSE(c.log_concave);
  CHECK_FALSE(c.unimodal);
  CHECK(c.palindromic);

  const auto d = sequence_checks({R(-1, 2), 1});
  CHECK_FALSE(d.nonnegative);

  const auto e = sequence_checks({3, 3, 3});
  CHECK((e.log_concave && e.unimodal && e.palindromic));
}

TEST_CASE("cycle B terms") {
  // single-index value (d+1-i)/i at shift 0
  CHECK(cycle_B_term(6, 0, {2}) == R(5, 2));
  // vanishing rule: shift not in the subset
  CHECK(cycle_B_term(6, 1, {2}) == R(0));
  // mirrored vanishing rule: d+1-i in the subset
  CHECK(cycle_B_term(6, 2, {2, 5}) == R(0));

  const Rational sum = cycle_B_term(6, 0, {1, 2, 4}) + cycle_B_term(6, 1, {1, 2, 4}) +
                       cycle_B_term(6, 2, {1, 2, 4});
  CHECK(sum * Rational(factorial(6)) == R(-76));

  CHECK_THROWS_AS(cycle_B_term(6, 4, {1}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_B_term(6, 0, {0}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_B_term(6, 0, {2, 2}), std::invalid_argument);
}

TEST_CASE("vanishing rule holds across small cases") {
  for (int d = 2; d <= 8; ++d)
    for (int i = 1; i <= d / 2; ++i) {
      CHECK(cycle_B_term(d, i, {}) == R(0));                      // i not in the empty set
      if (i > 1) CHECK(cycle_B_term(d, i, {1}) == R(0));          // i not in {1}
      CHECK(cycle_B_term(d, i, std::vector<int>{d + 1 - i}) == R(0));  // d+1-i inside
    }
}

TEST_CASE("cycle C values") {
  CHECK(cycle_C(4, {1}) == R(1, 4));
  CHECK(cycle_C(6, {1, 2}) == R(1, 15));
  CHECK(cycle_C(6, {1, 2, 4}) == R(-19, 180));
  CHECK(cycle_C(6, {1, 2, 4}) * Rational(factorial(6)) == R(-76));
}

TEST_CASE("closed forms for single and double subsets") {
  for (int d = 2; d <= 12; ++d) {
    const int half = d / 2;
    for (int i = 1; i <= d; ++i) {
      const Rational c = cycle_C(d, {i});
      if (i <= half) {
        CHECK(c == R(i, d + 1 - i));
      } else {
        // every shifted term vanishes, leaving the positive base term
        CHECK(c == cycle_B_term(d, 0, {i}));
        CHECK(c == R(d + 1 - i, i));
      }
      CHECK(c.sign() > 0);
    }
    for (int i = 1; i < d; ++i)
      for (int j = i + 1; j <= d; ++j) {
        const Rational c = cycle_C(d, {i, j});
        if (j <= half) {
          CHECK(c == Rational(Int(i) * Int(j), Int(d + 1 - i) * Int(d + 1 - j)));
        } else if (i > half) {
          CHECK(c == cycle_B_term(d, 0, {i, j}));
        }
        CHECK(c.sign() > 0);
      }
  }
}

TEST_CASE("subset sums reproduce the magic coefficients") {
  CHECK(cycle_coeff_via_C(2, 1) == R(1));
  for (int d = 1; d <= 8; ++d) {
    const auto m = power_to_magic(cycle_dual(d), d);
    CHECK(cycle_coeff_via_C(d, 0) == R(1));
    for (int i = 0; i <= d; ++i) CHECK(cycle_coeff_via_C(d, i) == m.a[static_cast<size_t>(i)]);
  }
}

TEST_CASE("magic palindromicity of cycle duals via subsets") {
  for (int d = 2; d <= 10; ++d)
    for (int i = 0; i <= d / 2; ++i)
      CHECK(cycle_coeff_via_C(d, i) == cycle_coeff_via_C(d, d - i));
}

TEST_CASE("subset enumeration budget") {
  CHECK_THROWS_AS(cycle_coeff_via_C(40, 20, 1000), BudgetExceeded);
  CHECK_THROWS_AS(cycle_coeff_via_C(4, 7), std::invalid_argument);
}
