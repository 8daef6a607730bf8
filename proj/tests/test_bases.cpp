#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ehrhart/bases.hpp"
#include "ehrhart/families.hpp"

using namespace ehrhart;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

// Ascending power coefficients of the two graph duals that fail magic
// positivity, used as fixed inputs here (they are re-derived from counts in
// the counting tests).
const Poly k37_power({1, R(72, 5), 86, R(820, 3), 532, R(3528, 5), 672, 448, 192, R(128, 3)});
const Poly k10e_power({1, R(149, 15), 45, R(1084, 9), 210, R(3766, 15), 210, R(364, 3), 46, R(92, 9)});

Poly random_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("power_to_magic known expansions") {
  CHECK(power_to_magic(Poly({1, 2}), 1).a == std::vector<Rational>{1, 1});
  CHECK(power_to_magic(Poly({1, R(7, 2), R(7, 2)}), 2).a == std::vector<Rational>{1, R(3, 2), 1});

  // (n+1)^d + n^d -> (1, 0, ..., 0, 1)
  for (int d = 1; d <= 6; ++d) {
    const auto m = power_to_magic(typeC_dual(d), d);
    std::vector<Rational> want(static_cast<size_t>(d) + 1);
    want.front() = R(1);
    want.back() = R(1);
    CHECK(m.a == want);
  }

  CHECK_THROWS_AS(power_to_magic(Poly({0, 0, 1}), 1), std::invalid_argument);
}

TEST_CASE("magic_to_power known expansions") {
  CHECK(magic_to_power({1, {1, 1}}) == Poly({1, 2}));
  CHECK(magic_to_power({3, {1, 2, 2, 1}}) == Poly({1, 5, 9, 6}));
  CHECK(magic_to_power({2, {1, 2, 1}}) == Poly({1, 4, 4}));  // (2n+1)^2
  CHECK_THROWS_AS(magic_to_power({3, {1, 2}}), std::invalid_argument);
}

TEST_CASE("magic positivity verdicts carry exact witnesses") {
  CHECK(is_magic_positive(power_to_magic(stasheff_dual(4), 4)).positive);

  const auto v37 = is_magic_positive(power_to_magic(k37_power, 9));
  CHECK_FALSE(v37.positive);
  REQUIRE(v37.negative_witnesses.size() == 2);
  CHECK(v37.negative_witnesses[0] == std::pair<int, Rational>(3, R(-142, 15)));
  CHECK(v37.negative_witnesses[1] == std::pair<int, Rational>(6, R(-142, 15)));

  const auto v10 = is_magic_positive(power_to_magic(k10e_power, 9));
  CHECK_FALSE(v10.positive);
  REQUIRE(v10.negative_witnesses.size() == 2);
  CHECK(v10.negative_witnesses[0] == std::pair<int, Rational>(3, R(-19, 45)));
  CHECK(v10.negative_witnesses[1] == std::pair<int, Rational>(6, R(-19, 45)));
}

TEST_CASE("counterexample magic vectors match the displayed forms") {
  const auto m37 = power_to_magic(k37_power, 9);
  CHECK(m37.a == std::vector<Rational>{1, R(27, 5), R(34, 5), R(-142, 15), R(88, 5), R(88, 5),
                                       R(-142, 15), R(34, 5), R(27, 5), 1});
  const auto m10 = power_to_magic(k10e_power, 9);
  CHECK(m10.a == std::vector<Rational>{1, R(14, 15), R(23, 15), R(-19, 45), R(31, 15), R(31, 15),
                                       R(-19, 45), R(23, 15), R(14, 15), 1});
}

TEST_CASE("palindromicity") {
  CHECK(is_palindromic(power_to_magic(stasheff_dual(5), 5)));
  CHECK(is_palindromic(power_to_magic(k37_power, 9)));
  CHECK_FALSE(is_palindromic({1, {1, 2}}));
}

TEST_CASE("power_to_hstar known expansions") {
  CHECK(power_to_hstar(Poly({1, 2}), 1).h == std::vector<Rational>{1, 1});
  CHECK(power_to_hstar(Poly({1, 4, 4}), 2).h == std::vector<Rational>{1, 6, 1});
  CHECK(power_to_hstar(Poly({1}), 0).h == std::vector<Rational>{1});
  CHECK_THROWS_AS(power_to_hstar(Poly({0, 0, 1}), 1), std::invalid_argument);
}

TEST_CASE("hstar_to_power known expansions") {
  CHECK(hstar_to_power({1, {1, 1}}) == Poly({1, 2}));
  CHECK(hstar_to_power({2, {1, 6, 1}}) == Poly({1, 4, 4}));
  CHECK(hstar_to_power({1, {1, 0}}) == Poly({1, 1}));
}

TEST_CASE("round trips are exact for random polynomials") {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly p = random_poly(rng, 12);
    const int deg = p.is_zero() ? 0 : *p.degree();
    for (int d : {deg, deg + 2}) {  // exact degree and a degenerate ambient
      CHECK(magic_to_power(power_to_magic(p, d)) == p);
      CHECK(hstar_to_power(power_to_hstar(p, d)) == p);
      CHECK(power_to_magic(magic_to_power(power_to_magic(p, d)), d).a == power_to_magic(p, d).a);
    }
  }
}

TEST_CASE("magic coefficients at the basis evaluation points") {
  // a_0 = p(0) and a_d = (-1)^d p(-1) are forced by evaluating at n = 0, -1.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const Poly p = random_poly(rng, 10);
    const int d = (p.is_zero() ? 0 : *p.degree()) + (trial % 3 == 0 ? 1 : 0);
    const auto m = power_to_magic(p, d);
    CHECK(m.a.front() == p.eval(R(0)));
    const Rational alt = p.eval(R(-1));
    CHECK(m.a.back() == (d % 2 ? -alt : alt));
  }
}

TEST_CASE("hstar sum equals d! times the leading coefficient") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 25; ++trial) {
    const Poly p = random_poly(rng, 9);
    const int d = p.is_zero() ? 0 : *p.degree();
    const auto h = power_to_hstar(p, d);
    Rational sum;
    for (const auto& x : h.h) sum += x;
    CHECK(sum == Rational(factorial(static_cast<unsigned long>(d))) * p.coeff(d));
  }
}

TEST_CASE("reflexive family polynomials: palindromic in both bases") {
  std::vector<std::pair<Poly, int>> polys;
  for (int d = 1; d <= 10; ++d) {
    polys.emplace_back(cross_dual(d), d);
    polys.emplace_back(typeA_dual(d), d);
    polys.emplace_back(typeC_dual(d), d);
    polys.emplace_back(stasheff_dual(d), d);
    polys.emplace_back(cycle_dual(d), d);
  }
  for (const auto& [p, d] : polys) {
    const auto m = power_to_magic(p, d);
    CHECK(m.a.front() == R(1));
    CHECK(m.a.back() == R(1));
    CHECK(is_palindromic(m));
    const auto h = power_to_hstar(p, d);
    CHECK(h.h.front() == R(1));
    for (int j = 0; j <= d; ++j) CHECK(h.h[static_cast<size_t>(j)] == h.h[static_cast<size_t>(d - j)]);
  }
}
