#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"

using namespace primspec;
namespace tst = primspec::testing;

TEST_CASE("rotation spectrum count equals gcd(n, a), exhaustively") {
  for (int n = 1; n <= 12; ++n)
    for (int a = 0; a < n; ++a) {
      auto s = build_rotation<Rational>(n, a);
      int expected = a == 0 ? n : std::gcd(n, a);
      CHECK(int(prim_spectrum(s).points.size()) == expected);
    }
}

TEST_CASE("koopman builder validates the map") {
  CHECK_THROWS_AS(build_koopman<double>({3, {0, 1}}), OutOfRange);
  CHECK_THROWS_AS(build_koopman<double>({3, {0, 1, 3}}), OutOfRange);
  auto s = build_koopman<double>({3, {2, 2, 2}});
  CHECK(s.generators[0](0, 2) == 1.0);
  CHECK(s.generators[0].row(0).sum() == 1.0);
}

TEST_CASE("ulam doubling: exact transition weights and a uniform stationary measure") {
  UlamSpec spec;
  spec.kind = UlamSpec::Kind::doubling;
  spec.cells = 8;
  auto s = build_ulam<Rational>(spec);
  // cell i maps onto cells 2i and 2i+1 (mod 8) with weight 1/2 each
  for (int i = 0; i < 8; ++i) {
    CHECK(s.generators[0](i, (2 * i) % 8) == Rational(1, 2));
    CHECK(s.generators[0](i, (2 * i + 1) % 8) == Rational(1, 2));
  }
  auto ergodics = ergodic_measures(s);
  REQUIRE(ergodics.size() == 1);
  for (int i = 0; i < 8; ++i) CHECK(ergodics[0].weights(i) == Rational(1, 8));
}

TEST_CASE("ulam rotation with cell-aligned angle is a cyclic permutation") {
  UlamSpec spec;
  spec.kind = UlamSpec::Kind::rotation;
  spec.alpha = Rational(1, 3);
  spec.cells = 6;
  auto s = build_ulam<Rational>(spec);
  for (int i = 0; i < 6; ++i) CHECK(s.generators[0](i, (i + 2) % 6) == Rational(1));
  CHECK(prim_spectrum(s).points.size() == 2);
}

TEST_CASE("ulam refuses degenerate input") {
  UlamSpec spec;
  spec.kind = UlamSpec::Kind::custom;
  spec.cells = 4;
  spec.branches = {{Rational(0), Rational(1), Rational(0), Rational(1, 2)}};
  CHECK_THROWS_AS(build_ulam<double>(spec), DegenerateBranch);
  UlamSpec tiny;
  tiny.cells = 1;
  CHECK_THROWS_AS(build_ulam<double>(tiny), OutOfRange);
}

TEST_CASE("product of two swaps has two ergodic classes") {
  auto swap = build_rotation<double>(2, 1);
  auto s = build_product(swap, swap);
  CHECK(s.n == 4);
  CHECK(prim_spectrum(s).points.size() == 2);  // even and odd diagonals
}

TEST_CASE("product states are paired as (x1, x2) -> x1 * n2 + x2") {
  auto r2 = build_rotation<double>(2, 1);
  auto r3 = build_rotation<double>(3, 1);
  auto s = build_product(r2, r3);
  CHECK(s.n == 6);
  // generator S (x) T moves (x1, x2) to (x1 + 1 mod 2, x2 + 1 mod 3)
  CHECK(s.generators[0](0, 1 * 3 + 1) == 1.0);
  CHECK(prim_spectrum(s).points.size() == 1);  // gcd-coupled single orbit
}

TEST_CASE("random instances are reproducible and within bounds") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto a = random_instance<double>(seed, 9, 3);
    auto b = random_instance<double>(seed, 9, 3);
    CHECK(a.n == b.n);
    REQUIRE(a.generators.size() == b.generators.size());
    for (size_t g = 0; g < a.generators.size(); ++g)
      CHECK(a.generators[g] == b.generators[g]);
    CHECK(a.n <= 9);
  }
  CHECK_THROWS_AS(random_instance<double>(1, 13, 2), TooLarge);
}

TEST_CASE("random rational instances have exactly stochastic rows") {
  for (std::uint64_t seed = 50; seed < 60; ++seed) {
    auto s = random_instance<Rational>(seed, 8, 3);
    for (const auto& g : s.generators)
      for (Index x = 0; x < s.n; ++x) CHECK(g.row(x).sum() == Rational(1));
  }
}

TEST_CASE("splitmix64 streams are deterministic and distinct") {
  SplitMix64 a = SplitMix64::split(7, 0), b = SplitMix64::split(7, 0),
             c = SplitMix64::split(7, 1);
  std::uint64_t v = a.next();
  CHECK(v == b.next());
  CHECK(v != c.next());
}
