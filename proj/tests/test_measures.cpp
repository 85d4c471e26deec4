#include "doctest.h"
#include "fixtures.hpp"

using namespace primspec;
namespace tst = primspec::testing;

TEST_CASE("absorbing split: ergodic measures are the two point masses") {
  auto s = tst::absorbing_split<Rational>();
  auto ergodics = ergodic_measures(s);
  REQUIRE(ergodics.size() == 2);
  CHECK(ergodics[0].supp == Subset{1});
  CHECK(ergodics[0].weights == point_mass<Rational>(1, 3));
  CHECK(ergodics[1].supp == Subset{2});
  CHECK(ergodics[1].weights == point_mass<Rational>(2, 3));
}

TEST_CASE("swap: unique ergodic measure is (1/2, 1/2), exactly") {
  auto s = build_rotation<Rational>(2, 1);
  auto ergodics = ergodic_measures(s);
  REQUIRE(ergodics.size() == 1);
  CHECK(ergodics[0].weights(0) == Rational(1, 2));
  CHECK(ergodics[0].weights(1) == Rational(1, 2));
}

TEST_CASE("rotation by 2 on 6 states: uniform measures on the two orbits") {
  auto s = build_rotation<Rational>(6, 2);
  auto ergodics = ergodic_measures(s);
  REQUIRE(ergodics.size() == 2);
  CHECK(ergodics[0].supp == Subset{0, 2, 4});
  CHECK(ergodics[1].supp == Subset{1, 3, 5});
  for (int x : {0, 2, 4}) CHECK(ergodics[0].weights(x) == Rational(1, 3));
}

TEST_CASE("fixed-space dimension equals the number of ergodic classes") {
  CHECK(fix_space_basis(tst::absorbing_split<double>()).size() == 2);
  CHECK(fix_space_basis(build_rotation<double>(6, 2)).size() == 2);
  CHECK(fix_space_basis(tst::identity_system<double>(4)).size() == 4);
  CHECK(fix_space_basis(build_ulam<double>({})).size() == 1);
}

TEST_CASE("ergodicity test: vertices yes, proper mixtures no") {
  auto s = tst::absorbing_split<double>();
  auto ergodics = ergodic_measures(s);
  for (const auto& e : ergodics) CHECK(is_ergodic(s, e.weights));
  Vec<double> mix = 0.5 * ergodics[0].weights + 0.5 * ergodics[1].weights;
  CHECK_FALSE(is_ergodic(s, mix));
}

TEST_CASE("ergodicity test rejects non-invariant measures") {
  auto s = tst::absorbing_split<double>();
  CHECK_THROWS_AS(is_ergodic(s, point_mass<double>(0, 3)), NotInvariant);
}

TEST_CASE("invariant polytope dimension is one less than the class count") {
  auto s = tst::absorbing_split<double>();
  auto polytope = invariant_polytope(s);
  CHECK(polytope.vertices.size() == 2);
  CHECK(stationary_affine_dim(s) == 1);
  CHECK(stationary_affine_dim(build_rotation<double>(2, 1)) == 0);
}

TEST_CASE("embedding a restricted invariant measure") {
  auto s = tst::absorbing_split<double>();
  auto restricted = restrict_semigroup(s, SIdeal{{1, 2}});
  Vec<double> nu(2);
  nu << 0.25, 0.75;
  Vec<double> up = embed_measure(s, SIdeal{{1, 2}}, nu);
  CHECK(is_invariant(s, up));
  CHECK(up(0) == 0.0);
  Vec<double> bad(2);
  bad << 0.3, 0.6;  // not even a probability
  CHECK_THROWS_AS(embed_measure(s, SIdeal{{1, 2}}, bad), NotInvariant);
}

TEST_CASE("stationary measures on random instances are invariant probabilities") {
  for (std::uint64_t seed = 400; seed < 450; ++seed) {
    auto s = random_instance<double>(seed, 8, 3);
    for (const auto& e : ergodic_measures(s)) {
      CHECK(is_probability(e.weights, s.tol));
      CHECK(is_invariant(s, e.weights));
      CHECK(support(e.weights, s.tol.supp) == e.supp);
    }
  }
}
