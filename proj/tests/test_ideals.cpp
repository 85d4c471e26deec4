#include "doctest.h"
#include "fixtures.hpp"

using namespace primspec;
namespace tst = primspec::testing;

TEST_CASE("identity system: every nonempty subset is an ideal support") {
  auto s = tst::identity_system<double>(3);
  CHECK(enumerate_s_ideals(s.digraph).size() == 7);
  CHECK(minimal_self_supporting_sets(s.digraph).size() == 3);
}

TEST_CASE("swap: the full set is the only ideal support") {
  auto s = build_rotation<double>(2, 1);
  auto ideals = enumerate_s_ideals(s.digraph);
  REQUIRE(ideals.size() == 1);
  CHECK(ideals[0].support == Subset{0, 1});
  CHECK(minimal_self_supporting_sets(s.digraph) == std::vector<Subset>{{0, 1}});
}

TEST_CASE("absorbing split: four ideal supports, two minimal") {
  auto s = tst::absorbing_split<double>();
  auto ideals = enumerate_s_ideals(s.digraph);
  std::vector<Subset> supports;
  for (const auto& i : ideals) supports.push_back(i.support);
  CHECK(supports == std::vector<Subset>{{1}, {2}, {1, 2}, {0, 1, 2}});
  CHECK(minimal_self_supporting_sets(s.digraph) == std::vector<Subset>{{1}, {2}});
}

TEST_CASE("forward-closure predicate matches the ideal enumeration") {
  auto s = tst::chain_into_cycle<double>();
  CHECK(is_self_supporting(s.digraph, {2, 3}));
  CHECK_FALSE(is_self_supporting(s.digraph, {0}));
  CHECK_FALSE(is_self_supporting(s.digraph, {1, 2}));
  CHECK(is_self_supporting(s.digraph, {0, 1, 2, 3}));
}

TEST_CASE("restriction of a semigroup to an ideal support") {
  auto s = tst::absorbing_split<double>();
  auto restricted = restrict_semigroup(s, SIdeal{{1, 2}});
  CHECK(restricted.n == 2);
  CHECK(restricted.generators[0].isIdentity(0));
  CHECK_THROWS_AS(restrict_semigroup(s, SIdeal{{0}}), NotSelfSupporting);
}

TEST_CASE("extend_by_zero and restrict_vec are inverse on the support") {
  Vec<double> v(2);
  v << 0.25, 0.75;
  Vec<double> up = extend_by_zero(v, Subset{1, 2}, 4);
  CHECK(up(0) == 0.0);
  CHECK(up(1) == 0.25);
  CHECK(up(2) == 0.75);
  CHECK(up(3) == 0.0);
  CHECK(restrict_vec(up, Subset{1, 2}) == v);
}

TEST_CASE("ideal enumeration agrees with the brute-force oracle on random instances") {
  for (std::uint64_t seed = 100; seed < 300; ++seed) {
    auto s = random_instance<double>(seed, 8, 3);
    auto oracle = oracle_forward_closed_sets(s.digraph);
    auto ideals = enumerate_s_ideals(s.digraph);
    REQUIRE(oracle.size() == ideals.size());
    for (size_t i = 0; i < oracle.size(); ++i) CHECK(oracle[i] == ideals[i].support);
  }
}

TEST_CASE("enumeration refuses oversized state spaces") {
  SupportDigraph g;
  g.n = 21;
  g.succ.resize(21);
  CHECK_THROWS_AS(enumerate_s_ideals(g), TooLarge);
  SupportDigraph h;
  h.n = 9;
  h.succ.resize(9);
  CHECK_THROWS_AS(oracle_forward_closed_sets(h), TooLarge);
}
