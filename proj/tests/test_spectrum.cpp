#include "doctest.h"
#include "fixtures.hpp"

using namespace primspec;
namespace tst = primspec::testing;

TEST_CASE("absorbing split: primitive spectrum and radical structure") {
  auto s = tst::absorbing_split<double>();
  auto spec = prim_spectrum(s);
  REQUIRE(spec.points.size() == 2);
  CHECK(spec.points[0].supp == Subset{1});
  CHECK(spec.points[1].supp == Subset{2});

  auto rad = radical(spec, Subset{0, 1, 2});
  REQUIRE(rad.has_value());
  CHECK(rad->support == Subset{1, 2});
  CHECK(minimal_center_support(spec) == Subset{1, 2});
  CHECK_FALSE(is_radical_free(spec));

  auto rad1 = radical(spec, Subset{1});
  REQUIRE(rad1.has_value());
  CHECK(rad1->support == Subset{1});  // already radical
}

TEST_CASE("identity system is radical free") {
  auto spec = prim_spectrum(tst::identity_system<double>(2));
  CHECK(is_radical_free(spec));
  CHECK(minimal_center_support(spec) == Subset{0, 1});
}

TEST_CASE("hull and kernel implement the hull-kernel adjunction") {
  auto spec = prim_spectrum(tst::absorbing_split<double>());
  CHECK(hull(spec, Subset{1, 2}) == PointSet{0, 1});
  CHECK(hull(spec, Subset{1}) == PointSet{0});
  CHECK(ker(spec, PointSet{0, 1}) == Subset{1, 2});
  CHECK(ker(spec, PointSet{1}) == Subset{2});
}

TEST_CASE("closure on a genuine spectrum is the identity on point sets") {
  auto spec = prim_spectrum(build_rotation<double>(6, 2));
  CHECK(closure(spec, PointSet{0}) == PointSet{0});
  CHECK(closure(spec, PointSet{0, 1}) == PointSet{0, 1});
  CHECK(closure(spec, PointSet{}) == PointSet{});
}

TEST_CASE("radical witness measure has exactly the radical's support") {
  auto s = tst::absorbing_split<double>();
  auto spec = prim_spectrum(s);
  auto rad = radical(spec, Subset{0, 1, 2});
  Vec<double> mu = radical_witness_measure(spec, *rad);
  CHECK(is_invariant(s, mu));
  CHECK(support(mu, s.tol.supp) == Subset{1, 2});
  CHECK_THROWS_AS(radical_witness_measure(spec, RadicalIdeal{{0}}), NoErgodicInside);
}

TEST_CASE("specialization order of a genuine spectrum is discrete") {
  auto spec = prim_spectrum(build_rotation<double>(6, 2));
  auto order = specialization_order(spec);
  CHECK(order.point_count == 2);
  CHECK(order.leads_to.empty());
  CHECK(order.t0);
  CHECK(order.hausdorff);
  CHECK(order.closed_singletons == std::vector<int>{0, 1});
}

TEST_CASE("mock spectrum with nested supports is T0 but not Hausdorff") {
  // hand-built point data, not produced by any Markov system
  auto spec = mock_spectrum<double>(2, {{0}, {0, 1}});
  auto order = specialization_order(spec);
  CHECK(order.t0);
  CHECK_FALSE(order.hausdorff);
  // the big point leads to the small one: {0} is inside cl({p_{0,1}})
  CHECK(order.leads_to == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(order.closed_singletons == std::vector<int>{0});
  CHECK(closure(spec, PointSet{1}) == PointSet{0, 1});
}

TEST_CASE("base open sets separate points exactly by supports") {
  auto s = tst::absorbing_split<double>();
  auto spec = prim_spectrum(s);
  Vec<double> f = indicator<double>({1}, 3);
  CHECK(in_base_open_set(spec, f, 0, s.tol));
  CHECK_FALSE(in_base_open_set(spec, f, 1, s.tol));
}

TEST_CASE("quotient spectrum bijection on every ideal of the absorbing split") {
  auto s = tst::absorbing_split<double>();
  for (const SIdeal& ideal : enumerate_s_ideals(s.digraph)) {
    auto pairs = quotient_spectrum_bijection(s, ideal);
    auto spec = prim_spectrum(s);
    size_t inside = 0;
    for (const auto& p : spec.points)
      if (is_subset_of(p.supp, ideal.support)) ++inside;
    CHECK(pairs.size() == inside);
  }
}
