#ifndef PRIMSPEC_VERIFY_HPP
#define PRIMSPEC_VERIFY_HPP

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "primspec/io.hpp"
#include "primspec/systems.hpp"

namespace primspec {

// Brute-force oracles and the randomized suite binding each verified
// statement to an executable check. Oracles re-derive results from first
// principles and share no code with the production paths they check.

/// All nonempty forward-closed subsets by direct edge-by-edge scan.
inline std::vector<Subset> oracle_forward_closed_sets(const SupportDigraph& g) {
  if (g.n > 8) throw TooLarge("oracle_forward_closed_sets: n > 8");
  std::vector<Subset> out;
  for (std::uint64_t m = 1; m < (std::uint64_t(1) << g.n); ++m) {
    Subset l = subset_from_mask(m, g.n);
    bool closed = true;
    for (int x : l)
      for (int y : g.succ[size_t(x)])
        if (!subset_contains(l, y)) {
          closed = false;
          break;
        }
    if (closed) out.push_back(std::move(l));
  }
  return out;
}

/// Vertices of the invariant-probability polytope by basic-feasible-solution
/// enumeration: for every candidate support B solve the equality system with
/// the measure confined to B and keep feasible unique solutions.
template <class T>
std::vector<Vec<T>> oracle_polytope_vertices(const MarkovSemigroup<T>& s) {
  const int n = int(s.n);
  if (n > 10) throw TooLarge("oracle_polytope_vertices: n > 10");
  const Index m = Index(s.generators.size());
  std::vector<Vec<T>> vertices;
  auto seen = [&](const Vec<T>& v) {
    for (const auto& w : vertices)
      if (max_abs(Vec<T>(v - w)) <= 1e-8) return true;
    return false;
  };
  for (std::uint64_t bmask = 1; bmask < (std::uint64_t(1) << n); ++bmask) {
    Subset b = subset_from_mask(bmask, n);
    const Index k = Index(b.size());
    // rows: invariance at every ambient state for every generator, + mass 1
    Mat<T> a(m * n + 1, k);
    Vec<T> rhs = Vec<T>::Zero(m * n + 1);
    for (Index gi = 0; gi < m; ++gi) {
      const Mat<T>& gen = s.generators[size_t(gi)];
      for (int y = 0; y < n; ++y) {
        for (Index c = 0; c < k; ++c) {
          T coeff = gen(b[size_t(c)], y);
          if (b[size_t(c)] == y) coeff -= T(1);
          a(gi * n + y, c) = coeff;
        }
      }
    }
    for (Index c = 0; c < k; ++c) a(m * n, c) = T(1);
    rhs(m * n) = T(1);

    // unique solution iff the homogeneous kernel is empty and the augmented
    // system is consistent
    if (!kernel_basis(a, s.tol.pivot).empty()) continue;
    Mat<T> augmented(a.rows(), k + 1);
    augmented.leftCols(k) = a;
    augmented.col(k) = rhs;
    Mat<T> reduced = augmented;
    std::vector<Index> pivots = rref(reduced, s.tol.pivot);
    if (!pivots.empty() && pivots.back() == k) continue;  // inconsistent
    // read the solution off the reduced system
    Vec<T> w = Vec<T>::Zero(k);
    for (size_t r = 0; r < pivots.size(); ++r) w(pivots[r]) = reduced(Index(r), k);
    bool feasible = true;
    for (Index c = 0; c < k; ++c)
      if (scalar_ops<T>::to_double(w(c)) < -1e-10) feasible = false;
    if (!feasible) continue;
    Vec<T> mu = extend_by_zero(w, b, s.n);
    if (!seen(mu)) vertices.push_back(std::move(mu));
  }
  return vertices;
}

/// Closure via the specialization preorder, the test-side counterpart of the
/// hull-kernel definition.
template <class T>
PointSet oracle_closure_via_order(const PrimSpectrum<T>& spec, const PointSet& a) {
  PointSet out;
  for (int q = 0; q < int(spec.points.size()); ++q) {
    bool below = false;
    for (int p : a)
      if (is_subset_of(spec.points[size_t(q)].supp, spec.points[size_t(p)].supp)) below = true;
    if (below) out.push_back(q);
  }
  return out;
}

struct OracleReport {
  std::string id;  // slug of the verified statement
  int instances = 0;
  std::vector<std::string> failures;  // witness descriptions, replayable system JSON included
  double seconds = 0;

  bool passed() const { return instances > 0 && failures.empty(); }
};

namespace detail {

template <class T>
std::string witness(const MarkovSemigroup<T>& s, const std::string& what) {
  return what + " | system=" + system_to_json(s).dump();
}

template <class T>
Vec<T> random_function(SplitMix64& rng, Index n) {
  Vec<T> f(n);
  for (Index i = 0; i < n; ++i)
    f(i) = scalar_ops<T>::from_double(rng.uniform() * 2.0 - 1.0);
  return f;
}

/// Random convex combination of the ergodic measures.
template <class T>
Vec<T> random_invariant(SplitMix64& rng, const std::vector<ErgodicMeasure<T>>& ergodics,
                        Index n) {
  Vec<T> mu = Vec<T>::Zero(n);
  T total(0);
  std::vector<T> coef;
  for (size_t i = 0; i < ergodics.size(); ++i) {
    T c = scalar_ops<T>::from_double(rng.uniform() + 1e-3);
    coef.push_back(c);
    total += c;
  }
  for (size_t i = 0; i < ergodics.size(); ++i) mu += Vec<T>(coef[i] / total * ergodics[i].weights);
  return mu;
}

}  // namespace detail

template <class T>
class PropositionSuite {
 public:
  using Check =
      std::function<void(const MarkovSemigroup<T>&, SplitMix64&, std::vector<std::string>&)>;

  PropositionSuite() { register_checks(); }

  /// Deterministic fixture set plus `count` seeded random instances.
  std::vector<OracleReport> run(std::uint64_t seed, int count, int max_n = 8) {
    std::vector<MarkovSemigroup<T>> instances = fixtures();
    for (int i = 0; i < count; ++i)
      instances.push_back(random_instance<T>(seed + std::uint64_t(i), max_n, 3, 0.5));

    std::vector<OracleReport> reports;
    for (auto& [id, check] : checks_) {
      OracleReport report;
      report.id = id;
      auto t0 = std::chrono::steady_clock::now();
      for (size_t i = 0; i < instances.size(); ++i) {
        SplitMix64 rng = SplitMix64::split(seed, 1000 + i);
        try {
          check(instances[i], rng, report.failures);
        } catch (const std::exception& e) {
          report.failures.push_back(detail::witness(instances[i], std::string("threw: ") + e.what()));
        }
        ++report.instances;
      }
      report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      reports.push_back(std::move(report));
    }
    return reports;
  }

  static std::vector<MarkovSemigroup<T>> fixtures() {
    std::vector<MarkovSemigroup<T>> out;
    // absorbing split: state 0 hands mass to the fixed states 1 and 2
    Mat<T> fixb(3, 3);
    fixb << T(0), scalar_ops<T>::from_double(0.5), scalar_ops<T>::from_double(0.5),  //
        T(0), T(1), T(0),                                                            //
        T(0), T(0), T(1);
    out.push_back(make_semigroup<T>({fixb}));
    out.push_back(build_rotation<T>(2, 1));  // swap
    out.push_back(build_koopman<T>({3, {0, 1, 2}}));
    out.push_back(build_rotation<T>(6, 2));
    out.push_back(build_koopman<T>({4, {1, 2, 3, 2}}));  // transient run into a 2-cycle
    out.push_back(build_product<T>(build_rotation<T>(2, 1), build_rotation<T>(3, 1)));
    return out;
  }

 private:
  void add(const std::string& id, Check check) { checks_.emplace_back(id, std::move(check)); }

  void register_checks();

  std::vector<std::pair<std::string, Check>> checks_;
};

template <class T>
void PropositionSuite<T>::register_checks() {
  using W = std::vector<std::string>;
  using S = MarkovSemigroup<T>;

  add("ideal-support-bijection", [](const S& s, SplitMix64&, W& fail) {
    if (s.n > 8) return;
    auto oracle = oracle_forward_closed_sets(s.digraph);
    auto ideals = enumerate_s_ideals(s.digraph);
    if (oracle.size() != ideals.size()) {
      fail.push_back(detail::witness(s, "ideal count mismatch"));
      return;
    }
    for (size_t i = 0; i < oracle.size(); ++i)
      if (oracle[i] != ideals[i].support)
        fail.push_back(detail::witness(s, "ideal support mismatch at " + subset_str(oracle[i])));
  });

  add("extreme-iff-ergodic", [](const S& s, SplitMix64& rng, W& fail) {
    auto ergodics = ergodic_measures(s);
    auto vertices = oracle_polytope_vertices(s);
    if (ergodics.size() != vertices.size()) {
      fail.push_back(detail::witness(s, "vertex count != ergodic count"));
      return;
    }
    for (const auto& e : ergodics) {
      bool found = false;
      for (const auto& v : vertices)
        if (max_abs(Vec<T>(v - e.weights)) <= 1e-8) found = true;
      if (!found) fail.push_back(detail::witness(s, "ergodic measure is not a polytope vertex"));
      if (!is_ergodic(s, e.weights))
        fail.push_back(detail::witness(s, "vertex fails the fixed-space ergodicity test"));
    }
    if (ergodics.size() >= 2) {
      Vec<T> mix = detail::random_invariant(rng, ergodics, s.n);
      if (is_ergodic(s, mix))
        fail.push_back(detail::witness(s, "proper mixture declared ergodic"));
    }
  });

  add("maximal-ideal-primitive", [](const S& s, SplitMix64&, W& fail) {
    auto minimal = minimal_self_supporting_sets(s.digraph);
    PrimSpectrum<T> spec = prim_spectrum(s);
    if (minimal.size() != spec.points.size()) {
      fail.push_back(detail::witness(s, "terminal class count != point count"));
      return;
    }
    for (const auto& l : minimal) {
      int hits = 0;
      for (const auto& p : spec.points)
        if (p.supp == l) {
          ++hits;
          for (int x : l)
            if (!(p.witness.weights(x) > s.tol.supp))
              fail.push_back(detail::witness(s, "witness not strictly positive on its class"));
        }
      if (hits != 1)
        fail.push_back(detail::witness(s, "terminal class without unique primitive point"));
    }
  });

  add("subsystem-embedding", [](const S& s, SplitMix64&, W& fail) {
    if (s.n > 8) return;
    for (const SIdeal& ideal : enumerate_s_ideals(s.digraph)) {
      S restricted = restrict_semigroup(s, ideal);
      std::vector<Vec<T>> embedded;
      for (const auto& nu : ergodic_measures(restricted))
        embedded.push_back(embed_measure(s, ideal, nu.weights));
      std::vector<Vec<T>> direct;
      for (const auto& mu : ergodic_measures(s))
        if (is_subset_of(mu.supp, ideal.support)) direct.push_back(mu.weights);
      if (embedded.size() != direct.size()) {
        fail.push_back(detail::witness(s, "embedded ergodic count mismatch on " +
                                              subset_str(ideal.support)));
        continue;
      }
      for (const auto& e : embedded) {
        bool found = false;
        for (const auto& d : direct)
          if (max_abs(Vec<T>(e - d)) <= 1e-8) found = true;
        if (!found) fail.push_back(detail::witness(s, "embedded ergodic not found directly"));
        if (!is_ergodic(s, e))
          fail.push_back(detail::witness(s, "embedded ergodic not ergodic for the ambient system"));
      }
    }
  });

  add("quotient-ideal-bijection", [](const S& s, SplitMix64&, W& fail) {
    if (s.n > 8) return;
    PrimSpectrum<T> spec = prim_spectrum(s);
    for (const SIdeal& ideal : enumerate_s_ideals(s.digraph)) {
      S restricted = restrict_semigroup(s, ideal);
      PrimSpectrum<T> quotient = prim_spectrum(restricted);
      // rad of zero downstairs must be rad of the ideal upstairs, relabeled
      auto rad_up = radical(spec, ideal.support);
      Subset rad_down = minimal_center_support(quotient);
      Subset rad_down_up;
      for (int i : rad_down) rad_down_up.push_back(ideal.support[size_t(i)]);
      std::sort(rad_down_up.begin(), rad_down_up.end());
      if (!rad_up) {
        if (!rad_down.empty())
          fail.push_back(detail::witness(s, "quotient radical nonempty for full-algebra radical"));
      } else if (rad_up->support != rad_down_up) {
        fail.push_back(detail::witness(s, "radical does not commute with restriction on " +
                                              subset_str(ideal.support)));
      }
    }
  });

  add("invariant-kernel-radical", [](const S& s, SplitMix64& rng, W& fail) {
    PrimSpectrum<T> spec = prim_spectrum(s);
    auto ergodics = ergodic_measures(s);
    for (int trial = 0; trial < 5; ++trial) {
      Vec<T> mu = detail::random_invariant(rng, ergodics, s.n);
      Subset supp_mu = support(mu, s.tol.supp);
      auto rad = radical(spec, supp_mu);
      if (!rad || rad->support != supp_mu)
        fail.push_back(detail::witness(s, "absolute kernel of invariant measure is not radical"));
    }
  });

  add("radical-has-witness-measure", [](const S& s, SplitMix64&, W& fail) {
    PrimSpectrum<T> spec = prim_spectrum(s);
    // every union of ergodic supports is a radical ideal; check its witness
    const size_t count = spec.points.size();
    if (count > 10) return;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << count); ++m) {
      Subset support_union;
      for (size_t i = 0; i < count; ++i)
        if (m >> i & 1) support_union = subset_union(support_union, spec.points[i].supp);
      RadicalIdeal rad{support_union};
      Vec<T> mu = radical_witness_measure(spec, rad);
      if (!is_invariant(s, mu))
        fail.push_back(detail::witness(s, "witness measure not invariant"));
      if (support(mu, s.tol.supp) != support_union)
        fail.push_back(detail::witness(s, "witness support != radical support"));
    }
  });

  add("radical-via-mean-decay", [](const S& s, SplitMix64& rng, W& fail) {
    if (s.n > 8) return;
    PrimSpectrum<T> spec = prim_spectrum(s);
    auto ideals = enumerate_s_ideals(s.digraph);
    for (const SIdeal& ideal : ideals) {
      auto rad = radical(spec, ideal.support);
      for (int trial = 0; trial < 3; ++trial) {
        Vec<T> f = detail::random_function<T>(rng, s.n);
        if (trial > 0 && rad) {
          // exercise the member branch: zero f on the radical support
          for (int x : rad->support) f(x) = T(0);
        }
        bool algebraic = true;
        if (rad)
          for (int x : rad->support)
            if (!within(f(x), s.tol.supp)) algebraic = false;
        auto mean = radical_membership_via_means(s, ideal.support, f);
        if (mean.member != algebraic)
          fail.push_back(detail::witness(
              s, "mean-decay membership disagrees with algebraic test on " +
                     subset_str(ideal.support)));
      }
    }
  });

  add("minimal-center-attraction", [](const S& s, SplitMix64&, W& fail) {
    auto phi = koopman_map(s);
    if (!phi) return;  // deterministic orbits only
    PrimSpectrum<T> spec = prim_spectrum(s);
    Subset center = minimal_center_support(spec);
    const long long n_steps = 10'000;
    for (int x = 0; x < int(s.n); ++x) {
      double freq = visit_frequency(s, x, center, n_steps);
      if (freq < 1.0 - double(s.n) / double(n_steps))
        fail.push_back(detail::witness(s, "center visit frequency below bound"));
    }
    for (size_t drop = 0; drop < center.size(); ++drop) {
      Subset u;
      for (size_t i = 0; i < center.size(); ++i)
        if (i != drop) u.push_back(center[i]);
      // dropping a state of a period-L cycle caps some orbit at 1 - 1/L,
      // and L <= n, so demand a frequency at most 1 - 1/(2n)
      bool some_low = false;
      for (int x = 0; x < int(s.n); ++x)
        if (visit_frequency(s, x, u, n_steps) <= 1.0 - 0.5 / double(s.n)) some_low = true;
      if (!some_low)
        fail.push_back(detail::witness(s, "center minus a point still attracts every orbit"));
    }
  });

  add("kuratowski-closure", [](const S& s, SplitMix64&, W& fail) {
    PrimSpectrum<T> spec = prim_spectrum(s);
    const size_t count = spec.points.size();
    if (count > 10) return;
    auto as_set = [&](std::uint64_t m) {
      PointSet a;
      for (size_t i = 0; i < count; ++i)
        if (m >> i & 1) a.push_back(int(i));
      return a;
    };
    auto as_mask = [&](const PointSet& a) {
      std::uint64_t m = 0;
      for (int i : a) m |= std::uint64_t(1) << i;
      return m;
    };
    if (!closure(spec, {}).empty())
      fail.push_back(detail::witness(s, "closure of empty set nonempty"));
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << count); ++m) {
      PointSet a = as_set(m);
      std::uint64_t cl = as_mask(closure(spec, a));
      if ((cl & m) != m) fail.push_back(detail::witness(s, "closure not extensive"));
      if (as_mask(closure(spec, as_set(cl))) != cl)
        fail.push_back(detail::witness(s, "closure not idempotent"));
      if (cl != as_mask(oracle_closure_via_order(spec, a)))
        fail.push_back(detail::witness(s, "closure disagrees with specialization oracle"));
      for (std::uint64_t m2 = 0; m2 < (std::uint64_t(1) << count); ++m2) {
        std::uint64_t cl_union = as_mask(closure(spec, as_set(m | m2)));
        if (cl_union != (cl | as_mask(closure(spec, as_set(m2))))) {
          fail.push_back(detail::witness(s, "closure not additive"));
          break;
        }
      }
    }
  });

  add("spectrum-t0-and-points", [](const S& s, SplitMix64& rng, W& fail) {
    PrimSpectrum<T> spec = prim_spectrum(s);
    SpecializationOrder order = specialization_order(spec);
    if (!order.t0) fail.push_back(detail::witness(s, "spectrum not T0"));
    // finite sharpening: ergodic supports are minimal and disjoint, so the
    // topology is discrete and every singleton closed
    if (!order.hausdorff) fail.push_back(detail::witness(s, "genuine spectrum not discrete"));
    if (int(order.closed_singletons.size()) != int(spec.points.size()))
      fail.push_back(detail::witness(s, "non-closed singleton in genuine spectrum"));
    // base-set predicate vs definition
    for (int trial = 0; trial < 5; ++trial) {
      Vec<T> f = detail::random_function<T>(rng, s.n);
      for (int p = 0; p < int(spec.points.size()); ++p) {
        bool direct = false;
        for (int x : spec.points[size_t(p)].supp)
          if (!within(f(x), s.tol.supp)) direct = true;
        if (direct != in_base_open_set(spec, f, p, s.tol))
          fail.push_back(detail::witness(s, "base open-set predicate mismatch"));
      }
    }
    // every point is hit by an ergodic measure
    for (const auto& p : spec.points)
      if (support(p.witness.weights, s.tol.supp) != p.supp)
        fail.push_back(detail::witness(s, "point support != witness support"));
  });

  add("prime-ideal-property", [](const S& s, SplitMix64&, W& fail) {
    if (s.n > 6) return;  // quadratic in the ideal count
    PrimSpectrum<T> spec = prim_spectrum(s);
    auto ideals = enumerate_s_ideals(s.digraph);
    for (const auto& i1 : ideals)
      for (const auto& i2 : ideals) {
        Subset u = subset_union(i1.support, i2.support);
        for (const auto& p : spec.points)
          if (is_subset_of(p.supp, u) && !is_subset_of(p.supp, i1.support) &&
              !is_subset_of(p.supp, i2.support))
            fail.push_back(detail::witness(s, "primitive ideal is not prime"));
      }
  });

  add("convergence-specialization", [](const S& s, SplitMix64&, W& fail) {
    if (s.n > 8) return;
    PrimSpectrum<T> spec = prim_spectrum(s);
    // q lies in the closure of {p} iff every base open set containing q
    // meets {p}; scan base sets given by indicators of all subsets
    for (int p = 0; p < int(spec.points.size()); ++p)
      for (int q = 0; q < int(spec.points.size()); ++q) {
        bool by_order = is_subset_of(spec.points[size_t(q)].supp, spec.points[size_t(p)].supp);
        bool by_base = true;
        for (std::uint64_t m = 1; m < (std::uint64_t(1) << s.n); ++m) {
          Vec<T> f = indicator<T>(subset_from_mask(m, int(s.n)), s.n);
          if (in_base_open_set(spec, f, q, s.tol) && !in_base_open_set(spec, f, p, s.tol)) {
            by_base = false;
            break;
          }
        }
        if (by_order != by_base)
          fail.push_back(detail::witness(s, "specialization criterion mismatch"));
      }
  });

  add("indicator-fixed-on-support", [](const S& s, SplitMix64& rng, W& fail) {
    if (s.n > 8) return;
    auto ergodics = ergodic_measures(s);
    Vec<T> mu = detail::random_invariant(rng, ergodics, s.n);
    for (const SIdeal& ideal : enumerate_s_ideals(s.digraph))
      if (!indicator_is_fixed(s, mu, ideal.support))
        fail.push_back(detail::witness(s, "indicator of self-supporting set not fixed a.e. on " +
                                              subset_str(ideal.support)));
  });

  add("quotient-spectrum-homeomorphism", [](const S& s, SplitMix64&, W& fail) {
    if (s.n > 8) return;
    for (const SIdeal& ideal : enumerate_s_ideals(s.digraph)) {
      S restricted = restrict_semigroup(s, ideal);
      PrimSpectrum<T> ambient = prim_spectrum(s);
      PrimSpectrum<T> quotient = prim_spectrum(restricted);
      auto mapping = quotient_spectrum_bijection(s, ideal);
      // closure preserved both ways (both sides discrete, so compare orders)
      for (auto [p1, q1] : mapping)
        for (auto [p2, q2] : mapping) {
          bool up = is_subset_of(ambient.points[size_t(p2)].supp, ambient.points[size_t(p1)].supp);
          bool down =
              is_subset_of(quotient.points[size_t(q2)].supp, quotient.points[size_t(q1)].supp);
          if (up != down)
            fail.push_back(detail::witness(s, "quotient map does not preserve specialization"));
        }
    }
  });

  add("hat-lattice-isometry", [](const S& s, SplitMix64&, W& fail) {
    IsomorphismReport report = verify_lattice_isomorphism(s);
    if (!report.all_pass)
      for (const auto& f : report.failures) fail.push_back(detail::witness(s, "hat audit: " + f));
  });

  add("mean-ergodicity-equivalence", [](const S& s, SplitMix64&, W& fail) {
    MeanErgodicVerdict verdict = mean_ergodicity_verdict(s);
    if (!verdict.mean_ergodic)
      fail.push_back(detail::witness(s, "genuine finite instance not mean ergodic"));
    MeanProjection<T> exact = exact_projection(s);
    MeanProjection<T> net = cesaro_projection(s);
    if (max_abs(Mat<T>(exact.matrix - net.matrix)) > 1e-8)
      fail.push_back(detail::witness(s, "net and exact projections disagree"));
    if (s.generators.size() == 1) {
      MeanProjection<T> abel = abel_projection(s);
      if (max_abs(Mat<T>(exact.matrix - abel.matrix)) > 1e-8)
        fail.push_back(detail::witness(s, "Abel and exact projections disagree"));
    }
  });

  add("restricted-mean-ergodic-extension", [](const S& s, SplitMix64&, W& fail) {
    // mean ergodic iff the system restricted to the center is mean ergodic
    // and fixed functions extend from the center
    MeanErgodicVerdict verdict = mean_ergodicity_verdict(s);
    PrimSpectrum<T> spec = prim_spectrum(s);
    S on_center = restrict_semigroup(s, SIdeal{minimal_center_support(spec)});
    MeanErgodicVerdict center_verdict = mean_ergodicity_verdict(on_center);
    bool rhs = center_verdict.mean_ergodic && verdict.condition_c_iii;
    if (verdict.mean_ergodic != rhs)
      fail.push_back(detail::witness(s, "center-restriction equivalence fails"));
  });

  add("projection-rows-ergodic-mixture", [](const S& s, SplitMix64&, W& fail) {
    // rows of the mean projection are invariant measures: the convex
    // mixtures of ergodic measures by absorption weights
    MeanProjection<T> proj = exact_projection(s);
    auto ergodics = ergodic_measures(s);
    for (Index x = 0; x < s.n; ++x) {
      Vec<T> row = proj.matrix.row(x).transpose();
      if (!is_invariant(s, row)) {
        fail.push_back(detail::witness(s, "projection row not invariant"));
        continue;
      }
      // reconstruct mixture coefficients by class masses
      Vec<T> recombined = Vec<T>::Zero(s.n);
      for (const auto& e : ergodics) {
        T class_mass(0);
        for (int y : e.supp) class_mass += row(y);
        recombined += Vec<T>(class_mass * e.weights);
      }
      if (max_abs(Vec<T>(recombined - row)) > 1e-10)
        fail.push_back(detail::witness(s, "projection row is not a mixture of ergodics"));
    }
  });
}

template <class T>
std::vector<OracleReport> run_suite(std::uint64_t seed, int count, int max_n = 8) {
  PropositionSuite<T> suite;
  return suite.run(seed, count, max_n);
}

}  // namespace primspec

#endif  // PRIMSPEC_VERIFY_HPP
