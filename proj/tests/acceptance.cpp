// Acceptance suite: one line of output per criterion, nonzero exit if any
// fails. Each criterion is property-based over seeded instances plus the
// hand-checked fixtures; tolerances and instance counts are fixed here and
// not configurable.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "primspec/verify.hpp"

using namespace primspec;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& note) {
    if (!ok) {
      pass = false;
      if (notes.size() < 5) notes.push_back(note);
    }
  }
};

Mat<double> absorbing_split_gen() {
  Mat<double> g(3, 3);
  g << 0, 0.5, 0.5, 0, 1, 0, 0, 0, 1;
  return g;
}

std::vector<MarkovSemigroup<double>> float_fixtures() {
  std::vector<MarkovSemigroup<double>> out;
  out.push_back(make_semigroup<double>({absorbing_split_gen()}));
  out.push_back(build_rotation<double>(2, 1));
  out.push_back(build_rotation<double>(6, 2));
  out.push_back(build_koopman<double>({4, {1, 2, 3, 2}}));
  out.push_back(build_product(build_rotation<double>(2, 1), build_rotation<double>(3, 1)));
  return out;
}

// 1. Closure axioms, exhaustive over subsets of Prim, 500 instances.
void criterion_closure_axioms(Criterion& c) {
  int used = 0;
  for (std::uint64_t seed = 0; used < 500; ++seed) {
    auto s = random_instance<double>(seed, 8, 3);
    auto spec = prim_spectrum(s);
    const size_t count = spec.points.size();
    if (count > 6) continue;
    ++used;
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
    c.require(closure(spec, {}).empty(), "closure of the empty set");
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << count); ++m) {
      std::uint64_t cl = as_mask(closure(spec, as_set(m)));
      c.require((cl & m) == m, "extensive");
      c.require(as_mask(closure(spec, as_set(cl))) == cl, "idempotent");
      for (std::uint64_t m2 = m; m2 < (std::uint64_t(1) << count); ++m2) {
        std::uint64_t joint = as_mask(closure(spec, as_set(m | m2)));
        c.require(joint == (cl | as_mask(closure(spec, as_set(m2)))), "additive");
      }
    }
  }
}

// 2. Extreme points of the invariant polytope are exactly the ergodic
//    measures; float to 1e-8 and exact in rational mode.
void criterion_extreme_iff_ergodic(Criterion& c) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = random_instance<double>(seed, 8, 3);
    auto ergodics = ergodic_measures(s);
    auto vertices = oracle_polytope_vertices(s);
    c.require(ergodics.size() == vertices.size(), "vertex count, seed " + std::to_string(seed));
    for (const auto& e : ergodics) {
      double best = 1e9;
      for (const auto& v : vertices) best = std::min(best, max_abs(Vec<double>(v - e.weights)));
      c.require(best <= 1e-8, "vertex match, seed " + std::to_string(seed));
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = random_instance<Rational>(seed, 6, 2);
    auto ergodics = ergodic_measures(s);
    auto vertices = oracle_polytope_vertices(s);
    c.require(ergodics.size() == vertices.size(), "exact vertex count");
    for (const auto& e : ergodics) {
      bool hit = false;
      for (const auto& v : vertices)
        if (v == e.weights) hit = true;
      c.require(hit, "exact vertex match, seed " + std::to_string(seed));
    }
  }
}

// 3. Every terminal class carries exactly one ergodic measure, strictly
//    positive on it.
void criterion_terminal_classes(Criterion& c) {
  auto check = [&](const MarkovSemigroup<double>& s, const std::string& tag) {
    auto minimal = minimal_self_supporting_sets(s.digraph);
    auto spec = prim_spectrum(s);
    c.require(minimal.size() == spec.points.size(), "class/point count, " + tag);
    for (const auto& l : minimal) {
      int hits = 0;
      for (const auto& p : spec.points)
        if (p.supp == l) {
          ++hits;
          for (int x : l)
            c.require(p.witness.weights(x) > s.tol.supp, "strict positivity, " + tag);
        }
      c.require(hits == 1, "unique measure per class, " + tag);
    }
  };
  for (const auto& s : float_fixtures()) check(s, "fixture");
  for (std::uint64_t seed = 0; seed < 500; ++seed)
    check(random_instance<double>(seed, 8, 3), "seed " + std::to_string(seed));
}

// 4. Cesaro-decay membership agrees with the algebraic radical test for
//    every enumerated self-supporting set, 20 random probes each; the
//    absorbing-split probe decays exactly like 1/N in rational mode.
void criterion_radical_membership(Criterion& c) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto s = random_instance<double>(seed, 8, 3);
    auto spec = prim_spectrum(s);
    SplitMix64 rng = SplitMix64::split(seed, 44);
    for (const SIdeal& ideal : enumerate_s_ideals(s.digraph)) {
      auto rad = radical(spec, ideal.support);
      for (int trial = 0; trial < 20; ++trial) {
        Vec<double> f(s.n);
        for (Index i = 0; i < s.n; ++i) f(i) = rng.uniform() * 2 - 1;
        if (rad && trial % 2 == 1)
          for (int x : rad->support) f(x) = 0;  // exercise both verdicts
        bool algebraic = true;
        if (rad)
          for (int x : rad->support)
            if (std::fabs(f(x)) > s.tol.supp) algebraic = false;
        bool via_means = radical_membership_via_means(s, ideal.support, f).member;
        c.require(via_means == algebraic,
                  "membership mismatch, seed " + std::to_string(seed) + " set " +
                      subset_str(ideal.support));
      }
    }
  }
  // exact 1/N decay of the pinned probe
  Mat<Rational> g(3, 3);
  g << Rational(0), Rational(1, 2), Rational(1, 2), Rational(0), Rational(1), Rational(0),
      Rational(0), Rational(0), Rational(1);
  auto s = make_semigroup<Rational>({g});
  Vec<Rational> probe(3);
  probe << Rational(1), Rational(0), Rational(0);
  NetConfig cfg;
  cfg.tol_conv = 0;  // full trace to the cap
  auto result = radical_membership_via_means(s, {0, 1, 2}, probe, cfg);
  c.require(result.member, "probe is a member");
  for (const auto& [n_steps, value] : result.trace)
    c.require(value == Rational(1) / Rational(n_steps), "probe decay at N=" +
                                                            std::to_string(n_steps));
  c.require(result.trace.back().first == 1'000'000 &&
                result.trace.back().second == Rational(1, 1'000'000),
            "probe reaches the 1e-6 threshold exactly at the cap");
}

// 5. The minimal center of attraction attracts every orbit; removing any
//    single center state breaks attraction for some orbit.
void criterion_center_of_attraction(Criterion& c) {
  const long long n_steps = 10'000;
  std::vector<MarkovSemigroup<double>> koopman_fixtures;
  koopman_fixtures.push_back(build_koopman<double>({3, {0, 1, 2}}));
  koopman_fixtures.push_back(build_koopman<double>({4, {1, 2, 3, 2}}));
  koopman_fixtures.push_back(build_koopman<double>({5, {1, 0, 1, 4, 4}}));
  koopman_fixtures.push_back(build_rotation<double>(2, 1));
  for (const auto& s : koopman_fixtures) {
    auto spec = prim_spectrum(s);
    Subset center = minimal_center_support(spec);
    const double constant = double(s.n);  // transient length is below n
    for (int x = 0; x < int(s.n); ++x)
      c.require(visit_frequency(s, x, center, n_steps) >= 1.0 - constant / double(n_steps),
                "attraction bound, state " + std::to_string(x));
    for (size_t drop = 0; drop < center.size(); ++drop) {
      Subset u;
      for (size_t i = 0; i < center.size(); ++i)
        if (i != drop) u.push_back(center[i]);
      bool some_low = false;
      for (int x = 0; x < int(s.n); ++x)
        if (visit_frequency(s, x, u, n_steps) <= 0.6) some_low = true;
      c.require(some_low, "minimality after dropping state " + std::to_string(center[drop]));
    }
  }
}

// 6. The hat map is a bijective isometric lattice map onto functions on
//    Prim, and hat_inverse inverts it.
void criterion_hat_isomorphism(Criterion& c) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = random_instance<double>(seed, 8, 3);
    auto report = verify_lattice_isomorphism(s);
    c.require(report.fix_dim == report.prim_count, "dimension, seed " + std::to_string(seed));
    c.require(report.all_pass, "audit, seed " + std::to_string(seed));
  }
}

// 7. Mean-ergodicity equivalence: all conditions true on genuine finite
//    instances and the three projection computations agree to 1e-8.
void criterion_mean_ergodicity(Criterion& c) {
  auto check = [&](const MarkovSemigroup<double>& s, const std::string& tag) {
    auto verdict = mean_ergodicity_verdict(s);
    c.require(verdict.mean_ergodic && verdict.condition_b_i && verdict.condition_c_i &&
                  verdict.condition_c_ii && verdict.condition_c_iii,
              "verdict, " + tag);
    Mat<double> exact = exact_projection(s).matrix;
    c.require(max_abs(Mat<double>(cesaro_projection(s).matrix - exact)) <= 1e-8,
              "Cesaro vs exact, " + tag);
    if (s.generators.size() == 1)
      c.require(max_abs(Mat<double>(abel_projection(s).matrix - exact)) <= 1e-8,
                "Abel vs exact, " + tag);
  };
  for (const auto& s : float_fixtures()) check(s, "fixture");
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    check(random_instance<double>(seed, 8, 3), "seed " + std::to_string(seed));
}

// 8. Rotation spectra: #Prim(rotation(n, a)) = gcd(n, a), exhaustively.
void criterion_rotation_structure(Criterion& c) {
  for (int n = 1; n <= 12; ++n)
    for (int a = 0; a < n; ++a) {
      auto s = build_rotation<Rational>(n, a);
      int expected = a == 0 ? n : std::gcd(n, a);
      c.require(int(prim_spectrum(s).points.size()) == expected,
                "n=" + std::to_string(n) + " a=" + std::to_string(a));
    }
}

// 9. Ulam discretization of the doubling map: unique uniform stationary
//    measure at every resolution 2^k, k = 2..8.
void criterion_ulam_doubling(Criterion& c) {
  for (int k = 2; k <= 8; ++k) {
    UlamSpec spec;
    spec.kind = UlamSpec::Kind::doubling;
    spec.cells = 1 << k;
    auto s = build_ulam<double>(spec);
    auto prim = prim_spectrum(s);
    c.require(prim.points.size() == 1, "singleton spectrum, k=" + std::to_string(k));
    const double uniform = 1.0 / double(spec.cells);
    for (Index i = 0; i < s.n; ++i)
      c.require(std::fabs(prim.points[0].witness.weights(i) - uniform) <= 1e-10,
                "uniform stationary measure, k=" + std::to_string(k));
  }
}

// 10. Prim and radicals of a restricted system match the image of the
//     quotient correspondence, for every enumerated ideal.
void criterion_quotient_correspondence(Criterion& c) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto s = random_instance<double>(seed, 8, 3);
    auto spec = prim_spectrum(s);
    for (const SIdeal& ideal : enumerate_s_ideals(s.digraph)) {
      auto restricted = restrict_semigroup(s, ideal);
      auto quotient = prim_spectrum(restricted);
      auto pairs = quotient_spectrum_bijection(s, ideal);
      size_t inside = 0;
      for (const auto& p : spec.points)
        if (is_subset_of(p.supp, ideal.support)) ++inside;
      c.require(pairs.size() == inside && pairs.size() == quotient.points.size(),
                "bijection size, seed " + std::to_string(seed));
      for (auto [up, down] : pairs) {
        Subset relabeled;
        for (int i : quotient.points[size_t(down)].supp)
          relabeled.push_back(ideal.support[size_t(i)]);
        std::sort(relabeled.begin(), relabeled.end());
        c.require(relabeled == spec.points[size_t(up)].supp,
                  "support match, seed " + std::to_string(seed));
      }
      auto rad_up = radical(spec, ideal.support);
      Subset rad_down = minimal_center_support(quotient);
      Subset rad_down_up;
      for (int i : rad_down) rad_down_up.push_back(ideal.support[size_t(i)]);
      std::sort(rad_down_up.begin(), rad_down_up.end());
      c.require(rad_up.has_value() && rad_up->support == rad_down_up,
                "radical match, seed " + std::to_string(seed));
    }
  }
}

}  // namespace

int main() {
  using Runner = void (*)(Criterion&);
  const std::vector<std::pair<std::string, Runner>> criteria = {
      {"closure axioms, exhaustive over Prim subsets", criterion_closure_axioms},
      {"extreme points of the invariant polytope are the ergodic measures",
       criterion_extreme_iff_ergodic},
      {"each terminal class carries one strictly positive ergodic measure",
       criterion_terminal_classes},
      {"mean-decay membership matches the algebraic radical, exact 1/N probe",
       criterion_radical_membership},
      {"minimal center of attraction: attraction and minimality", criterion_center_of_attraction},
      {"hat map: bijective isometric lattice map with inverse", criterion_hat_isomorphism},
      {"mean-ergodicity equivalence and three-way projection agreement",
       criterion_mean_ergodicity},
      {"rotation spectra count gcd(n, a), exhaustive for n <= 12", criterion_rotation_structure},
      {"Ulam doubling map: unique uniform stationary measure", criterion_ulam_doubling},
      {"quotient correspondence preserves Prim and radicals", criterion_quotient_correspondence},
  };

  bool all_pass = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    c.name = criteria[i].first;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("threw: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu: %-4s (%6.2fs) %s\n", i + 1, c.pass ? "pass" : "FAIL", seconds,
                c.name.c_str());
    for (const auto& note : c.notes) std::printf("              note: %s\n", note.c_str());
    all_pass = all_pass && c.pass;
  }
  return all_pass ? 0 : 1;
}
