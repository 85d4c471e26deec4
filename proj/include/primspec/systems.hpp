#ifndef PRIMSPEC_SYSTEMS_HPP
#define PRIMSPEC_SYSTEMS_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "primspec/core.hpp"
#include "primspec/rational.hpp"

namespace primspec {

// Instance builders: Koopman operators of finite maps, rotations, Ulam
// discretizations of piecewise-affine interval maps, Kronecker products and
// seeded random instances for the test harness.

struct MapSpec {
  int n = 0;
  std::vector<int> image;  // image[x] = phi(x)
};

/// Koopman operator of a finite map: matrix[x][phi(x)] = 1.
template <class T>
MarkovSemigroup<T> build_koopman(const MapSpec& spec, Tolerances<T> tol = {}) {
  if (spec.n < 1 || int(spec.image.size()) != spec.n)
    throw OutOfRange("build_koopman: image must have n entries");
  Mat<T> m = Mat<T>::Zero(spec.n, spec.n);
  for (int x = 0; x < spec.n; ++x) {
    int y = spec.image[x];
    if (y < 0 || y >= spec.n)
      throw OutOfRange("build_koopman: image out of range at state " + std::to_string(x));
    m(x, y) = T(1);
  }
  return make_semigroup<T>({std::move(m)}, tol);
}

/// Rotation x -> x + a (mod n); its spectrum has exactly gcd(n, a) points.
template <class T>
MarkovSemigroup<T> build_rotation(int n, int a, Tolerances<T> tol = {}) {
  MapSpec spec;
  spec.n = n;
  spec.image.resize(n);
  const int shift = ((a % n) + n) % n;
  for (int x = 0; x < n; ++x) spec.image[x] = (x + shift) % n;
  return build_koopman<T>(spec, tol);
}

/// A branch of a piecewise-affine map of [0,1): phi(x) = slope*x + intercept
/// on [lo, hi), with image inside [0,1].
struct UlamBranch {
  Rational lo, hi, slope, intercept;
};

struct UlamSpec {
  enum class Kind { doubling, rotation, custom };
  Kind kind = Kind::doubling;
  Rational alpha = Rational(0);  // rotation angle
  int cells = 2;
  std::vector<UlamBranch> branches;  // used when kind == custom
};

namespace detail {

inline Rational overlap_length(const Rational& a0, const Rational& a1, const Rational& b0,
                               const Rational& b1) {
  Rational lo = a0 < b0 ? b0 : a0;
  Rational hi = a1 < b1 ? a1 : b1;
  return hi > lo ? hi - lo : Rational(0);
}

}  // namespace detail

/// Ulam discretization over `cells` equal intervals of [0,1):
/// P[i][j] = |cell_i ∩ phi^{-1}(cell_j)| / |cell_i|, computed exactly for
/// affine branches.
template <class T>
MarkovSemigroup<T> build_ulam(const UlamSpec& spec, Tolerances<T> tol = {}) {
  if (spec.cells < 2) throw OutOfRange("build_ulam: need at least 2 cells");
  std::vector<UlamBranch> branches;
  switch (spec.kind) {
    case UlamSpec::Kind::doubling:
      branches = {{Rational(0), Rational(1, 2), Rational(2), Rational(0)},
                  {Rational(1, 2), Rational(1), Rational(2), Rational(-1)}};
      break;
    case UlamSpec::Kind::rotation: {
      Rational a = spec.alpha;
      // reduce mod 1
      while (a < Rational(0)) a += Rational(1);
      while (!(a < Rational(1))) a -= Rational(1);
      if (a == Rational(0)) {
        branches = {{Rational(0), Rational(1), Rational(1), Rational(0)}};
      } else {
        branches = {{Rational(0), Rational(1) - a, Rational(1), a},
                    {Rational(1) - a, Rational(1), Rational(1), a - Rational(1)}};
      }
      break;
    }
    case UlamSpec::Kind::custom:
      branches = spec.branches;
      break;
  }
  for (const auto& b : branches)
    if (b.slope == Rational(0)) throw DegenerateBranch("build_ulam: branch slope is zero");

  const int n = spec.cells;
  const Rational cell(1, n);
  Mat<Rational> p = Mat<Rational>::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Rational c0 = Rational(i) * cell, c1 = Rational(i + 1) * cell;
    for (const auto& b : branches) {
      Rational u0 = c0 < b.lo ? b.lo : c0;
      Rational u1 = c1 < b.hi ? c1 : b.hi;
      if (!(u1 > u0)) continue;
      Rational img0 = b.slope * u0 + b.intercept;
      Rational img1 = b.slope * u1 + b.intercept;
      if (img1 < img0) std::swap(img0, img1);  // negative slope
      Rational inv_abs_slope = Rational(1) / abs(b.slope);
      for (int j = 0; j < n; ++j) {
        Rational len =
            detail::overlap_length(img0, img1, Rational(j) * cell, Rational(j + 1) * cell);
        if (len > Rational(0)) p(i, j) += len * inv_abs_slope / cell;
      }
    }
  }
  Mat<T> cast(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if constexpr (is_exact_v<T>)
        cast(i, j) = p(i, j);
      else
        cast(i, j) = p(i, j).to_double();
    }
  return make_semigroup<T>({std::move(cast)}, tol);
}

struct ProductOptions {
  bool pairwise_products = true;   // S_i (x) T_j
  bool factor_embeddings = false;  // S_i (x) Id and Id (x) T_j
};

/// Kronecker product system on the product state space. States are paired
/// as (x1, x2) -> x1 * n2 + x2.
template <class T>
MarkovSemigroup<T> build_product(const MarkovSemigroup<T>& s1, const MarkovSemigroup<T>& s2,
                                 ProductOptions opts = {}) {
  const Index n1 = s1.n, n2 = s2.n;
  auto kron = [&](const Mat<T>& a, const Mat<T>& b) {
    Mat<T> k(n1 * n2, n1 * n2);
    for (Index i = 0; i < n1; ++i)
      for (Index j = 0; j < n1; ++j)
        for (Index p = 0; p < n2; ++p)
          for (Index q = 0; q < n2; ++q) k(i * n2 + p, j * n2 + q) = a(i, j) * b(p, q);
    return k;
  };
  Mat<T> id1 = Mat<T>::Identity(n1, n1), id2 = Mat<T>::Identity(n2, n2);
  std::vector<Mat<T>> gens;
  if (opts.pairwise_products)
    for (const auto& a : s1.generators)
      for (const auto& b : s2.generators) gens.push_back(kron(a, b));
  if (opts.factor_embeddings) {
    for (const auto& a : s1.generators) gens.push_back(kron(a, id2));
    for (const auto& b : s2.generators) gens.push_back(kron(id1, b));
  }
  return make_semigroup<T>(std::move(gens), s1.tol);
}

/// Counter-based splittable PRNG (splitmix64); reproducible across parallel
/// sweeps because each stream is a pure function of (seed, counter).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  double uniform() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

  static SplitMix64 split(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    mix.next();
    return mix;
  }

 private:
  std::uint64_t state_;
};

/// Seeded random instance: either a random functional-graph Koopman system
/// or a random sparse stochastic matrix with small-integer weights (rows sum
/// to 1 exactly in rational mode). Multi-generator instances take powers of
/// one base matrix, which commute by construction.
template <class T>
MarkovSemigroup<T> random_instance(std::uint64_t seed, int n_max, int m_max,
                                   double koopman_bias = 0.5, Tolerances<T> tol = {}) {
  if (n_max > 12) throw TooLarge("random_instance: n_max > 12");
  SplitMix64 rng = SplitMix64::split(seed, 0);
  const int n = 1 + int(rng.below(std::uint64_t(n_max)));
  Mat<T> base;
  if (rng.uniform() < koopman_bias) {
    MapSpec spec;
    spec.n = n;
    for (int x = 0; x < n; ++x) spec.image.push_back(int(rng.below(std::uint64_t(n))));
    base = build_koopman<T>(spec, tol).generators.front();
  } else {
    base = Mat<T>::Zero(n, n);
    for (int x = 0; x < n; ++x) {
      int targets = 1 + int(rng.below(3));
      std::vector<int> weights(size_t(n), 0);
      for (int t = 0; t < targets; ++t) weights[rng.below(std::uint64_t(n))] += 1 + int(rng.below(4));
      int total = std::accumulate(weights.begin(), weights.end(), 0);
      for (int y = 0; y < n; ++y)
        if (weights[size_t(y)] > 0) base(x, y) = T(weights[size_t(y)]) / T(total);
    }
  }
  const int m = 1 + int(rng.below(std::uint64_t(std::max(1, m_max))));
  std::vector<Mat<T>> gens;
  Mat<T> power = base;
  for (int i = 0; i < m; ++i) {
    gens.push_back(power);
    power = power * base;
  }
  return make_semigroup<T>(std::move(gens), tol);
}

}  // namespace primspec

#endif  // PRIMSPEC_SYSTEMS_HPP
