#ifndef PRIMSPEC_MEANS_HPP
#define PRIMSPEC_MEANS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "primspec/linalg.hpp"
#include "primspec/measures.hpp"

namespace primspec {

struct NetConfig {
  enum class Kind { cesaro, abel, composed_cesaro };
  Kind kind = Kind::cesaro;
  long long n_max = 1'000'000;  // iteration cap for Cesaro nets
  double tol_conv = 1e-9;
  double tol_member = 1e-6;
  int abel_k_max = 40;  // r_k = 1 - 2^{-k}
};

template <class T>
struct MeanProjection {
  Mat<T> matrix;
  bool converged = false;
  long long n_final = 0;   // final N (Cesaro) or k (Abel schedule)
  double residual = 0.0;   // last net increment, sup norm
};

/// Cesaro means of one generator with a doubling cache:
///   C_{2N} = (C_N + S^N C_N) / 2,  S^{2N} = (S^N)^2,
/// plus evaluation at arbitrary N via C_{A+B} = (A C_A + S^A B C_B)/(A+B).
template <class T>
class CesaroTable {
 public:
  explicit CesaroTable(Mat<T> generator) : gen_(std::move(generator)) {
    const Index n = gen_.rows();
    pow2_.push_back(gen_);                           // S^1
    ces2_.push_back(Mat<T>::Identity(n, n));         // C_1 = Id
  }

  const Mat<T>& cesaro_pow2(int j) {
    ensure(j);
    return ces2_[j];
  }
  const Mat<T>& power_pow2(int j) {
    ensure(j);
    return pow2_[j];
  }

  /// C_N for arbitrary N >= 1, assembled from the binary expansion of N.
  Mat<T> cesaro(long long n_steps) {
    const Index dim = gen_.rows();
    Mat<T> ces = Mat<T>::Zero(dim, dim);
    Mat<T> pow = Mat<T>::Identity(dim, dim);
    long long done = 0;
    for (int j = 62; j >= 0; --j) {
      if (!(n_steps >> j & 1)) continue;
      ensure(j);
      const long long block = 1LL << j;
      // append a block of length 2^j after the first `done` steps
      ces = (done == 0) ? ces2_[j]
                        : Mat<T>((T(done) * ces + pow * (T(block) * ces2_[j])) / T(done + block));
      pow = (done == 0) ? pow2_[j] : Mat<T>(pow * pow2_[j]);
      done += block;
    }
    return ces;
  }

 private:
  void ensure(int j) {
    while (int(ces2_.size()) <= j) {
      const Mat<T>& c = ces2_.back();
      const Mat<T>& p = pow2_.back();
      ces2_.push_back((c + p * c) / T(2));
      pow2_.push_back(p * p);
    }
  }

  Mat<T> gen_;
  std::vector<Mat<T>> pow2_;  // S^{2^j}
  std::vector<Mat<T>> ces2_;  // C_{2^j}
};

/// The composed Cesaro mean C_N^{(1)} ... C_N^{(m)} of all generators at a
/// shared N; the right ergodic net used for multi-generator abelian
/// semigroups (reduces to the plain Cesaro mean at m = 1).
template <class T>
Mat<T> composed_cesaro_pow2(std::vector<CesaroTable<T>>& tables, int j) {
  Mat<T> q = tables.front().cesaro_pow2(j);
  for (size_t i = 1; i < tables.size(); ++i) q = q * tables[i].cesaro_pow2(j);
  return q;
}

template <class T>
std::vector<CesaroTable<T>> make_tables(const MarkovSemigroup<T>& s) {
  std::vector<CesaroTable<T>> tables;
  tables.reserve(s.generators.size());
  for (const auto& g : s.generators) tables.emplace_back(g);
  return tables;
}

/// Mean ergodic projection as the limit of the binomial Cesaro net
///   T_N = prod_i ((Id + S_i)/2)^N,
/// evaluated by squaring along N = 1, 2, 4, ... The binomial means average
/// the same powers as the arithmetic means and have the same limit, but the
/// factor (1+lambda)/2 pushes every non-fixed eigenvalue strictly inside the
/// unit disk, so the net converges geometrically; the arithmetic means'
/// O(1/N) tail cannot pass tol_conv within any practical N_max.
template <class T>
MeanProjection<T> cesaro_projection(const MarkovSemigroup<T>& s, const NetConfig& cfg = {}) {
  const Index n = s.n;
  Mat<T> lazy = Mat<T>::Identity(n, n);
  for (const auto& g : s.generators)
    lazy = lazy * Mat<T>((Mat<T>(Mat<T>::Identity(n, n)) + g) / T(2));
  Mat<T> cur = lazy;
  long long n_steps = 1;
  while (2 * n_steps <= cfg.n_max) {
    Mat<T> next = cur * cur;
    n_steps *= 2;
    double residual = max_abs(Mat<T>(next - cur));
    cur = std::move(next);
    if (residual < cfg.tol_conv) return {std::move(cur), true, n_steps, residual};
  }
  throw NotConverged("cesaro_projection: no convergence below " + std::to_string(cfg.tol_conv) +
                     " within N_max; check tolerance configuration");
}

/// Mean ergodic projection by direct linear algebra: project onto the joint
/// fixed space along the sum of the ranges of (S_i - Id). For commuting
/// stochastic generators these subspaces always complement; failure to do so
/// signals numerical breakdown.
template <class T>
MeanProjection<T> exact_projection(const MarkovSemigroup<T>& s) {
  const Index n = s.n;
  const Index m = Index(s.generators.size());
  std::vector<Vec<T>> fix = fix_space_basis(s);
  const Index k = Index(fix.size());

  Mat<T> ranges(n, m * n);
  for (Index i = 0; i < m; ++i)
    ranges.middleCols(i * n, n) = s.generators[i] - Mat<T>(Mat<T>::Identity(n, n));
  Mat<T> range_basis = column_space_basis(ranges, s.tol.pivot);
  if (k + range_basis.cols() != n)
    throw DecompositionFailure("exact_projection: fix and range do not complement (dims " +
                               std::to_string(k) + " + " + std::to_string(range_basis.cols()) +
                               " != " + std::to_string(n) + ")");

  Mat<T> basis(n, n);
  for (Index i = 0; i < k; ++i) basis.col(i) = fix[i];
  basis.rightCols(n - k) = range_basis;

  Mat<T> basis_inv;
  try {
    basis_inv = inverse(basis, s.tol.pivot);
  } catch (const SingularSolve&) {
    throw DecompositionFailure("exact_projection: combined basis is numerically singular");
  }
  Mat<T> proj = basis.leftCols(k) * basis_inv.topRows(k);
  return {std::move(proj), true, 0, 0.0};
}

/// Abel mean A_r = (1-r)(Id - rS)^{-1} of a single generator.
template <class T>
Mat<T> abel_operator(const MarkovSemigroup<T>& s, const T& r) {
  if (s.generators.size() != 1)
    throw MultiGenerator("abel_operator: defined for single-generator semigroups");
  if (!(r > T(0)) || !(r < T(1))) throw OutOfRange("abel_operator: r must be in (0,1)");
  const Index n = s.n;
  Mat<T> lhs = Mat<T>::Identity(n, n) - Mat<T>(r * s.generators.front());
  // near r = 1 the smallest pivots scale like 1 - r although the matrix
  // stays invertible, so the singularity threshold must scale with them
  const T pivot_floor = s.tol.pivot * (T(1) - r);
  Mat<T> resolvent = solve_square(std::move(lhs), Mat<T>(Mat<T>::Identity(n, n)), pivot_floor);
  return (T(1) - r) * resolvent;
}

/// Limit of the Abel net along r_k = 1 - 2^{-k}. The operators satisfy
/// A_r = P + (1-r) B + O((1-r)^2), so the limit is taken on the Richardson
/// extrapolants 2 A_{r_{k+1}} - A_{r_k}, which converge quadratically and
/// stay clear of the 1/(1-r) conditioning of the raw resolvents.
template <class T>
MeanProjection<T> abel_projection(const MarkovSemigroup<T>& s, const NetConfig& cfg = {}) {
  std::optional<Mat<T>> prev, prev_ex;
  for (int k = 1; k <= cfg.abel_k_max; ++k) {
    T r = T(1) - T(1) / T(1LL << k);
    Mat<T> cur = abel_operator(s, r);
    if (prev) {
      Mat<T> cur_ex = Mat<T>(T(2) * cur - *prev);
      if (prev_ex) {
        double residual = max_abs(Mat<T>(cur_ex - *prev_ex));
        if (residual < cfg.tol_conv) return {std::move(cur_ex), true, k, residual};
      }
      prev_ex = std::move(cur_ex);
    }
    prev = std::move(cur);
  }
  throw NotConverged("abel_projection: r-schedule exhausted above tolerance");
}

/// Residual of the mean-projection identities P^2 = P, P S_i = S_i P = P,
/// P row-stochastic; sup-norm over all of them.
template <class T>
double projection_residual(const MarkovSemigroup<T>& s, const Mat<T>& proj) {
  double r = max_abs(Mat<T>(proj * proj - proj));
  for (const auto& g : s.generators) {
    r = std::max(r, max_abs(Mat<T>(proj * g - proj)));
    r = std::max(r, max_abs(Mat<T>(g * proj - proj)));
  }
  for (Index x = 0; x < proj.rows(); ++x) {
    r = std::max(r, std::fabs(scalar_ops<T>::to_double(proj.row(x).sum()) - 1.0));
    for (Index y = 0; y < proj.cols(); ++y)
      r = std::max(r, std::max(0.0, -scalar_ops<T>::to_double(proj(x, y))));
  }
  return r;
}

template <class T>
struct MembershipResult {
  bool member = false;
  std::vector<std::pair<long long, T>> trace;  // (N, max over L of C_N|f|)
};

/// Radical membership via mean decay: f lies in rad(I_L) iff the composed
/// Cesaro means of |f| die out uniformly on L. The decay obeys
/// v_N = v_inf + O(1/N), so membership is decided by the threshold
/// tol_member on the two-point extrapolated limit
/// (N2 v2 - N1 v1)/(N2 - N1), or on v_N itself once it drops below the
/// threshold directly.
template <class T>
MembershipResult<T> radical_membership_via_means(const MarkovSemigroup<T>& s, const Subset& L,
                                                 const Vec<T>& f, const NetConfig& cfg = {}) {
  if (!is_self_supporting(s.digraph, L))
    throw NotSelfSupporting("radical_membership_via_means: " + subset_str(L));
  // L is forward-closed, so the decay on L only sees the restricted system.
  MarkovSemigroup<T> restricted = restrict_semigroup(s, SIdeal{L});
  Vec<T> abs_f = restrict_vec(f, L).cwiseAbs();

  auto tables = make_tables(restricted);
  auto max_on_l = [&](const Mat<T>& net) {
    Vec<T> v = net * abs_f;
    T m(0);
    for (Index i = 0; i < v.size(); ++i)
      if (v(i) > m) m = v(i);
    return m;
  };

  if (cfg.n_max < 1) throw NotConverged("radical_membership_via_means: N_max < 1");

  MembershipResult<T> result;
  double prev_v = -1, prev_limit = 0;
  long long prev_n = 0;
  for (int j = 0;; ++j) {
    const long long n_steps = (1LL << j) <= cfg.n_max ? (1LL << j) : cfg.n_max;
    Mat<T> net;
    if (n_steps == (1LL << j)) {
      net = composed_cesaro_pow2(tables, j);
    } else {
      // cap hit: evaluate the composed net once at exactly N = n_max
      net = tables.front().cesaro(n_steps);
      for (size_t i = 1; i < tables.size(); ++i) net = net * tables[i].cesaro(n_steps);
    }
    T value = max_on_l(net);
    result.trace.push_back({n_steps, value});
    double v = scalar_ops<T>::to_double(value);
    if (v <= cfg.tol_member) {
      result.member = true;
      return result;
    }
    if (prev_v >= 0) {
      double limit = (double(n_steps) * v - double(prev_n) * prev_v) / double(n_steps - prev_n);
      bool stabilized =
          j >= 2 && std::fabs(limit - prev_limit) < cfg.tol_conv * std::max(1.0, std::fabs(limit));
      if (stabilized || n_steps >= cfg.n_max) {
        result.member = std::fabs(limit) <= cfg.tol_member;
        return result;
      }
      prev_limit = limit;
    } else if (n_steps >= cfg.n_max) {
      result.member = false;
      return result;
    }
    prev_v = v;
    prev_n = n_steps;
  }
}

/// The deterministic map behind a single 0/1 Koopman generator, if any.
template <class T>
std::optional<std::vector<int>> koopman_map(const MarkovSemigroup<T>& s) {
  if (s.generators.size() != 1) return std::nullopt;
  const Mat<T>& g = s.generators.front();
  std::vector<int> image(size_t(s.n), -1);
  for (Index x = 0; x < s.n; ++x) {
    for (Index y = 0; y < s.n; ++y) {
      if (within(g(x, y), s.tol.zero)) continue;
      if (!within(T(g(x, y) - T(1)), s.tol.zero) || image[size_t(x)] != -1) return std::nullopt;
      image[size_t(x)] = int(y);
    }
    if (image[size_t(x)] == -1) return std::nullopt;
  }
  return image;
}

/// Time average of |f| along the orbit of x: (1/N) sum_{n<N} |f(phi^n(x))|.
template <class T>
double almost_weak_stability(const MarkovSemigroup<T>& s, const Vec<T>& f, int x, long long n_steps) {
  auto phi = koopman_map(s);
  if (!phi) throw NotKoopman("almost_weak_stability: generator is not a Koopman matrix");
  double acc = 0;
  int state = x;
  for (long long n = 0; n < n_steps; ++n) {
    acc += std::fabs(scalar_ops<T>::to_double(f(state)));
    state = (*phi)[size_t(state)];
  }
  return acc / double(n_steps);
}

/// Fraction of the first N orbit points of x that land in U.
template <class T>
double visit_frequency(const MarkovSemigroup<T>& s, int x, const Subset& u, long long n_steps) {
  auto phi = koopman_map(s);
  if (!phi) throw NotKoopman("visit_frequency: generator is not a Koopman matrix");
  long long hits = 0;
  int state = x;
  for (long long n = 0; n < n_steps; ++n) {
    if (subset_contains(u, state)) ++hits;
    state = (*phi)[size_t(state)];
  }
  return double(hits) / double(n_steps);
}

}  // namespace primspec

#endif  // PRIMSPEC_MEANS_HPP
