#ifndef PRIMSPEC_MEASURES_HPP
#define PRIMSPEC_MEASURES_HPP

#include <cmath>
#include <vector>

#include "primspec/ideals.hpp"
#include "primspec/linalg.hpp"

namespace primspec {

template <class T>
struct ErgodicMeasure {
  Vec<T> weights;  // probability measure on the ambient space
  Subset supp;     // a minimal self-supporting set, weights strictly positive there
};

template <class T>
struct InvariantPolytope {
  Index n = 0;
  std::vector<Vec<T>> vertices;  // the ergodic measures
  Index affine_dim = 0;          // #vertices - 1
};

/// Kernel of the stacked adjoint system {mu G_i = mu for all i} on a
/// semigroup, as raw vectors (not normalized).
template <class T>
std::vector<Vec<T>> stationary_kernel(const MarkovSemigroup<T>& s) {
  const Index n = s.n;
  const Index m = Index(s.generators.size());
  Mat<T> stacked(m * n, n);
  for (Index i = 0; i < m; ++i)
    stacked.middleRows(i * n, n) =
        s.generators[i].transpose() - Mat<T>(Mat<T>::Identity(n, n));
  return kernel_basis(std::move(stacked), s.tol.pivot);
}

/// Dimension of the affine space of invariant probability measures on s
/// (0 means a unique stationary distribution).
template <class T>
Index stationary_affine_dim(const MarkovSemigroup<T>& s) {
  return Index(stationary_kernel(s).size()) - 1;
}

/// One ergodic measure per minimal self-supporting set, computed by a linear
/// solve on the restricted class. The result is exactly the set of extreme
/// points of the invariant-measure polytope.
template <class T>
std::vector<ErgodicMeasure<T>> ergodic_measures(const MarkovSemigroup<T>& s) {
  std::vector<ErgodicMeasure<T>> out;
  for (const Subset& L : minimal_self_supporting_sets(s.digraph)) {
    MarkovSemigroup<T> restricted = restrict_semigroup(s, SIdeal{L});
    std::vector<Vec<T>> kernel = stationary_kernel(restricted);
    if (kernel.size() != 1)
      throw NonUniqueOnMinimalClass("stationary space on minimal class " + subset_str(L) +
                                    " has dimension " + std::to_string(kernel.size()));
    Vec<T> mu = kernel.front();
    T total = mu.sum();
    if (total < T(0)) mu = -mu, total = -total;
    mu /= total;
    for (Index i = 0; i < mu.size(); ++i)
      if (!(mu(i) > s.tol.supp))
        throw NonUniqueOnMinimalClass("stationary measure not strictly positive on class " +
                                      subset_str(L));
    out.push_back({extend_by_zero(mu, L, s.n), L});
  }
  return out;
}

template <class T>
InvariantPolytope<T> invariant_polytope(const MarkovSemigroup<T>& s) {
  InvariantPolytope<T> p;
  p.n = s.n;
  for (auto& e : ergodic_measures(s)) p.vertices.push_back(std::move(e.weights));
  p.affine_dim = Index(p.vertices.size()) - 1;
  return p;
}

/// Joint fixed space of the generators acting on functions. Float mode
/// returns an orthonormal basis whose first element is the normalized
/// constant function; rational mode returns an exact (unnormalized) basis
/// starting with the constant function 1.
template <class T>
std::vector<Vec<T>> fix_space_basis(const MarkovSemigroup<T>& s) {
  const Index n = s.n;
  const Index m = Index(s.generators.size());
  Mat<T> stacked(m * n, n);
  for (Index i = 0; i < m; ++i)
    stacked.middleRows(i * n, n) = s.generators[i] - Mat<T>(Mat<T>::Identity(n, n));
  std::vector<Vec<T>> kernel = kernel_basis(std::move(stacked), s.tol.pivot);

  if constexpr (is_exact_v<T>) {
    // Exact mode: put the constant function first, reduce the rest against it.
    std::vector<Vec<T>> basis;
    basis.push_back(Vec<T>::Constant(n, T(1)));
    Mat<T> span(n, Index(kernel.size()) + 1);
    span.col(0) = basis.front();
    for (size_t i = 0; i < kernel.size(); ++i) span.col(Index(i) + 1) = kernel[i];
    Mat<T> indep = column_space_basis(span, s.tol.pivot);
    for (Index c = 1; c < indep.cols(); ++c) basis.push_back(indep.col(c));
    return basis;
  } else {
    std::vector<Vec<T>> seeded;
    seeded.push_back(Vec<T>::Constant(n, 1.0 / std::sqrt(double(n))));
    for (auto& v : kernel) seeded.push_back(std::move(v));
    return orthonormalize(seeded);
  }
}

/// Ergodicity via the fixed-space criterion: the invariant probability mu is
/// ergodic iff the joint fixed space of the semigroup restricted to supp mu
/// is one-dimensional.
template <class T>
bool is_ergodic(const MarkovSemigroup<T>& s, const Vec<T>& mu) {
  if (!is_probability(mu, s.tol) || !is_invariant(s, mu))
    throw NotInvariant("is_ergodic: not an invariant probability measure");
  Subset L = support(mu, s.tol.supp);
  if (!is_self_supporting(s.digraph, L)) return false;  // cannot happen for genuine invariants
  MarkovSemigroup<T> restricted = restrict_semigroup(s, SIdeal{L});
  return fix_space_basis(restricted).size() == 1;
}

/// Push an invariant measure of a restricted system back to the ambient
/// space by zero-padding.
template <class T>
Vec<T> embed_measure(const MarkovSemigroup<T>& s, const SIdeal& ideal, const Vec<T>& nu) {
  MarkovSemigroup<T> restricted = restrict_semigroup(s, ideal);
  if (!is_probability(nu, restricted.tol) || !is_invariant(restricted, nu))
    throw NotInvariant("embed_measure: nu is not invariant for the restriction");
  return extend_by_zero(nu, ideal.support, s.n);
}

/// The indicator of a self-supporting set is fixed mu-almost everywhere for
/// every invariant probability mu: S(1_L) agrees with 1_L at every state in
/// supp mu. Returns true; throws on precondition violations.
template <class T>
bool indicator_is_fixed(const MarkovSemigroup<T>& s, const Vec<T>& mu, const Subset& L) {
  if (!is_self_supporting(s.digraph, L))
    throw NotSelfSupporting("indicator_is_fixed: " + subset_str(L));
  if (!is_probability(mu, s.tol) || !is_invariant(s, mu))
    throw NotInvariant("indicator_is_fixed: mu not an invariant probability");
  Vec<T> ind = indicator<T>(L, s.n);
  for (const auto& g : s.generators) {
    Vec<T> diff = apply(g, ind) - ind;
    for (int x : support(mu, s.tol.supp))
      if (!within(diff(x), s.tol.zero)) return false;
  }
  return true;
}

}  // namespace primspec

#endif  // PRIMSPEC_MEASURES_HPP
