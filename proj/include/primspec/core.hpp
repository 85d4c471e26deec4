#ifndef PRIMSPEC_CORE_HPP
#define PRIMSPEC_CORE_HPP

#include <string>
#include <vector>

#include "primspec/digraph.hpp"
#include "primspec/errors.hpp"
#include "primspec/types.hpp"

namespace primspec {

// A Markov operator is a row-stochastic n x n matrix: row x is the transition
// measure out of state x, (Sf)(x) = sum_y S(x,y) f(y). A semigroup is a
// nonempty commuting family of such matrices together with the union support
// digraph. Values are immutable after construction.

template <class T>
struct MarkovSemigroup {
  Index n = 0;
  std::vector<Mat<T>> generators;
  SupportDigraph digraph;
  std::vector<std::string> labels;  // optional state names, empty or size n
  Tolerances<T> tol;
};

/// Validate a single generator: clip tiny negatives, renormalize rows whose
/// sum deviates by at most tol_row, reject anything worse.
template <class T>
Mat<T> validate_markov_matrix(Mat<T> m, const Tolerances<T>& tol) {
  const Index n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("generator is not square");
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (m(x, y) < -tol.zero)
        throw NonStochastic("negative entry at (" + std::to_string(x) + "," + std::to_string(y) +
                            ")");
      if (m(x, y) < T(0)) m(x, y) = T(0);
    }
    T row_sum = m.row(x).sum();
    if (!within(T(row_sum - T(1)), tol.row))
      throw NonStochastic("row " + std::to_string(x) + " does not sum to 1");
    if (!(row_sum == T(1))) m.row(x) /= row_sum;
  }
  return m;
}

/// Build the union support digraph of a family of generators.
template <class T>
SupportDigraph union_support_digraph(const std::vector<Mat<T>>& gens, const Tolerances<T>& tol) {
  SupportDigraph g;
  g.n = int(gens.front().rows());
  g.succ.resize(g.n);
  for (int x = 0; x < g.n; ++x) {
    for (int y = 0; y < g.n; ++y)
      for (const auto& m : gens)
        if (m(x, y) > tol.supp) {
          g.succ[x].push_back(y);
          break;
        }
  }
  return g;
}

/// Assemble and validate a semigroup from raw generator matrices.
/// Commutation is required: abelianness is how right amenability is
/// certified at this interface.
template <class T>
MarkovSemigroup<T> make_semigroup(std::vector<Mat<T>> gens, Tolerances<T> tol = {},
                                  std::vector<std::string> labels = {}) {
  if (gens.empty()) throw DimensionMismatch("semigroup needs at least one generator");
  const Index n = gens.front().rows();
  if (n < 1) throw DimensionMismatch("state count must be at least 1");
  for (auto& m : gens) {
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("generator size mismatch");
    m = validate_markov_matrix(std::move(m), tol);
  }
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      Mat<T> comm = gens[i] * gens[j] - gens[j] * gens[i];
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          if (!within(comm(a, b), tol.comm))
            throw NonAbelian("generators " + std::to_string(i) + " and " + std::to_string(j) +
                             " do not commute; right amenability cannot be certified");
    }
  if (!labels.empty() && Index(labels.size()) != n)
    throw DimensionMismatch("label count must equal n");

  MarkovSemigroup<T> s;
  s.n = n;
  s.digraph = union_support_digraph(gens, tol);
  s.generators = std::move(gens);
  s.labels = std::move(labels);
  s.tol = tol;
  return s;
}

/// Koopman-style action on functions: (Sf)(x) = sum_y S(x,y) f(y).
template <class T>
Vec<T> apply(const Mat<T>& op, const Vec<T>& f) {
  if (op.cols() != f.size()) throw DimensionMismatch("apply: size mismatch");
  return op * f;
}

/// Adjoint action on measures: mass flows along rows, mu -> mu S.
template <class T>
Vec<T> adjoint_apply(const Mat<T>& op, const Vec<T>& mu) {
  if (op.rows() != mu.size()) throw DimensionMismatch("adjoint_apply: size mismatch");
  return op.transpose() * mu;
}

template <class T>
T mass(const Vec<T>& mu) {
  return mu.sum();
}

template <class T>
bool is_probability(const Vec<T>& mu, const Tolerances<T>& tol) {
  for (Index i = 0; i < mu.size(); ++i)
    if (mu(i) < -tol.zero) return false;
  return within(T(mass(mu) - T(1)), tol.zero);
}

/// Invariance test: mu S_i = mu for every generator, within tol_inv.
template <class T>
bool is_invariant(const MarkovSemigroup<T>& s, const Vec<T>& mu, double tol_inv = 1e-9) {
  for (const auto& g : s.generators) {
    Vec<T> diff = adjoint_apply(g, mu) - mu;
    if (max_abs(diff) > tol_inv) return false;
  }
  return true;
}

template <class T>
Vec<T> point_mass(Index x, Index n) {
  Vec<T> v = Vec<T>::Zero(n);
  v(x) = T(1);
  return v;
}

}  // namespace primspec

#endif  // PRIMSPEC_CORE_HPP
