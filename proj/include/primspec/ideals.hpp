#ifndef PRIMSPEC_IDEALS_HPP
#define PRIMSPEC_IDEALS_HPP

#include <vector>

#include "primspec/core.hpp"
#include "primspec/digraph.hpp"

namespace primspec {

// Closed invariant ideals of functions on K are in bijection with the
// nonempty forward-closed ("self-supporting") vertex sets of the support
// digraph: the ideal I_L of functions vanishing on L. An SIdeal is keyed by
// that support set. The full function algebra (empty support) is not an
// SIdeal; operations that can produce it use an explicit sentinel.

struct SIdeal {
  Subset support;  // nonempty; the set the ideal's functions vanish on

  bool is_zero_ideal(int n) const { return int(support.size()) == n; }
};

inline bool is_self_supporting(const SupportDigraph& g, const Subset& L) {
  return !L.empty() && is_forward_closed(g, L);
}

/// The minimal self-supporting sets: terminal strongly connected components
/// of the support digraph, ordered by smallest element.
inline std::vector<Subset> minimal_self_supporting_sets(const SupportDigraph& g) {
  return terminal_components(g);
}

/// All nonempty forward-closed subsets, exponential scan over bitmasks.
/// Forward closure is checked via successor masks, which is independent of
/// the edge-by-edge check in is_self_supporting.
inline std::vector<SIdeal> enumerate_s_ideals(const SupportDigraph& g) {
  if (g.n > 20) throw TooLarge("enumerate_s_ideals: n > 20; use minimal_self_supporting_sets");
  std::vector<std::uint64_t> out_mask(g.n, 0);
  for (int x = 0; x < g.n; ++x)
    for (int y : g.succ[x]) out_mask[x] |= std::uint64_t(1) << y;

  std::vector<SIdeal> ideals;
  const std::uint64_t all = (g.n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << g.n) - 1);
  for (std::uint64_t m = 1; m <= all; ++m) {
    bool closed = true;
    for (int x = 0; x < g.n && closed; ++x)
      if (m >> x & 1) closed = (out_mask[x] & ~m) == 0;
    if (closed) ideals.push_back(SIdeal{subset_from_mask(m, g.n)});
  }
  return ideals;
}

/// Index map for a restriction: position of each global state inside L,
/// -1 off L.
inline std::vector<int> restriction_index(const Subset& L, int n) {
  std::vector<int> idx(n, -1);
  for (size_t i = 0; i < L.size(); ++i) idx[L[i]] = int(i);
  return idx;
}

/// The induced semigroup on the support of an ideal. Well-defined because a
/// self-supporting set carries no outgoing mass, so the restricted rows
/// still sum to 1.
template <class T>
MarkovSemigroup<T> restrict_semigroup(const MarkovSemigroup<T>& s, const SIdeal& ideal) {
  const Subset& L = ideal.support;
  if (!is_self_supporting(s.digraph, L))
    throw NotSelfSupporting("restrict_semigroup: support " + subset_str(L) +
                            " is not self-supporting");
  const Index k = Index(L.size());
  std::vector<Mat<T>> gens;
  gens.reserve(s.generators.size());
  for (const auto& g : s.generators) {
    Mat<T> r(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j) r(i, j) = g(L[i], L[j]);
    gens.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (!s.labels.empty())
    for (int x : L) labels.push_back(s.labels[x]);
  return make_semigroup(std::move(gens), s.tol, std::move(labels));
}

/// Zero-pad a function or measure on L back to the ambient space.
template <class T>
Vec<T> extend_by_zero(const Vec<T>& v, const Subset& L, Index n) {
  Vec<T> out = Vec<T>::Zero(n);
  for (size_t i = 0; i < L.size(); ++i) out(L[i]) = v(Index(i));
  return out;
}

/// Restrict a vector on K to the coordinates in L.
template <class T>
Vec<T> restrict_vec(const Vec<T>& v, const Subset& L) {
  Vec<T> out(Index(L.size()));
  for (size_t i = 0; i < L.size(); ++i) out(Index(i)) = v(L[i]);
  return out;
}

}  // namespace primspec

#endif  // PRIMSPEC_IDEALS_HPP
