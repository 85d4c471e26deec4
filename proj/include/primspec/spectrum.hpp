#ifndef PRIMSPEC_SPECTRUM_HPP
#define PRIMSPEC_SPECTRUM_HPP

#include <optional>
#include <vector>

#include "primspec/measures.hpp"

namespace primspec {

// The primitive spectrum: one point per ergodic measure, keyed by the
// support of its absolute kernel (= supp mu). Ideal inclusion reverses
// support inclusion, so the hull-kernel machinery below works on subsets.

template <class T>
struct PrimPoint {
  Subset supp;               // support of the primitive ideal
  ErgodicMeasure<T> witness;  // the ergodic measure it came from
};

template <class T>
struct PrimSpectrum {
  Index n = 0;
  std::vector<PrimPoint<T>> points;

  int find(const Subset& s) const {
    for (size_t i = 0; i < points.size(); ++i)
      if (points[i].supp == s) return int(i);
    return -1;
  }
};

/// A set of spectrum points, by index into PrimSpectrum::points.
using PointSet = std::vector<int>;

/// Radical ideal: support is a union of ergodic supports.
struct RadicalIdeal {
  Subset support;
};

template <class T>
PrimSpectrum<T> prim_spectrum(const MarkovSemigroup<T>& s) {
  PrimSpectrum<T> spec;
  spec.n = s.n;
  for (auto& mu : ergodic_measures(s)) {
    Subset supp = mu.supp;
    spec.points.push_back({std::move(supp), std::move(mu)});
  }
  return spec;
}

/// A spectrum assembled from raw supports, for unit tests that need point
/// configurations no genuine finite Markov semigroup produces (nested
/// supports, non-Hausdorff orders). Witnesses are uniform on their supports
/// and are not validated.
template <class T>
PrimSpectrum<T> mock_spectrum(Index n, const std::vector<Subset>& supports) {
  PrimSpectrum<T> spec;
  spec.n = n;
  for (const Subset& L : supports) {
    Vec<T> w = indicator<T>(L, n);
    w /= T(w.sum());
    spec.points.push_back({L, ErgodicMeasure<T>{std::move(w), L}});
  }
  return spec;
}

/// hull(I) = the primitive ideals containing I: points whose support lies
/// inside the support of I.
template <class T>
PointSet hull(const PrimSpectrum<T>& spec, const Subset& ideal_support) {
  PointSet out;
  for (size_t i = 0; i < spec.points.size(); ++i)
    if (is_subset_of(spec.points[i].supp, ideal_support)) out.push_back(int(i));
  return out;
}

/// ker(A) = the intersection of the ideals in A; as supports, the union.
/// ker of the empty family is the full algebra, whose support sentinel is
/// the empty subset.
template <class T>
Subset ker(const PrimSpectrum<T>& spec, const PointSet& points) {
  Subset u;
  for (int i : points) u = subset_union(u, spec.points[i].supp);
  return u;
}

/// Hull-kernel closure: cl(A) = hull(ker(A)).
template <class T>
PointSet closure(const PrimSpectrum<T>& spec, const PointSet& points) {
  if (points.empty()) return {};
  return hull(spec, ker(spec, points));
}

/// rad(I) = ker(hull(I)): the union of ergodic supports contained in supp I.
/// Returns nullopt (the full algebra) when no primitive ideal contains I.
template <class T>
std::optional<RadicalIdeal> radical(const PrimSpectrum<T>& spec, const Subset& ideal_support) {
  PointSet h = hull(spec, ideal_support);
  if (h.empty()) return std::nullopt;
  return RadicalIdeal{ker(spec, h)};
}

/// The support of rad(0): the union of all ergodic supports. This set is the
/// minimal center of attraction of the semigroup.
template <class T>
Subset minimal_center_support(const PrimSpectrum<T>& spec) {
  Subset u;
  for (const auto& p : spec.points) u = subset_union(u, p.supp);
  return u;
}

template <class T>
bool is_radical_free(const PrimSpectrum<T>& spec) {
  return int(minimal_center_support(spec).size()) == int(spec.n);
}

/// An invariant measure whose absolute kernel is exactly the given radical
/// ideal: the uniform average of the ergodic measures supported inside it.
template <class T>
Vec<T> radical_witness_measure(const PrimSpectrum<T>& spec, const RadicalIdeal& rad) {
  std::vector<const Vec<T>*> inside;
  for (const auto& p : spec.points)
    if (is_subset_of(p.supp, rad.support)) inside.push_back(&p.witness.weights);
  if (inside.empty())
    throw NoErgodicInside("radical_witness_measure: no ergodic support inside " +
                          subset_str(rad.support));
  Vec<T> mu = Vec<T>::Zero(spec.n);
  for (const Vec<T>* w : inside) mu += *w;
  mu /= T(int(inside.size()));
  return mu;
}

/// Specialization preorder of the hull-kernel topology: p leads to q iff q
/// lies in the closure of {p}, i.e. supp q is contained in supp p.
struct SpecializationOrder {
  int point_count = 0;
  std::vector<std::pair<int, int>> leads_to;  // (p, q) pairs with p != q
  std::vector<int> closed_singletons;         // points whose singleton is closed
  bool t0 = true;                             // asserted; supports are distinct
  bool hausdorff = true;                      // iff the order is discrete
};

template <class T>
SpecializationOrder specialization_order(const PrimSpectrum<T>& spec) {
  SpecializationOrder ord;
  ord.point_count = int(spec.points.size());
  for (int p = 0; p < ord.point_count; ++p) {
    bool closed = true;
    for (int q = 0; q < ord.point_count; ++q) {
      if (p == q) continue;
      if (is_subset_of(spec.points[q].supp, spec.points[p].supp)) {
        ord.leads_to.push_back({p, q});
        ord.hausdorff = false;
        closed = false;
      }
      if (spec.points[q].supp == spec.points[p].supp) ord.t0 = false;
    }
    // A singleton is closed iff nothing else lies in its closure; such a
    // point is a maximal ideal.
    if (closed) ord.closed_singletons.push_back(p);
  }
  return ord;
}

/// Membership predicate for the canonical open base set U_f: the points p
/// with f not in p, i.e. f not identically zero on supp p.
template <class T>
bool in_base_open_set(const PrimSpectrum<T>& spec, const Vec<T>& f, int point,
                      const Tolerances<T>& tol) {
  for (int x : spec.points[point].supp)
    if (!within(f(x), tol.supp)) return true;
  return false;
}

/// The inclusion-preserving bijection between the primitive ideals containing
/// I and the primitive spectrum of the quotient system on supp I. Returns
/// pairs (ambient point index, restricted point index); supports match
/// through the restriction relabeling.
template <class T>
std::vector<std::pair<int, int>> quotient_spectrum_bijection(const MarkovSemigroup<T>& s,
                                                             const SIdeal& ideal) {
  MarkovSemigroup<T> restricted = restrict_semigroup(s, ideal);
  PrimSpectrum<T> ambient = prim_spectrum(s);
  PrimSpectrum<T> quotient = prim_spectrum(restricted);

  std::vector<int> idx = restriction_index(ideal.support, int(s.n));
  std::vector<std::pair<int, int>> mapping;
  for (size_t p = 0; p < ambient.points.size(); ++p) {
    if (!is_subset_of(ambient.points[p].supp, ideal.support)) continue;
    Subset relabeled;
    for (int x : ambient.points[p].supp) relabeled.push_back(idx[x]);
    std::sort(relabeled.begin(), relabeled.end());
    int q = quotient.find(relabeled);
    if (q < 0)
      throw NumericError("quotient_spectrum_bijection: missing image point for " +
                         subset_str(ambient.points[p].supp));
    mapping.push_back({int(p), q});
  }
  if (mapping.size() != quotient.points.size())
    throw NumericError("quotient_spectrum_bijection: map is not onto");
  return mapping;
}

}  // namespace primspec

#endif  // PRIMSPEC_SPECTRUM_HPP
