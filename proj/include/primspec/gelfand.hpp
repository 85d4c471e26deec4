#ifndef PRIMSPEC_GELFAND_HPP
#define PRIMSPEC_GELFAND_HPP

#include <string>
#include <vector>

#include "primspec/means.hpp"
#include "primspec/spectrum.hpp"

namespace primspec {

// The hat map sends a function fixed by the semigroup restricted to the
// minimal center M(S) to the function on the primitive spectrum whose value
// at a point is the integral against that point's ergodic measure. On a
// finite spectrum this is an isometric lattice isomorphism onto the full
// function space of the points.

/// f is given on the ambient space; values off M(S) are ignored. Requires f
/// fixed on M(S) by every generator and constant on every ergodic support.
template <class T>
Vec<T> hat(const MarkovSemigroup<T>& s, const PrimSpectrum<T>& spec, const Vec<T>& f,
           double tol_fixed = 1e-10, double tol_const = 1e-8) {
  Subset center = minimal_center_support(spec);
  MarkovSemigroup<T> on_center = restrict_semigroup(s, SIdeal{center});
  Vec<T> f_center = restrict_vec(f, center);
  for (const auto& g : on_center.generators)
    if (max_abs(Vec<T>(apply(g, f_center) - f_center)) > tol_fixed)
      throw NotFixed("hat: f is not fixed on the minimal center");

  Vec<T> values(Index(spec.points.size()));
  for (size_t i = 0; i < spec.points.size(); ++i) {
    const auto& p = spec.points[i];
    values(Index(i)) = pairing(f, p.witness.weights);
    for (int x : p.supp)
      if (scalar_ops<T>::to_double(scalar_ops<T>::abs(T(f(x) - values(Index(i))))) > tol_const)
        throw NotConstantOnSupport("hat: f not constant on support " + subset_str(p.supp));
  }
  return values;
}

/// Inverse of the hat map: extend g by zero off M(S), then project by the
/// mean ergodic projection. Any fixed extension agrees with this one on
/// M(S); the projection annihilates the radical, so zero is canonical.
template <class T>
Vec<T> hat_inverse(const PrimSpectrum<T>& spec, const Mat<T>& projection, const Vec<T>& g) {
  if (projection.rows() != spec.n)
    throw ProjectionUnavailable("hat_inverse: projection size mismatch");
  Vec<T> extended = Vec<T>::Zero(spec.n);
  for (size_t i = 0; i < spec.points.size(); ++i)
    for (int x : spec.points[i].supp) extended(x) = g(Index(i));
  return projection * extended;
}

struct IsomorphismReport {
  Index fix_dim = 0;    // dim fix of the semigroup restricted to M(S)
  Index prim_count = 0;
  bool bijective = false;      // fix_dim == prim_count
  bool maps_one_to_one_fn = false;  // hat(1) = 1
  bool linear = false;
  bool isometric = false;      // sup norm over M(S) vs over Prim
  bool lattice = false;        // hat(|f|) = |hat(f)|
  bool all_pass = false;
  std::vector<std::string> failures;
};

/// Audit the hat map on a basis of the fixed space over M(S): dimension
/// count, unit, linearity, isometry, and compatibility with the modulus.
/// Failures are reported, not thrown.
template <class T>
IsomorphismReport verify_lattice_isomorphism(const MarkovSemigroup<T>& s, double tol = 1e-8) {
  IsomorphismReport report;
  PrimSpectrum<T> spec = prim_spectrum(s);
  Subset center = minimal_center_support(spec);
  MarkovSemigroup<T> on_center = restrict_semigroup(s, SIdeal{center});
  std::vector<Vec<T>> basis = fix_space_basis(on_center);

  report.fix_dim = Index(basis.size());
  report.prim_count = Index(spec.points.size());
  report.bijective = report.fix_dim == report.prim_count;
  if (!report.bijective) report.failures.push_back("fix dimension != point count");

  auto sup_norm_center = [&](const Vec<T>& f) {
    double m = 0;
    for (int x : center) m = std::max(m, std::fabs(scalar_ops<T>::to_double(f(x))));
    return m;
  };

  try {
    Vec<T> one = Vec<T>::Constant(s.n, T(1));
    Vec<T> one_hat = hat(s, spec, one);
    report.maps_one_to_one_fn =
        max_abs(Vec<T>(one_hat - Vec<T>(Vec<T>::Constant(one_hat.size(), T(1))))) <= tol;
    if (!report.maps_one_to_one_fn) report.failures.push_back("hat(1) != 1");

    report.linear = true;
    report.isometric = true;
    report.lattice = true;
    std::vector<Vec<T>> ambient;
    for (const auto& b : basis) ambient.push_back(extend_by_zero(b, center, s.n));
    for (size_t i = 0; i < ambient.size(); ++i) {
      Vec<T> hi = hat(s, spec, ambient[i]);
      if (std::fabs(sup_norm_center(ambient[i]) - max_abs(hi)) > tol) {
        report.isometric = false;
        report.failures.push_back("isometry fails on basis element " + std::to_string(i));
      }
      Vec<T> abs_f = ambient[i].cwiseAbs();
      if (max_abs(Vec<T>(hat(s, spec, abs_f) - Vec<T>(hi.cwiseAbs()))) > tol) {
        report.lattice = false;
        report.failures.push_back("modulus compatibility fails on basis element " +
                                  std::to_string(i));
      }
      for (size_t j = i + 1; j < ambient.size(); ++j) {
        Vec<T> sum = ambient[i] + T(2) * ambient[j];
        Vec<T> expect = hi + T(2) * hat(s, spec, ambient[j]);
        if (max_abs(Vec<T>(hat(s, spec, sum) - expect)) > tol) {
          report.linear = false;
          report.failures.push_back("linearity fails on basis pair " + std::to_string(i) + "," +
                                    std::to_string(j));
        }
      }
    }
  } catch (const Error& e) {
    report.failures.push_back(std::string("hat threw: ") + e.what());
  }

  report.all_pass = report.failures.empty();
  return report;
}

struct MeanErgodicVerdict {
  bool mean_ergodic = false;
  bool condition_b_i = false;   // ergodic measures <-> spectrum is a homeomorphism
  bool condition_c_i = false;   // spectrum Hausdorff
  bool condition_c_ii = false;  // ergodic supports uniquely ergodic
  bool condition_c_iii = false; // every fixed function on M(S) extends to a fixed function
  std::vector<std::string> witnesses;
};

/// Combine the condition booleans and enforce the equivalences
/// mean_ergodic == (b_i && c_iii) == (c_i && c_ii && c_iii). Any mismatch is
/// a numerics or logic bug, never a property of the input.
inline MeanErgodicVerdict combine_verdict(bool a, bool b_i, bool c_i, bool c_ii, bool c_iii,
                                          std::vector<std::string> witnesses = {}) {
  const bool via_b = b_i && c_iii;
  const bool via_c = c_i && c_ii && c_iii;
  if (a != via_b || a != via_c) {
    std::string dump = "verdict equivalence violated: a=" + std::to_string(a) +
                       " b_i=" + std::to_string(b_i) + " c_i=" + std::to_string(c_i) +
                       " c_ii=" + std::to_string(c_ii) + " c_iii=" + std::to_string(c_iii);
    for (const auto& w : witnesses) dump += "; " + w;
    throw EquivalenceViolation(dump);
  }
  MeanErgodicVerdict v;
  v.mean_ergodic = a;
  v.condition_b_i = b_i;
  v.condition_c_i = c_i;
  v.condition_c_ii = c_ii;
  v.condition_c_iii = c_iii;
  v.witnesses = std::move(witnesses);
  return v;
}

/// Evaluate every condition of the mean-ergodicity characterization
/// independently and cross-check the equivalences. Finite Markov semigroups
/// of this class always come out mean ergodic; the negative branches are
/// reachable only through combine_verdict with stubbed conditions.
template <class T>
MeanErgodicVerdict mean_ergodicity_verdict(const MarkovSemigroup<T>& s, double tol = 1e-8) {
  std::vector<std::string> witnesses;

  // (a) a mean ergodic projection exists: direct decomposition and the
  // operator net must produce the same projection.
  bool a = false;
  Mat<T> projection;
  try {
    MeanProjection<T> exact = exact_projection(s);
    MeanProjection<T> net = cesaro_projection(s);
    double gap = max_abs(Mat<T>(exact.matrix - net.matrix));
    double residual = std::max(projection_residual(s, exact.matrix), gap);
    a = residual <= tol;
    if (!a) witnesses.push_back("projection residual " + std::to_string(residual));
    projection = std::move(exact.matrix);
  } catch (const NumericError& e) {
    witnesses.push_back(std::string("projection failed: ") + e.what());
  }

  PrimSpectrum<T> spec = prim_spectrum(s);
  SpecializationOrder order = specialization_order(spec);

  // (b)(i): on a finite spectrum both sides carry the discrete metric
  // topology on finitely many points, so the canonical bijection is a
  // homeomorphism iff the hull-kernel topology is itself discrete.
  const bool b_i = order.t0 && order.hausdorff;
  const bool c_i = order.hausdorff;
  if (!c_i) witnesses.push_back("spectrum not Hausdorff");

  // (c)(ii): re-solve the stationary space on each ergodic support.
  bool c_ii = true;
  for (const auto& p : spec.points) {
    MarkovSemigroup<T> restricted = restrict_semigroup(s, SIdeal{p.supp});
    if (stationary_affine_dim(restricted) != 0) {
      c_ii = false;
      witnesses.push_back("support " + subset_str(p.supp) + " not uniquely ergodic");
    }
  }

  // (c)(iii): extension of fixed functions from M(S), via hat_inverse on a
  // basis of the fixed space over the center.
  bool c_iii = false;
  if (projection.size() > 0) {
    try {
      Subset center = minimal_center_support(spec);
      MarkovSemigroup<T> on_center = restrict_semigroup(s, SIdeal{center});
      c_iii = true;
      for (const auto& b : fix_space_basis(on_center)) {
        Vec<T> ambient = extend_by_zero(b, center, s.n);
        Vec<T> g = hat(s, spec, ambient);
        Vec<T> extension = hat_inverse(spec, projection, g);
        double err = max_abs(Vec<T>(restrict_vec(extension, center) - b));
        if (err > tol) {
          c_iii = false;
          witnesses.push_back("extension error " + std::to_string(err));
          break;
        }
      }
    } catch (const Error& e) {
      c_iii = false;
      witnesses.push_back(std::string("extension check threw: ") + e.what());
    }
  }

  return combine_verdict(a, b_i, c_i, c_ii, c_iii, std::move(witnesses));
}

}  // namespace primspec

#endif  // PRIMSPEC_GELFAND_HPP
