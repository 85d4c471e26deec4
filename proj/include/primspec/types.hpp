#ifndef PRIMSPEC_TYPES_HPP
#define PRIMSPEC_TYPES_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "primspec/rational.hpp"

namespace primspec {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

/// A subset of the state space K = {0,...,n-1}, kept sorted ascending.
using Subset = std::vector<int>;

template <class T>
struct scalar_ops {
  static constexpr bool exact = false;
  static T from_double(double x) { return x; }
  static double to_double(T x) { return x; }
  static T abs(T x) { return std::fabs(x); }
};

template <>
struct scalar_ops<Rational> {
  static constexpr bool exact = true;
  static Rational from_double(double x) { return Rational::from_double(x); }
  static double to_double(const Rational& x) { return x.to_double(); }
  static Rational abs(const Rational& x) { return primspec::abs(x); }
};

template <class T>
constexpr bool is_exact_v = scalar_ops<T>::exact;

/// Structural tolerances. In exact (rational) mode every threshold collapses
/// to zero; the convergence thresholds tol_conv / tol_member stay numeric in
/// both modes since operator nets need not reach their limit in finitely
/// many steps.
template <class T>
struct Tolerances {
  T zero = scalar_ops<T>::exact ? T(0) : scalar_ops<T>::from_double(1e-12);
  T supp = scalar_ops<T>::exact ? T(0) : scalar_ops<T>::from_double(1e-12);
  T row = scalar_ops<T>::exact ? T(0) : scalar_ops<T>::from_double(1e-9);
  T comm = scalar_ops<T>::exact ? T(0) : scalar_ops<T>::from_double(1e-9);
  T pivot = scalar_ops<T>::exact ? T(0) : scalar_ops<T>::from_double(1e-10);
  double conv = 1e-9;
  double member = 1e-6;
};

template <class T>
bool within(const T& x, const T& tol) {
  return scalar_ops<T>::abs(x) <= tol;
}

template <class T>
double max_abs(const Mat<T>& m) {
  double r = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      r = std::max(r, scalar_ops<T>::to_double(scalar_ops<T>::abs(m(i, j))));
  return r;
}

template <class T>
double max_abs(const Vec<T>& v) {
  double r = 0;
  for (Index i = 0; i < v.size(); ++i)
    r = std::max(r, scalar_ops<T>::to_double(scalar_ops<T>::abs(v(i))));
  return r;
}

// ---- subset helpers ----------------------------------------------------

inline Subset full_subset(int n) {
  Subset s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

inline bool subset_contains(const Subset& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline bool is_subset_of(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Subset subset_union(const Subset& a, const Subset& b) {
  Subset r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline Subset subset_intersection(const Subset& a, const Subset& b) {
  Subset r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline Subset subset_from_mask(std::uint64_t mask, int n) {
  Subset s;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) s.push_back(i);
  return s;
}

inline std::uint64_t mask_from_subset(const Subset& s) {
  std::uint64_t m = 0;
  for (int x : s) m |= std::uint64_t(1) << x;
  return m;
}

inline std::string subset_str(const Subset& s) {
  std::string r = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) r += ",";
    r += std::to_string(s[i]);
  }
  return r + "}";
}

/// Support of a nonnegative vector: indices with weight above the support
/// threshold.
template <class T>
Subset support(const Vec<T>& v, const T& tol_supp) {
  Subset s;
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) > tol_supp) s.push_back(int(i));
  return s;
}

/// Indicator function of a subset as a vector of length n.
template <class T>
Vec<T> indicator(const Subset& L, Index n) {
  Vec<T> v = Vec<T>::Zero(n);
  for (int x : L) v(x) = T(1);
  return v;
}

/// Dual pairing <f, mu> = sum_x f(x) mu(x).
template <class T>
T pairing(const Vec<T>& f, const Vec<T>& mu) {
  return f.dot(mu);
}

}  // namespace primspec

#endif  // PRIMSPEC_TYPES_HPP
