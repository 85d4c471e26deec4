#ifndef PRIMSPEC_TESTS_FIXTURES_HPP
#define PRIMSPEC_TESTS_FIXTURES_HPP

#include "primspec/verify.hpp"

namespace primspec::testing {

/// Absorbing split: state 0 sends half its mass to each of the fixed
/// states 1 and 2.
template <class T>
MarkovSemigroup<T> absorbing_split() {
  Mat<T> g(3, 3);
  g << T(0), scalar_ops<T>::from_double(0.5), scalar_ops<T>::from_double(0.5),  //
      T(0), T(1), T(0),                                                         //
      T(0), T(0), T(1);
  return make_semigroup<T>({g});
}

template <class T>
MarkovSemigroup<T> identity_system(int n) {
  return make_semigroup<T>({Mat<T>(Mat<T>::Identity(n, n))});
}

/// 0 -> 1 -> 2 -> 3 <-> 2: a transient run into a 2-cycle.
template <class T>
MarkovSemigroup<T> chain_into_cycle() {
  return build_koopman<T>({4, {1, 2, 3, 2}});
}

}  // namespace primspec::testing

#endif  // PRIMSPEC_TESTS_FIXTURES_HPP
