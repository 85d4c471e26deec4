#ifndef PRIMSPEC_RATIONAL_HPP
#define PRIMSPEC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace primspec {

/// Exact rational scalar for Eigen matrices. Thin wrapper around
/// boost::multiprecision::cpp_rational; the wrapper keeps boost's greedy
/// converting constructors away from Eigen's expression templates.
class Rational {
 public:
  using Backend = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int num) : v_(num) {}
  Rational(long long num) : v_(num) {}
  Rational(long long num, long long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
  }
  explicit Rational(Backend v) : v_(std::move(v)) {}

  // "p/q" or a plain integer string.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos)
        return Rational(Backend(boost::multiprecision::cpp_int(s)));
      boost::multiprecision::cpp_int p(s.substr(0, slash));
      boost::multiprecision::cpp_int q(s.substr(slash + 1));
      if (q <= 0) throw std::domain_error("");
      return Rational(Backend(p, q));
    } catch (const std::exception&) {
      throw std::domain_error("Rational: cannot parse '" + s + "'");
    }
  }

  // Exact dyadic conversion; every double is a rational.
  static Rational from_double(double x) { return Rational(Backend(x)); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  double to_double() const { return v_.template convert_to<double>(); }
  const Backend& backend() const { return v_; }
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

 private:
  Backend v_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace primspec

namespace Eigen {

template <>
struct NumTraits<primspec::Rational> {
  using Real = primspec::Rational;
  using NonInteger = primspec::Rational;
  using Literal = primspec::Rational;
  using Nested = primspec::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static primspec::Rational epsilon() { return primspec::Rational(0); }
  static primspec::Rational dummy_precision() { return primspec::Rational(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // PRIMSPEC_RATIONAL_HPP
