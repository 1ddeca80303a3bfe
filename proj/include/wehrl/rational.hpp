// Exact scalar types shared by every module: arbitrary-precision rationals,
// Gaussian rationals, and the traits that let Eigen containers and the
// templated algorithms treat exact and floating scalars uniformly.
#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>

namespace wehrl {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Complex number with exact rational parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    const Rational d = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

// ---------------------------------------------------------------------------
// Rational helpers

Rational pochhammer(const Rational& x, int k);
Rational factorial(int n);
Rational binomial(int n, int k);

/// Parses "3", "-7/2" or a terminating decimal such as "2.5" exactly.
Rational parse_rational(std::string_view text);
/// "n/d" (or "n" when the denominator is 1).
std::string to_string(const Rational& q);
double to_double(const Rational& q);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}
/// Largest integer <= q.
BigInt floor(const Rational& q);
/// q - floor(q), in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor(q)); }

// ---------------------------------------------------------------------------
// Scalar traits: the templated engines use these instead of branching on type.

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static Rational conj(const Rational& x) { return x; }
  static Rational abs2(const Rational& x) { return x * x; }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational from_real(const Real& r) { return r; }
  static Rational real(const Rational& x) { return x; }
};

template <>
struct ScalarTraits<GaussianRational> {
  using Real = Rational;
  static constexpr bool exact = true;
  static GaussianRational conj(const GaussianRational& x) { return {x.re, -x.im}; }
  static Rational abs2(const GaussianRational& x) { return x.re * x.re + x.im * x.im; }
  static GaussianRational from_rational(const Rational& q) { return {q}; }
  static GaussianRational from_real(const Real& r) { return {r}; }
  static Rational real(const GaussianRational& x) { return x.re; }
};

template <>
struct ScalarTraits<double> {
  using Real = double;
  static constexpr bool exact = false;
  static double conj(double x) { return x; }
  static double abs2(double x) { return x * x; }
  static double from_rational(const Rational& q) { return to_double(q); }
  static double from_real(double r) { return r; }
  static double real(double x) { return x; }
};

template <>
struct ScalarTraits<std::complex<double>> {
  using Real = double;
  static constexpr bool exact = false;
  static std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }
  static double abs2(const std::complex<double>& x) { return std::norm(x); }
  static std::complex<double> from_rational(const Rational& q) { return {to_double(q), 0.0}; }
  static std::complex<double> from_real(double r) { return {r, 0.0}; }
  static double real(const std::complex<double>& x) { return x.real(); }
};

template <typename Scalar>
using RealOf = typename ScalarTraits<Scalar>::Real;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Scalar -> std::complex<double>, for reporting.
inline std::complex<double> to_complex(const Rational& q) { return {to_double(q), 0.0}; }
inline std::complex<double> to_complex(const GaussianRational& q) {
  return {to_double(q.re), to_double(q.im)};
}
inline std::complex<double> to_complex(double x) { return {x, 0.0}; }
inline std::complex<double> to_complex(const std::complex<double>& x) { return x; }

}  // namespace wehrl

namespace Eigen {

template <>
struct NumTraits<wehrl::Rational> : GenericNumTraits<wehrl::Rational> {
  using Real = wehrl::Rational;
  using NonInteger = wehrl::Rational;
  using Nested = wehrl::Rational;
  using Literal = wehrl::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 60
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<wehrl::GaussianRational> : GenericNumTraits<wehrl::GaussianRational> {
  using Real = wehrl::Rational;
  using NonInteger = wehrl::GaussianRational;
  using Nested = wehrl::GaussianRational;
  using Literal = wehrl::GaussianRational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 80,
    MulCost = 240
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
