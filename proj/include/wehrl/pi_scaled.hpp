#pragma once

#include <string>

#include "wehrl/errors.hpp"
#include "wehrl/rational.hpp"

namespace wehrl {

/// coeff · π^pi_power with coeff kept in lowest terms.
///
/// Products and quotients move the π exponent; sums require equal exponents
/// (a zero coefficient is treated as a neutral element of any exponent).
class PiScaledRational {
 public:
  PiScaledRational() = default;
  PiScaledRational(Rational coeff, int pi_power = 0)  // NOLINT(google-explicit-constructor)
      : coeff_(std::move(coeff)), pi_power_(pi_power) {}

  const Rational& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }

  double to_double() const;
  /// e.g. "3/2*pi^-1"; pi^0 is omitted.
  std::string to_string() const;

  PiScaledRational inverse() const;
  PiScaledRational pow(int e) const;

  PiScaledRational& operator*=(const PiScaledRational& o) {
    coeff_ *= o.coeff_;
    pi_power_ += o.pi_power_;
    return *this;
  }
  PiScaledRational& operator/=(const PiScaledRational& o) {
    if (o.coeff_ == 0) throw std::domain_error("PiScaledRational: division by zero");
    coeff_ /= o.coeff_;
    pi_power_ -= o.pi_power_;
    return *this;
  }
  PiScaledRational& operator+=(const PiScaledRational& o);
  PiScaledRational& operator-=(const PiScaledRational& o) { return *this += -o; }

  friend PiScaledRational operator*(PiScaledRational a, const PiScaledRational& b) { return a *= b; }
  friend PiScaledRational operator/(PiScaledRational a, const PiScaledRational& b) { return a /= b; }
  friend PiScaledRational operator+(PiScaledRational a, const PiScaledRational& b) { return a += b; }
  friend PiScaledRational operator-(PiScaledRational a, const PiScaledRational& b) { return a -= b; }
  friend PiScaledRational operator-(const PiScaledRational& a) { return {-a.coeff_, a.pi_power_}; }

  friend bool operator==(const PiScaledRational& a, const PiScaledRational& b) {
    if (a.coeff_ == 0 || b.coeff_ == 0) return a.coeff_ == b.coeff_;
    return a.coeff_ == b.coeff_ && a.pi_power_ == b.pi_power_;
  }

 private:
  Rational coeff_{0};
  int pi_power_ = 0;
};

/// coeff · π^(half_powers/2); values of Gamma products at half-integers.
struct HalfPiScaled {
  Rational coeff{0};
  int sqrt_pi_power = 0;

  double to_double() const;
  std::string to_string() const;
  bool is_pi_scaled() const { return sqrt_pi_power % 2 == 0; }
  /// Throws PiPowerMismatch for odd √π powers.
  PiScaledRational to_pi_scaled() const;

  friend HalfPiScaled operator*(const HalfPiScaled& a, const HalfPiScaled& b) {
    return {a.coeff * b.coeff, a.sqrt_pi_power + b.sqrt_pi_power};
  }
  friend bool operator==(const HalfPiScaled& a, const HalfPiScaled& b) {
    return a.coeff == b.coeff && (a.coeff == 0 || a.sqrt_pi_power == b.sqrt_pi_power);
  }
};

}  // namespace wehrl
