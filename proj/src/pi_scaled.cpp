#include "wehrl/pi_scaled.hpp"

#include <cmath>
#include <numbers>

namespace wehrl {

double PiScaledRational::to_double() const {
  return wehrl::to_double(coeff_) * std::pow(std::numbers::pi, pi_power_);
}

std::string PiScaledRational::to_string() const {
  std::string out = wehrl::to_string(coeff_);
  if (pi_power_ != 0 && coeff_ != 0) out += "*pi^" + std::to_string(pi_power_);
  return out;
}

PiScaledRational PiScaledRational::inverse() const {
  if (coeff_ == 0) throw std::domain_error("PiScaledRational: inverse of zero");
  return {Rational(1) / coeff_, -pi_power_};
}

PiScaledRational PiScaledRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  PiScaledRational out{1, 0};
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

PiScaledRational& PiScaledRational::operator+=(const PiScaledRational& o) {
  if (o.coeff_ == 0) return *this;
  if (coeff_ == 0) {
    *this = o;
    return *this;
  }
  if (pi_power_ != o.pi_power_)
    throw PiPowerMismatch("cannot add " + to_string() + " and " + o.to_string());
  coeff_ += o.coeff_;
  return *this;
}

double HalfPiScaled::to_double() const {
  return wehrl::to_double(coeff) * std::pow(std::numbers::pi, 0.5 * sqrt_pi_power);
}

std::string HalfPiScaled::to_string() const {
  if (is_pi_scaled()) return to_pi_scaled().to_string();
  return wehrl::to_string(coeff) + "*pi^(" + std::to_string(sqrt_pi_power) + "/2)";
}

PiScaledRational HalfPiScaled::to_pi_scaled() const {
  if (!is_pi_scaled())
    throw PiPowerMismatch("odd power of sqrt(pi) in " + wehrl::to_string(coeff));
  return {coeff, sqrt_pi_power / 2};
}

}  // namespace wehrl
