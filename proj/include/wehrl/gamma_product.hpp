// Exact evaluation of ratios of Gamma functions at rational arguments.
//
// A product  ∏ Γ(numer_i) / ∏ Γ(denom_j)  is reduced by pairing numerator and
// denominator arguments in the same residue class mod 1, so that every pair
// Γ(x)/Γ(y) with x - y ∈ ℤ collapses to a Pochhammer symbol.  Whatever is left
// over must sit on the integer or half-integer ladder, where Γ is rational
// (times √π).  Anything else is evaluated in 50-digit floating point.
#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wehrl/pi_scaled.hpp"
#include "wehrl/rational.hpp"

namespace wehrl {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

struct GammaRatio {
  std::vector<Rational> numer;
  std::vector<Rational> denom;
  Rational prefactor{1};

  GammaRatio& times(const GammaRatio& o);
};

/// Γ(x) for x a positive integer or a (possibly negative) half-integer.
/// Returns nullopt off the half-integer ladder; throws NonIntegrable at poles.
std::optional<HalfPiScaled> gamma_on_ladder(const Rational& x);

/// Γ(x)/Γ(y) for x - y integral, as an exact rational.
Rational gamma_shift_ratio(const Rational& x, const Rational& y);

/// Exact value when every factor telescopes; nullopt otherwise.
std::optional<HalfPiScaled> reduce_exact(const GammaRatio& g);

/// 50-digit evaluation of the full product (no telescoping required).
HighPrecision evaluate_high_precision(const GammaRatio& g);

}  // namespace wehrl
