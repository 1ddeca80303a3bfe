#include "wehrl/gamma_product.hpp"

#include <algorithm>
#include <map>

#include <boost/math/special_functions/gamma.hpp>

#include "wehrl/errors.hpp"

namespace wehrl {

GammaRatio& GammaRatio::times(const GammaRatio& o) {
  numer.insert(numer.end(), o.numer.begin(), o.numer.end());
  denom.insert(denom.end(), o.denom.begin(), o.denom.end());
  prefactor *= o.prefactor;
  return *this;
}

namespace {

bool is_pole(const Rational& x) { return is_integer(x) && x <= 0; }

}  // namespace

std::optional<HalfPiScaled> gamma_on_ladder(const Rational& x) {
  if (is_pole(x)) throw NonIntegrable("Gamma pole at " + to_string(x));
  if (is_integer(x)) return HalfPiScaled{factorial(static_cast<int>(x.convert_to<long>()) - 1), 0};
  const Rational twice = 2 * x;
  if (!is_integer(twice)) return std::nullopt;
  // x = n + 1/2
  const long n = floor(x).convert_to<long>();
  if (n >= 0) {
    const int k = static_cast<int>(n);
    Rational c = factorial(2 * k) / (factorial(k) * Rational(BigInt(1) << (2 * k)));
    return HalfPiScaled{c, 1};
  }
  const int k = static_cast<int>(-n);  // x = 1/2 - k
  Rational c = factorial(k) * Rational(BigInt(1) << (2 * k)) / factorial(2 * k);
  if (k % 2 == 1) c = -c;
  return HalfPiScaled{c, 1};
}

Rational gamma_shift_ratio(const Rational& x, const Rational& y) {
  const Rational diff = x - y;
  if (!is_integer(diff)) throw NonTelescoping("non-integral Gamma shift");
  if (is_pole(x) || is_pole(y)) throw NonIntegrable("Gamma pole in shift ratio");
  const long k = diff.convert_to<long>();
  if (k >= 0) return pochhammer(y, static_cast<int>(k));
  return Rational(1) / pochhammer(x, static_cast<int>(-k));
}

std::optional<HalfPiScaled> reduce_exact(const GammaRatio& g) {
  // Group by residue class mod 1.
  std::map<Rational, std::pair<std::vector<Rational>, std::vector<Rational>>> classes;
  for (const auto& x : g.numer) classes[frac(x)].first.push_back(x);
  for (const auto& y : g.denom) classes[frac(y)].second.push_back(y);

  HalfPiScaled out{g.prefactor, 0};
  for (auto& [residue, lists] : classes) {
    auto& [num, den] = lists;
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    const std::size_t paired = std::min(num.size(), den.size());
    for (std::size_t i = 0; i < paired; ++i) out.coeff *= gamma_shift_ratio(num[i], den[i]);
    for (std::size_t i = paired; i < num.size(); ++i) {
      auto v = gamma_on_ladder(num[i]);
      if (!v) return std::nullopt;
      out = out * *v;
    }
    for (std::size_t i = paired; i < den.size(); ++i) {
      auto v = gamma_on_ladder(den[i]);
      if (!v) return std::nullopt;
      out.coeff /= v->coeff;
      out.sqrt_pi_power -= v->sqrt_pi_power;
    }
  }
  return out;
}

HighPrecision evaluate_high_precision(const GammaRatio& g) {
  using boost::math::tgamma;
  auto hp = [](const Rational& q) {
    return HighPrecision(boost::multiprecision::numerator(q).str()) /
           HighPrecision(boost::multiprecision::denominator(q).str());
  };
  HighPrecision value = hp(g.prefactor);
  for (const auto& x : g.numer) {
    if (is_pole(x)) throw NonIntegrable("Gamma pole at " + to_string(x));
    value *= tgamma(hp(x));
  }
  for (const auto& y : g.denom) {
    if (is_pole(y)) throw NonIntegrable("Gamma pole at " + to_string(y));
    value /= tgamma(hp(y));
  }
  return value;
}

}  // namespace wehrl
