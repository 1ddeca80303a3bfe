#include "wehrl/degrees.hpp"

#include <string>

#include "wehrl/errors.hpp"

namespace wehrl {
namespace {

void require_admissible(const DomainParams& d, const Rational& lambda) {
  if (!hc_admissible(d, lambda))
    throw NotAdmissible("lambda = " + to_string(lambda) + " is not > p - 1 = " +
                        std::to_string(d.genus() - 1) + " for " + d.family_label);
}

bool label_starts_with(const DomainParams& d, const std::string& prefix) {
  return d.family_label.rfind(prefix, 0) == 0;
}

}  // namespace

GammaRatio formal_degree_gamma_ratio(const DomainParams& d, const Rational& lambda) {
  validate(d);
  const Rational n_over_r = Rational(d.dimension(), d.r);
  GammaRatio g;
  for (int j = 1; j <= d.r; ++j) {
    const Rational shift = Rational((j - 1) * d.a, 2);
    g.numer.push_back(lambda - shift);
    g.denom.push_back(lambda - n_over_r - shift);
  }
  return g;
}

PiScaledRational scalar_formal_degree(const DomainParams& d, const Rational& lambda) {
  require_admissible(d, lambda);
  const auto ratio = formal_degree_gamma_ratio(d, lambda);
  const auto value = reduce_exact(ratio);
  if (!value || value->sqrt_pi_power != 0)
    throw NonTelescoping("Gamma_a ratio does not telescope for " + d.family_label +
                         " at lambda = " + to_string(lambda));
  return {value->coeff, -d.dimension()};
}

PiScaledRational so_odd_formal_degree(int m, const Rational& lambda) {
  Rational poly = lambda - m + Rational(1, 2);
  for (int k = 1; k <= 2 * m - 2; ++k) poly *= lambda - k;
  return {poly, -(2 * m - 1)};
}

CgCase classify(const DomainParams& d) {
  validate(d);
  if (label_starts_with(d, "Sp(")) return CgCase::symplectic;
  if (label_starts_with(d, "SO(2,") && d.r == 2 && d.b == 0 && d.a % 2 == 1)
    return CgCase::orthogonal_odd;
  if (d.r > 1 && d.a == 1 && d.b == 0) return CgCase::symplectic;
  if (d.r == 2 && d.b == 0 && d.a % 2 == 1) return CgCase::orthogonal_odd;
  if (d.dimension() % d.r == 0 && (d.r == 1 || d.a % 2 == 0)) return CgCase::generic;
  throw UnsupportedCase("no c_G formula for (r,a,b) = (" + std::to_string(d.r) + "," +
                        std::to_string(d.a) + "," + std::to_string(d.b) + ")");
}

Rational sp_pair_product(int r) {
  Rational prod = factorial(r);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) prod *= Rational(r + 1) - Rational(i + j, 2);
  return prod;
}

PiScaledRational c_G_symplectic(int r, CgFormula formula) {
  Rational prod = factorial(r);
  for (int i = 1; i <= r - 1; ++i) prod *= pochhammer(Rational(2 + i), i);
  if (formula == CgFormula::proof) prod /= Rational(BigInt(1) << (r * (r - 1) / 2));
  return {prod, -(r * (r + 1) / 2)};
}

PiScaledRational c_G_orthogonal_odd(int m) {
  return {(Rational(m) - Rational(1, 2)) * factorial(2 * m - 2), -(2 * m - 1)};
}

PiScaledRational c_G_generic(const DomainParams& d) {
  const int n_over_r = d.dimension() / d.r;
  Rational prod = 1;
  for (int j = 1; j <= d.r; ++j) prod *= pochhammer(Rational(1) + Rational((j - 1) * d.a, 2), n_over_r);
  return {prod, -d.dimension()};
}

PiScaledRational c_G(const DomainParams& d, CgFormula formula) {
  switch (classify(d)) {
    case CgCase::symplectic:
      return c_G_symplectic(d.r, formula);
    case CgCase::orthogonal_odd:
      return c_G_orthogonal_odd((d.a + 3) / 2);
    case CgCase::generic:
      return c_G_generic(d);
  }
  throw UnsupportedCase("unreachable");
}

Rational hc_degree_scalar(const DomainParams& d, const Rational& lambda) {
  const auto ratio = scalar_formal_degree(d, lambda) / c_G(d);
  if (ratio.pi_power() != 0 && ratio.coeff() != 0)
    throw PiPowerMismatch("d_lambda / c_G kept a power of pi");
  return ratio.coeff();
}

PiScaledRational wehrl_constant(const DomainParams& d, const Rational& lambda, int n) {
  if (n < 1) throw std::invalid_argument("wehrl_constant needs n >= 1");
  const Rational n_lambda = lambda * n;
  require_admissible(d, lambda);
  require_admissible(d, n_lambda);
  const auto direct = scalar_formal_degree(d, lambda).pow(n) / scalar_formal_degree(d, n_lambda);
  const auto via_hc = c_G(d).pow(n - 1) *
                      PiScaledRational(hc_degree_scalar(d, lambda)).pow(n) /
                      PiScaledRational(hc_degree_scalar(d, n_lambda));
  if (!(direct == via_hc))
    throw std::logic_error("Wehrl constant routes disagree: " + direct.to_string() + " vs " +
                           via_hc.to_string());
  return direct;
}

PiScaledRational partial_isometry_constant(const DomainParams& d, const Rational& lambda,
                                           const Rational& lambda_prime) {
  require_admissible(d, lambda);
  require_admissible(d, lambda_prime);
  require_admissible(d, lambda + lambda_prime);
  return scalar_formal_degree(d, lambda) * scalar_formal_degree(d, lambda_prime) /
         scalar_formal_degree(d, lambda + lambda_prime);
}

Rational sp_displayed_hc_degree(int r, const Rational& lambda) {
  Rational prod = 1;
  for (int i = 1; i <= r; ++i) prod *= (2 * lambda - (r + 1 - i)) / Rational(r + 1 - i);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      const Rational c = Rational(r + 1) - Rational(i + j, 2);
      prod *= (lambda - c) / c;
    }
  return prod;
}

}  // namespace wehrl
