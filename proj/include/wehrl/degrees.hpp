// Exact formal degrees of scalar holomorphic discrete series and the constants
// built from them.  Everything here is rational arithmetic times powers of π;
// π is never evaluated.
#pragma once

#include "wehrl/domain.hpp"
#include "wehrl/gamma_product.hpp"
#include "wehrl/pi_scaled.hpp"
#include "wehrl/roots.hpp"

namespace wehrl {

/// Γ_a(λ)/Γ_a(λ - N/r) as a Gamma ratio (without the π^{-N}).
GammaRatio formal_degree_gamma_ratio(const DomainParams& d, const Rational& lambda);

/// d_λ = π^{-N} Γ_a(λ)/Γ_a(λ - N/r).
/// Throws NotAdmissible for λ <= p - 1 and NonTelescoping if the Gamma factors
/// cannot be paired into Pochhammer symbols.
PiScaledRational scalar_formal_degree(const DomainParams& d, const Rational& lambda);

/// SO₀(2, 2m-1) closed form π^{-N}(λ - m + 1/2)(λ - 2m + 2)···(λ - 1).
PiScaledRational so_odd_formal_degree(int m, const Rational& lambda);

enum class CgCase { symplectic, orthogonal_odd, generic };

/// Which branch of the c_G formula applies. Presets dispatch on the family
/// label first so Sp(2,R) and SO(2,3) each use their own formula.
CgCase classify(const DomainParams& d);

/// The Sp(r,R) branch exists in two forms: the one derived in the proof
/// (carrying 2^{-r(r-1)/2}) and the one stated in the proposition.
enum class CgFormula { proof, statement };

PiScaledRational c_G(const DomainParams& d, CgFormula formula = CgFormula::proof);

/// Individual branches, exposed for cross-checks.
PiScaledRational c_G_symplectic(int r, CgFormula formula = CgFormula::proof);
PiScaledRational c_G_orthogonal_odd(int m);
PiScaledRational c_G_generic(const DomainParams& d);
/// r! ∏_{i<j} (r + 1 - (i+j)/2), the intermediate pair product for Sp(r,R).
Rational sp_pair_product(int r);

/// d^H_λ = d_λ / c_G (π power must cancel).
Rational hc_degree_scalar(const DomainParams& d, const Rational& lambda);

/// d_λ^n / d_{nλ}; checked against c_G^{n-1} (d^H_λ)^n / d^H_{nλ}.
PiScaledRational wehrl_constant(const DomainParams& d, const Rational& lambda, int n);

/// C_{λ,λ'}^{-2} = d_λ d_λ' / d_{λ+λ'}.
PiScaledRational partial_isometry_constant(const DomainParams& d, const Rational& lambda,
                                           const Rational& lambda_prime);

/// The root-product d^H for the Sp(r,R) case exactly as displayed in the
/// proof: ∏_i (2λ-(r+1-i))/(r+1-i) ∏_{i<j} (λ-(r+1-(i+j)/2))/(r+1-(i+j)/2).
/// Kept for the audit report only.
Rational sp_displayed_hc_degree(int r, const Rational& lambda);

}  // namespace wehrl
