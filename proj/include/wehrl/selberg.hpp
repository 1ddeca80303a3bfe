// Selberg-type integrals
//
//   S(r, a, b, γ) = ∫_{[0,1]^r} ∏_j (1 - s_j)^γ s_j^b ∏_{j<k} |s_j - s_k|^a ds
//
// in closed form and numerically. These give the oracle for formal degrees:
// d_λ^{-1} = C · S(r, a, b, λ - p), with C the polar-coordinate constant.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "wehrl/domain.hpp"
#include "wehrl/gamma_product.hpp"
#include "wehrl/report.hpp"

namespace wehrl {

struct SelbergSpec {
  int r = 1;
  Rational a{0};
  Rational b{0};
  Rational gamma{0};
};

/// Throws NonIntegrable unless γ > -1, b > -1 and a >= 0.
void check_integrable(const SelbergSpec& spec);

/// Value in closed form: exact (rational · π^{k/2}) when the Gamma factors
/// telescope, always with a 50-digit rendition.
struct ClosedForm {
  std::optional<HalfPiScaled> exact;
  HighPrecision high_precision;

  double value() const { return high_precision.convert_to<double>(); }
};

GammaRatio selberg_gamma_ratio(const SelbergSpec& spec);
ClosedForm selberg_closed(const SelbergSpec& spec);

/// C = π^N ∏_j Γ(1 + a/2) / (Γ(b + 1 + (j-1)a/2) Γ(1 + j a/2)).
ClosedForm laguerre_constant_C(const DomainParams& d);

enum class SelbergMethod { gauss_jacobi, ordered_simplex, monte_carlo, automatic };

std::string to_string(SelbergMethod m);
SelbergMethod selberg_method_from_string(const std::string& s);

struct SelbergOptions {
  SelbergMethod method = SelbergMethod::automatic;
  /// Nodes per axis for quadrature; total samples for Monte Carlo.
  long budget = 0;  // 0: method default
  std::uint64_t seed = 1;
  int partitions = 8;  // Monte Carlo work units, reduced in index order
  int strata = 16;     // strata along s_1 for Monte Carlo
  bool permute_coordinates = false;  // sample in reversed coordinate order
};

struct NumericEstimate {
  double value = 0.0;
  /// Standard error (Monte Carlo) or an a-posteriori quadrature error bound.
  double error = 0.0;
  bool error_is_stderr = false;
  long samples_or_nodes = 0;
  std::uint64_t seed = 0;
  SelbergMethod method = SelbergMethod::automatic;
};

/// The integrand (including weights) at a point of [0,1]^r.
double selberg_integrand(const SelbergSpec& spec, std::span<const double> s);

/// Throws MethodUnsupported for gauss_jacobi with a not an even integer.
NumericEstimate selberg_numeric(const SelbergSpec& spec, const SelbergOptions& options = {});

/// Selberg data for the degree integral of (d, λ): r, a, b, γ = λ - p.
SelbergSpec degree_selberg_spec(const DomainParams& d, const Rational& lambda);

/// d_λ^{-1} computed exactly and as C · (numeric Selberg integral).
/// PASS when the relative deviation is below `tolerance` (quadrature) or, for
/// Monte Carlo, when the exact value lies within 3 standard errors and the
/// deviation is below `tolerance`.
Report verify_degree_integral(const DomainParams& d, const Rational& lambda,
                              const SelbergOptions& options = {}, double tolerance = 1e-10);

}  // namespace wehrl
