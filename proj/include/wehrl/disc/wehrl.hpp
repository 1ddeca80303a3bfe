// Wehrl-type inequalities on the disc in unit normalization:
//
//   ‖f^n‖²_{nν} ≤ ‖f‖^{2n}_ν,
//
// and the improved form with the remainder coming from the H_{2ν+4} summand of
// f ⊗ f.
#pragma once

#include <complex>
#include <string>

#include "wehrl/disc/poly.hpp"
#include "wehrl/errors.hpp"

namespace wehrl {

template <typename Scalar>
struct WehrlResult {
  RealOf<Scalar> lhs;
  RealOf<Scalar> rhs;
  RealOf<Scalar> slack;
};

template <typename Scalar>
WehrlResult<Scalar> wehrl_check(const PolyFun<Scalar>& f, int n) {
  if (n < 1) throw std::invalid_argument("wehrl_check needs n >= 1");
  const RealOf<Scalar> lhs = norm2_exact(power(f, n));
  const RealOf<Scalar> base = norm2_exact(f);
  RealOf<Scalar> rhs(1);
  for (int i = 0; i < n; ++i) rhs *= base;
  return {lhs, rhs, rhs - lhs};
}

enum class RemainderConstant { paper, sharp };

std::string to_string(RemainderConstant c);
RemainderConstant remainder_from_string(const std::string& s);

/// 2ν²(ν+1)² / ((2ν+3)(2ν+4)) for `paper`, / ((2ν+1)(2ν+2)) for `sharp`;
/// only the sharp one is attained (f = 1 + z, ν = 2, n = 2).
Rational remainder_constant(const Rational& nu, RemainderConstant which);

/// (f''f/(ν)₂ - (f')²/ν²) f^{n-2} at weight nν + 4.
template <typename Scalar>
PolyFun<Scalar> remainder_function(const PolyFun<Scalar>& f, int n) {
  using T = ScalarTraits<Scalar>;
  const VectorX<Scalar> d1 = derivative(f.coeffs);
  const VectorX<Scalar> d2 = derivative(d1);
  const Scalar inv_poch = T::from_rational(Rational(1) / pochhammer(f.nu, 2));
  const Scalar inv_nu2 = T::from_rational(Rational(1) / (f.nu * f.nu));
  VectorX<Scalar> a = convolve(d2, f.coeffs);
  VectorX<Scalar> b = convolve(d1, d1);
  const Eigen::Index len = std::max(a.size(), b.size());
  VectorX<Scalar> g = VectorX<Scalar>::Constant(len, Scalar(0));
  for (Eigen::Index i = 0; i < a.size(); ++i) g[i] += a[i] * inv_poch;
  for (Eigen::Index i = 0; i < b.size(); ++i) g[i] -= b[i] * inv_nu2;
  const PolyFun<Scalar> tail = power(f, n - 2);
  return {f.nu * n + 4, convolve(g, tail.coeffs)};
}

template <typename Scalar>
struct ImprovedResult {
  RealOf<Scalar> lhs;
  RealOf<Scalar> rhs;
  RealOf<Scalar> remainder;
  RealOf<Scalar> slack;  // rhs - lhs - remainder
};

template <typename Scalar>
ImprovedResult<Scalar> improved_check(const PolyFun<Scalar>& f, int n, RemainderConstant which) {
  if (n < 2) throw std::invalid_argument("improved_check needs n >= 2");
  const auto base = wehrl_check(f, n);
  const RealOf<Scalar> rem =
      ScalarTraits<RealOf<Scalar>>::from_rational(remainder_constant(f.nu, which)) *
      norm2_exact(remainder_function(f, n));
  return {base.lhs, base.rhs, rem, base.rhs - base.lhs - rem};
}

// ---------------------------------------------------------------------------
// Reproducing kernels K_w(z) = (1 - z w̄)^{-ν}

/// Truncated expansion: coefficient (ν)_m/m! · conj(w)^m for m <= degree.
template <typename Scalar>
PolyFun<Scalar> kernel_poly(const Rational& nu, const Scalar& w, int degree) {
  using T = ScalarTraits<Scalar>;
  PolyFun<Scalar> f{nu, VectorX<Scalar>(degree + 1)};
  const Scalar wbar = T::conj(w);
  Scalar pw(1);
  for (int m = 0; m <= degree; ++m) {
    f.coeffs[m] = T::from_rational(pochhammer(nu, m) / factorial(m)) * pw;
    pw = pw * wbar;
  }
  return f;
}

/// ‖K_w - truncation‖²_ν = Σ_{m>degree} (ν)_m/m! |w|^{2m}.
double kernel_tail_bound(const Rational& nu, double abs_w, int degree);

/// Coefficients of the solution of f''f = ((ν+1)/ν)(f')², f(0) = 1, f'(0) = c.
/// Throws OutsideBergman when |c| >= ν (the series is not in H_ν).
template <typename Scalar>
PolyFun<Scalar> ode_solve(const Rational& nu, const Scalar& c, int degree) {
  using T = ScalarTraits<Scalar>;
  const auto abs2 = T::abs2(c);
  if (abs2 >= ScalarTraits<RealOf<Scalar>>::from_rational(nu * nu))
    throw OutsideBergman("|c| >= nu: the ODE solution is not in the Bergman space");
  VectorX<Scalar> a = VectorX<Scalar>::Constant(degree + 1, Scalar(0));
  a[0] = Scalar(1);
  if (degree >= 1) a[1] = c;
  const Scalar ratio = T::from_rational((nu + 1) / nu);
  // z^m coefficient of f''f - ratio (f')² = 0 determines a_{m+2}.
  for (int m = 0; m + 2 <= degree; ++m) {
    Scalar rhs(0);
    for (int i = 0; i <= m; ++i)
      rhs += ratio * Scalar((i + 1) * (m - i + 1)) * a[i + 1] * a[m - i + 1];
    for (int i = 0; i < m; ++i) rhs -= Scalar((i + 2) * (i + 1)) * a[i + 2] * a[m - i];
    a[m + 2] = rhs / (Scalar((m + 2) * (m + 1)) * a[0]);
  }
  return {nu, a};
}

// ---------------------------------------------------------------------------
// Quadrature routes

/// Unit-normalized L^p norm to the p-th power at weight pν/2:
///   (pν/2 - 1)/π ∫_𝔻 |f|^p (1-|z|²)^{pν/2-2} dm(z),
/// which equals norm2_exact(f^{p/2}) at weight pν/2 for even p.
/// nodes = 0 picks max(32, 2·degree_eff + 8) radial nodes.
double norm_p_numeric(const PolyFun<std::complex<double>>& f, int p, int nodes = 0);

/// (1/π) ∫_𝔻 (1-|z|²)^{nν-2} |f|^{2n} dm(z), the disc form of ∫_G |<π(g)f, 1>|^{2n} dg.
double matrix_coeff_lp(const PolyFun<std::complex<double>>& f, int n, int nodes = 0);

struct ProfilePoint {
  double radius;
  double norm_series;  // (Σ_m (ν)_m/m! |w|^{2m})^{1/2}
  double norm_closed;  // (1-|w|²)^{-ν/2}
  long terms;
};

/// ‖K_w‖_ν along a list of radii |w| < 1.
std::vector<ProfilePoint> eval_functional_profile(const Rational& nu,
                                                  const std::vector<double>& radii);

// ---------------------------------------------------------------------------
// Maximizer search

struct MaximizeOptions {
  Rational nu{2};
  int n = 2;
  int degree = 12;
  std::uint64_t seed = 1;
  int max_iters = 200000;
  double tol = 1e-10;
  /// Stop once Φ has been flat to roundoff for this many consecutive steps.
  int stall_window = 50;
  /// Optional starting point (coefficients); random unit vector when empty.
  Eigen::VectorXcd start;
};

struct MaximizeResult {
  PolyFun<std::complex<double>> f;
  double objective = 0.0;
  double kernel_distance = 0.0;
  std::complex<double> fitted_w;
  int iterations = 0;
  double gradient_norm = 0.0;
  bool monotone = true;
  std::string stop_reason;  // "gradient" or "stalled"
  std::vector<double> history;
};

/// Φ(f) = ‖f^n‖²_{nν} and its Riemannian gradient (w.r.t. the ν inner product).
double wehrl_objective(const PolyFun<std::complex<double>>& f, int n);
Eigen::VectorXcd wehrl_gradient(const PolyFun<std::complex<double>>& f, int n);

/// Projected (Barzilai–Borwein, monotone backtracking) ascent of Φ on the unit
/// sphere of H_ν ∩ {deg <= degree}. Stops on gradient norm < tol or when Φ is
/// flat to roundoff; throws NoConvergence after max_iters.
MaximizeResult maximize_wehrl(const MaximizeOptions& options);

/// min over w, α of ‖f - α K_w^{(deg f)}‖_ν, for unit f.
struct KernelFit {
  std::complex<double> w;
  double distance;
};
KernelFit fit_kernel(const PolyFun<std::complex<double>>& f);

}  // namespace wehrl
