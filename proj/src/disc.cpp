#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <numbers>
#include <random>

#include "wehrl/disc/wehrl.hpp"
#include "wehrl/disc/projection.hpp"
#include "wehrl/quadrature.hpp"

namespace wehrl {

std::string to_string(ConstantConvention c) {
  return c == ConstantConvention::paper_plus_one ? "paper" : "corrected";
}

ConstantConvention convention_from_string(const std::string& s) {
  if (s == "paper" || s == "paper_plus_one") return ConstantConvention::paper_plus_one;
  if (s == "corrected" || s == "corrected_minus_one") return ConstantConvention::corrected_minus_one;
  throw std::invalid_argument("unknown convention " + s + " (paper|corrected)");
}

Rational projection_c_inverse_squared(const ProjectionSpec& spec) {
  const int shift = spec.convention == ConstantConvention::paper_plus_one ? 1 : -1;
  if (spec.k == 0) return 1;
  return factorial(spec.k) * pochhammer(spec.mu + spec.nu + spec.k + shift, spec.k) /
         (pochhammer(spec.mu, spec.k) * pochhammer(spec.nu, spec.k));
}

std::string to_string(RemainderConstant c) { return c == RemainderConstant::paper ? "paper" : "sharp"; }

RemainderConstant remainder_from_string(const std::string& s) {
  if (s == "paper") return RemainderConstant::paper;
  if (s == "sharp" || s == "corrected") return RemainderConstant::sharp;
  throw std::invalid_argument("unknown remainder constant " + s + " (paper|sharp)");
}

Rational remainder_constant(const Rational& nu, RemainderConstant which) {
  const Rational top = 2 * nu * nu * (nu + 1) * (nu + 1);
  if (which == RemainderConstant::paper) return top / ((2 * nu + 3) * (2 * nu + 4));
  return top / ((2 * nu + 1) * (2 * nu + 2));
}

double kernel_tail_bound(const Rational& nu, double abs_w, int degree) {
  const double v = to_double(nu);
  const double x = abs_w * abs_w;
  if (x == 0.0) return 0.0;
  // term_m = (ν)_m/m! x^m, built in log space up to m = degree + 1
  const int m0 = degree + 1;
  double log_term = std::lgamma(v + m0) - std::lgamma(v) - std::lgamma(m0 + 1.0) + m0 * std::log(x);
  double term = std::exp(log_term);
  double sum = 0.0;
  for (int m = m0; m < m0 + 100000; ++m) {
    sum += term;
    const double ratio = (v + m) / (m + 1.0) * x;
    term *= ratio;
    if (ratio < 1.0 && term / (1.0 - ratio) < 1e-17 * sum) {
      sum += term / (1.0 - ratio);
      break;
    }
  }
  return sum;
}

namespace {

// ∫_𝔻 |f|^p (1-|z|²)^alpha dm(z) / π, by Gauss–Jacobi in t = |z|² and the
// trapezoid rule in the angle (exact for trigonometric polynomials).
double disc_integral(const PolyFun<std::complex<double>>& f, int p, double alpha, int nodes) {
  if (alpha <= -1.0) throw NonIntegrable("weight exponent must exceed -1");
  const int deg = std::max(f.degree(), 0);
  const int eff = deg * p / 2 + 1;
  const int radial = nodes > 0 ? nodes : std::max(32, 2 * eff + 8);
  const int angles = std::max(4 * deg + 1, p * deg + 1);
  const GaussRule rule = gauss_jacobi01(radial, 0.0, alpha);
  double total = 0.0;
  for (int i = 0; i < radial; ++i) {
    const double rho = std::sqrt(rule.nodes[i]);
    double ring = 0.0;
    for (int k = 0; k < angles; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angles;
      ring += std::pow(std::abs(evaluate(f, std::polar(rho, theta))), p);
    }
    total += rule.weights[i] * ring / angles;
  }
  // (1/π) ∫ dm = (1/π) ∫₀^{2π} ∫₀¹ (1/2) dt dθ
  return total;
}

}  // namespace

double norm_p_numeric(const PolyFun<std::complex<double>>& f, int p, int nodes) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("norm_p_numeric supports even p >= 2");
  const double weight = to_double(f.nu) * p / 2.0;
  if (weight <= 1.0) throw NonIntegrable("p nu / 2 must exceed 1");
  return (weight - 1.0) * disc_integral(f, p, weight - 2.0, nodes);
}

double matrix_coeff_lp(const PolyFun<std::complex<double>>& f, int n, int nodes) {
  const double weight = to_double(f.nu) * n;
  if (weight <= 1.0) throw NonIntegrable("n nu must exceed 1");
  return disc_integral(f, 2 * n, weight - 2.0, nodes);
}

std::vector<ProfilePoint> eval_functional_profile(const Rational& nu,
                                                  const std::vector<double>& radii) {
  const long double v = static_cast<long double>(to_double(nu));
  std::vector<ProfilePoint> out;
  for (double radius : radii) {
    if (radius < 0.0 || radius >= 1.0) throw std::invalid_argument("|w| must lie in [0, 1)");
    const long double x = static_cast<long double>(radius) * radius;
    // Kahan-summed series Σ (ν)_m/m! x^m
    long double sum = 0.0L;
    long double carry = 0.0L;
    long double term = 1.0L;
    long m = 0;
    while (true) {
      const long double y = term - carry;
      const long double t = sum + y;
      carry = (t - sum) - y;
      sum = t;
      const long double ratio = (v + m) / (m + 1.0L) * x;
      term *= ratio;
      ++m;
      if (x == 0.0L) break;
      if (ratio < 1.0L && term / (1.0L - ratio) < 1e-19L * sum) {
        sum += term / (1.0L - ratio);
        break;
      }
    }
    const double closed = std::pow(1.0 - radius * radius, -to_double(nu) / 2.0);
    out.push_back({radius, static_cast<double>(std::sqrt(sum)), closed, m});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximizer search

double wehrl_objective(const PolyFun<std::complex<double>>& f, int n) {
  return norm2_exact(power(f, n));
}

Eigen::VectorXcd wehrl_gradient(const PolyFun<std::complex<double>>& f, int n) {
  const PolyFun<std::complex<double>> h = power(f, n - 1);
  const VectorX<std::complex<double>> g = convolve(h.coeffs, f.coeffs);
  const Eigen::VectorXd big_w = monomial_weights<double>(f.nu * n, static_cast<int>(g.size()) - 1);
  const Eigen::VectorXd u = monomial_weights<double>(f.nu, f.degree());
  Eigen::VectorXcd grad(f.coeffs.size());
  for (Eigen::Index j = 0; j < f.coeffs.size(); ++j) {
    std::complex<double> s = 0.0;
    for (Eigen::Index m = j; m < g.size() && m - j < h.coeffs.size(); ++m)
      s += big_w[m] * g[m] * std::conj(h.coeffs[m - j]);
    grad[j] = 2.0 * n * s / u[j];
  }
  return grad;
}

namespace {

double real_inner_u(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b, const Eigen::VectorXd& u) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += (a[i] * std::conj(b[i])).real() * u[i];
  return s;
}

Eigen::VectorXcd normalized(const Eigen::VectorXcd& c, const Eigen::VectorXd& u) {
  return c / std::sqrt(real_inner_u(c, c, u));
}

Eigen::VectorXcd tangent(const Eigen::VectorXcd& grad, const Eigen::VectorXcd& f,
                         const Eigen::VectorXd& u) {
  return grad - real_inner_u(grad, f, u) * f;
}

// Minimal Nelder–Mead on R².
template <typename F>
std::array<double, 2> nelder_mead(F&& cost, std::array<double, 2> x0, double step, int iters) {
  std::array<std::array<double, 2>, 3> p = {x0, x0, x0};
  p[1][0] += step;
  p[2][1] += step;
  std::array<double, 3> v = {cost(p[0]), cost(p[1]), cost(p[2])};
  for (int it = 0; it < iters; ++it) {
    std::array<int, 3> o = {0, 1, 2};
    std::sort(o.begin(), o.end(), [&](int a, int b) { return v[a] < v[b]; });
    const auto best = p[o[0]];
    const auto mid = p[o[1]];
    const auto worst = p[o[2]];
    if (std::abs(v[o[2]] - v[o[0]]) < 1e-18 &&
        std::hypot(worst[0] - best[0], worst[1] - best[1]) < 1e-12)
      break;
    const std::array<double, 2> c = {(best[0] + mid[0]) / 2, (best[1] + mid[1]) / 2};
    auto lerp = [&](double t) {
      return std::array<double, 2>{c[0] + t * (worst[0] - c[0]), c[1] + t * (worst[1] - c[1])};
    };
    const auto refl = lerp(-1.0);
    const double fr = cost(refl);
    if (fr < v[o[0]]) {
      const auto exp = lerp(-2.0);
      const double fe = cost(exp);
      if (fe < fr) {
        p[o[2]] = exp;
        v[o[2]] = fe;
      } else {
        p[o[2]] = refl;
        v[o[2]] = fr;
      }
    } else if (fr < v[o[1]]) {
      p[o[2]] = refl;
      v[o[2]] = fr;
    } else {
      const auto con = lerp(0.5);
      const double fc = cost(con);
      if (fc < v[o[2]]) {
        p[o[2]] = con;
        v[o[2]] = fc;
      } else {
        for (int k : {o[1], o[2]}) {
          p[k] = {(p[k][0] + best[0]) / 2, (p[k][1] + best[1]) / 2};
          v[k] = cost(p[k]);
        }
      }
    }
  }
  int arg = 0;
  for (int k = 1; k < 3; ++k)
    if (v[k] < v[arg]) arg = k;
  return p[arg];
}

}  // namespace

KernelFit fit_kernel(const PolyFun<std::complex<double>>& f) {
  const double fnorm2 = norm2_exact(f);
  auto residual = [&](std::complex<double> w) {
    if (std::abs(w) >= 0.999) return fnorm2 + std::abs(w);
    const auto k = kernel_poly<std::complex<double>>(f.nu, w, f.degree());
    const Eigen::VectorXd u = monomial_weights<double>(f.nu, f.degree());
    std::complex<double> ip = 0.0;
    for (int m = 0; m <= f.degree(); ++m) ip += f.coeffs[m] * std::conj(k.coeffs[m]) * u[m];
    return std::max(0.0, fnorm2 - std::norm(ip) / norm2_exact(k));
  };
  std::complex<double> w0 = 0.0;
  if (f.degree() >= 1 && std::abs(f.coeffs[0]) > 1e-12) {
    // coefficient ratio of K_w: a_1/a_0 = ν w̄
    w0 = std::conj(f.coeffs[1] / (f.coeffs[0] * to_double(f.nu)));
    if (std::abs(w0) > 0.95) w0 *= 0.95 / std::abs(w0);
  }
  auto cost = [&](const std::array<double, 2>& x) { return residual({x[0], x[1]}); };
  std::array<double, 2> best = {w0.real(), w0.imag()};
  for (int pass = 0; pass < 3; ++pass) best = nelder_mead(cost, best, 0.05 / (1 + 10 * pass), 400);
  const std::complex<double> w{best[0], best[1]};
  return {w, std::sqrt(residual(w))};
}

MaximizeResult maximize_wehrl(const MaximizeOptions& opt) {
  if (opt.degree < 1) throw std::invalid_argument("maximize_wehrl needs degree >= 1");
  if (opt.n < 2) throw std::invalid_argument("maximize_wehrl needs n >= 2");
  const int dim = opt.degree + 1;
  const Eigen::VectorXd u = monomial_weights<double>(opt.nu, opt.degree);

  Eigen::VectorXcd c(dim);
  if (opt.start.size() > 0) {
    c = Eigen::VectorXcd::Zero(dim);
    c.head(std::min<Eigen::Index>(dim, opt.start.size())) =
        opt.start.head(std::min<Eigen::Index>(dim, opt.start.size()));
  } else {
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> normal;
    for (int i = 0; i < dim; ++i) c[i] = {normal(rng), normal(rng)};
  }
  c = normalized(c, u);

  MaximizeResult res;
  PolyFun<std::complex<double>> f{opt.nu, c};
  double phi = wehrl_objective(f, opt.n);
  res.history.push_back(phi);
  Eigen::VectorXcd grad = tangent(wehrl_gradient(f, opt.n), f.coeffs, u);
  double step = 0.1;
  int flat = 0;  // consecutive steps that moved Φ by less than roundoff
  int it = 0;
  for (; it < opt.max_iters; ++it) {
    const double gnorm = std::sqrt(real_inner_u(grad, grad, u));
    res.gradient_norm = gnorm;
    if (gnorm < opt.tol) {
      res.stop_reason = "gradient";
      break;
    }
    bool improved = false;
    Eigen::VectorXcd next;
    double next_phi = phi;
    double s = step;
    for (int bt = 0; bt < 60; ++bt) {
      next = normalized(f.coeffs + s * grad, u);
      next_phi = wehrl_objective({opt.nu, next}, opt.n);
      if (next_phi >= phi) {
        improved = true;
        break;
      }
      s *= 0.5;
    }
    if (!improved) {  // no ascent direction left at machine precision
      res.stop_reason = "stalled";
      break;
    }
    const Eigen::VectorXcd dx = next - f.coeffs;
    f.coeffs = next;
    const Eigen::VectorXcd next_grad = tangent(wehrl_gradient(f, opt.n), f.coeffs, u);
    const Eigen::VectorXcd dg = next_grad - grad;
    const double sy = real_inner_u(dx, dg, u);
    const double ss = real_inner_u(dx, dx, u);
    step = (std::abs(sy) > 1e-300) ? std::clamp(ss / std::abs(sy), 1e-6, 1e3) : 0.1;
    grad = next_grad;
    if (next_phi < res.history.back()) res.monotone = false;
    flat = (next_phi - phi <= 4 * std::numeric_limits<double>::epsilon() * phi) ? flat + 1 : 0;
    phi = next_phi;
    res.history.push_back(phi);
    if (flat >= opt.stall_window) {
      // Truncated kernels K_w form a ridge on which Φ = 1 - O(|w|^{2(degree+1)}):
      // the remaining gradient points along it and Φ no longer moves.
      res.stop_reason = "stalled";
      ++it;
      break;
    }
  }
  res.iterations = it;
  res.gradient_norm = std::sqrt(real_inner_u(grad, grad, u));
  if (res.stop_reason.empty() && res.gradient_norm < opt.tol) res.stop_reason = "gradient";
  if (res.stop_reason.empty())
    throw NoConvergence("maximize_wehrl: no convergence after " + std::to_string(opt.max_iters) +
                        " iterations (gradient norm " + std::to_string(res.gradient_norm) + ")");
  res.f = f;
  res.objective = phi;
  const KernelFit fit = fit_kernel(f);
  res.kernel_distance = fit.distance;
  res.fitted_w = fit.w;
  return res;
}

}  // namespace wehrl
