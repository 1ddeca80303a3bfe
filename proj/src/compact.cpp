#include "wehrl/compact.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "wehrl/errors.hpp"
#include "wehrl/disc/poly.hpp"
#include "wehrl/quadrature.hpp"

namespace wehrl {

namespace {

int dim_from(Eigen::Index size) { return static_cast<int>(size) - 1; }

std::optional<BigInt> exact_sqrt(const BigInt& x) {
  const BigInt r = boost::multiprecision::sqrt(x);
  if (r * r == x) return r;
  return std::nullopt;
}

}  // namespace

Eigen::VectorXcd weight_to_monomial(const Eigen::VectorXcd& c) {
  const int m = dim_from(c.size());
  Eigen::VectorXcd p(c.size());
  for (int i = 0; i <= m; ++i) p[i] = c[i] * std::sqrt(to_double(binomial(m, i)));
  return p;
}

Eigen::VectorXcd monomial_to_weight(const Eigen::VectorXcd& p) {
  const int m = dim_from(p.size());
  Eigen::VectorXcd c(p.size());
  for (int i = 0; i <= m; ++i) c[i] = p[i] / std::sqrt(to_double(binomial(m, i)));
  return c;
}

std::optional<VectorX<Rational>> weight_to_monomial_exact(const VectorX<Rational>& c) {
  const int m = dim_from(c.size());
  VectorX<Rational> p(c.size());
  for (int i = 0; i <= m; ++i) {
    if (c[i] == 0) {
      p[i] = 0;
      continue;
    }
    const auto root = exact_sqrt(boost::multiprecision::numerator(binomial(m, i)));
    if (!root) return std::nullopt;
    p[i] = c[i] * Rational(*root);
  }
  return p;
}

Su2Element su2_from_euler(double alpha, double beta, double gamma) {
  return {std::polar(std::cos(beta / 2), (alpha + gamma) / 2),
          std::polar(std::sin(beta / 2), (alpha - gamma) / 2)};
}

Su2Element random_su2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::array<double, 4> q{};
  double s = 0.0;
  for (double& x : q) {
    x = normal(rng);
    s += x * x;
  }
  s = std::sqrt(s);
  return {{q[0] / s, q[1] / s}, {q[2] / s, q[3] / s}};
}

Eigen::VectorXcd random_unit_vector(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(m + 1);
  for (int i = 0; i <= m; ++i) v[i] = {normal(rng), normal(rng)};
  return v / v.norm();
}

Eigen::MatrixXcd su2_action(int m, const Su2Element& k) {
  // x ↦ a x - b̄ y, y ↦ b x + ā y; coefficient vectors indexed by the y power.
  Eigen::VectorXcd first(2), second(2);
  first << k.a, -std::conj(k.b);
  second << k.b, std::conj(k.a);
  Eigen::MatrixXcd out(m + 1, m + 1);
  for (int i = 0; i <= m; ++i) {
    Eigen::VectorXcd acc = Eigen::VectorXcd::Constant(1, 1.0);
    for (int j = 0; j < m - i; ++j) acc = convolve<std::complex<double>>(acc, first);
    for (int j = 0; j < i; ++j) acc = convolve<std::complex<double>>(acc, second);
    out.col(i) = acc;
  }
  return out;
}

std::complex<double> evaluate_top_coefficient(const Eigen::VectorXcd& p, std::complex<double> a,
                                              std::complex<double> b) {
  const int m = dim_from(p.size());
  // Σ p_i a^{m-i} b^i by Horner in b/a-free form
  std::complex<double> acc = 0.0;
  std::complex<double> apow = 1.0;
  std::vector<std::complex<double>> apows(m + 1);
  for (int i = 0; i <= m; ++i) {
    apows[i] = apow;
    apow *= a;
  }
  std::complex<double> bpow = 1.0;
  for (int i = 0; i <= m; ++i) {
    acc += p[i] * apows[m - i] * bpow;
    bpow *= b;
  }
  return acc;
}

HaarGrid make_haar_grid(int order) {
  if (order < 0) throw std::invalid_argument("grid order must be >= 0");
  HaarGrid g;
  g.order = order;
  const GaussRule legendre = gauss_legendre(order / 2 + 1);
  const int angles = order + 1;
  g.nodes.reserve(static_cast<std::size_t>(legendre.nodes.size()) * angles * angles);
  for (Eigen::Index i = 0; i < legendre.nodes.size(); ++i) {
    const double beta = std::acos(legendre.nodes[i]);
    const double w = legendre.weights[i] / 2.0 / (angles * angles);
    for (int ja = 0; ja < angles; ++ja) {
      const double alpha = 2.0 * std::numbers::pi * ja / angles;
      for (int jg = 0; jg < angles; ++jg) {
        const double gamma = 4.0 * std::numbers::pi * jg / angles;
        g.nodes.push_back(su2_from_euler(alpha, beta, gamma));
        g.weights.push_back(w);
      }
    }
  }
  return g;
}

double haar_moment(int p, int q, const HaarGrid& grid) {
  if (p < 0 || q < 0) throw std::invalid_argument("moments need p, q >= 0");
  if (grid.order < p + q)
    throw GridTooCoarse("grid order " + std::to_string(grid.order) + " < p + q = " +
                        std::to_string(p + q));
  double s = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    s += grid.weights[i] * std::pow(std::norm(grid.nodes[i].a), p) *
         std::pow(std::norm(grid.nodes[i].b), q);
  return s;
}

CasimirCheck casimir_tensor_check(const Eigen::VectorXcd& v_weight) {
  using C = std::complex<double>;
  const int m = dim_from(v_weight.size());
  const Eigen::VectorXcd v = v_weight / v_weight.norm();

  // sl₂ in the fundamental representation, coordinates (h, e, f) of [[h, e], [f, -h]].
  auto coords = [](const Eigen::Matrix2cd& x) { return Eigen::Vector3cd(x(0, 0), x(0, 1), x(1, 0)); };
  std::array<Eigen::Matrix2cd, 3> basis;
  basis[0] << 1, 0, 0, -1;
  basis[1] << 0, 1, 0, 0;
  basis[2] << 0, 0, 1, 0;
  std::array<Eigen::Matrix3cd, 3> ad;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      ad[i].col(j) = coords(basis[i] * basis[j] - basis[j] * basis[i]);
  Eigen::Matrix3cd kappa;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) kappa(i, j) = (ad[i] * ad[j]).trace();

  // Candidate orthogonal basis H, E+F, i(E-F), normalized by the Killing form.
  const std::array<Eigen::Vector3cd, 3> dirs = {Eigen::Vector3cd(1, 0, 0), Eigen::Vector3cd(0, 1, 1),
                                                Eigen::Vector3cd(0, C(0, 1), C(0, -1))};
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  Eigen::MatrixXcd e = h, f = h;
  for (int i = 0; i <= m; ++i) {
    h(i, i) = m - 2 * i;
    if (i >= 1) e(i - 1, i) = std::sqrt(double(i) * (m - i + 1));
    if (i < m) f(i + 1, i) = std::sqrt(double(i + 1) * (m - i));
  }
  std::array<Eigen::MatrixXcd, 3> tau;
  for (int i = 0; i < 3; ++i) {
    const C norm2 = (dirs[i].transpose() * kappa * dirs[i])(0, 0);
    const Eigen::Vector3cd t = dirs[i] / std::sqrt(norm2);
    tau[i] = t[0] * h + t[1] * e + t[2] * f;
  }

  CasimirCheck out;
  const double kappa_hh = kappa(0, 0).real();
  out.lambda_norm2 = double(m) * m / kappa_hh;
  out.casimir_constant = double(m) * (m + 2) / kappa_hh;
  Eigen::MatrixXcd cas = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  for (const auto& t : tau) cas += t * t;
  out.casimir_deviation =
      (cas - out.casimir_constant * Eigen::MatrixXcd::Identity(m + 1, m + 1)).norm();

  Eigen::VectorXcd lhs = Eigen::VectorXcd::Zero((m + 1) * (m + 1));
  for (const auto& t : tau) {
    const Eigen::VectorXcd tv = t * v;
    lhs += Eigen::kroneckerProduct(tv, tv).eval();
  }
  const Eigen::VectorXcd vv = Eigen::kroneckerProduct(v, v).eval();
  out.residual = (lhs - out.lambda_norm2 * vv).norm();
  out.cartan_mass = cartan_fraction<std::complex<double>>(weight_to_monomial(v), m, 2);
  return out;
}

namespace {

double haar_wehrl_integral(const Eigen::VectorXcd& p_unit, int n, const HaarGrid& grid) {
  double s = 0.0;
  for (std::size_t i = 0; i < grid.nodes.size(); ++i)
    s += grid.weights[i] *
         std::pow(std::norm(evaluate_top_coefficient(p_unit, grid.nodes[i].a, grid.nodes[i].b)), n);
  return s;
}

CompactWehrl compact_impl(const Eigen::VectorXcd& v_weight, int n, int grid_order,
                          double tolerance) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (v_weight.size() < 1) throw std::invalid_argument("empty vector");
  const double vnorm = v_weight.norm();
  if (vnorm == 0.0) throw std::invalid_argument("zero vector");
  const int m = dim_from(v_weight.size());
  const Eigen::VectorXcd p = weight_to_monomial(v_weight / vnorm);
  const int order = grid_order > 0 ? grid_order : 2 * n * m + 4;

  CompactWehrl out;
  out.m = m;
  out.n = n;
  out.bound = 1.0 / (n * m + 1);
  out.integral_numeric = haar_wehrl_integral(p, n, make_haar_grid(order));
  out.quadrature_estimate =
      std::abs(out.integral_numeric - haar_wehrl_integral(p, n, make_haar_grid(order + 4)));
  if (out.quadrature_estimate > tolerance)
    throw GridTooCoarse("Haar quadrature self-estimate " + std::to_string(out.quadrature_estimate) +
                        " exceeds tolerance at order " + std::to_string(order));
  out.integral_exact = cartan_fraction<std::complex<double>>(p, m, n) * out.bound;
  out.slack = out.bound - out.integral_exact;
  return out;
}

}  // namespace

CompactWehrl wehrl_compact_check(const Eigen::VectorXcd& v_weight, int n, int grid_order,
                                 double tolerance) {
  return compact_impl(v_weight, n, grid_order, tolerance);
}

CompactWehrl wehrl_compact_check(const VectorX<Rational>& v_weight, int n, int grid_order,
                                 double tolerance) {
  Eigen::VectorXcd vc(v_weight.size());
  for (Eigen::Index i = 0; i < v_weight.size(); ++i) vc[i] = to_double(v_weight[i]);
  CompactWehrl out = compact_impl(vc, n, grid_order, tolerance);
  if (const auto p = weight_to_monomial_exact(v_weight))
    out.exact = cartan_fraction<Rational>(*p, out.m, n) / (n * out.m + 1);
  return out;
}

CoherentFit fit_coherent(const Eigen::VectorXcd& v_weight) {
  const Eigen::VectorXcd p = weight_to_monomial(v_weight / v_weight.norm());
  auto fidelity = [&](double theta, double phi) {
    return std::norm(evaluate_top_coefficient(p, std::cos(theta), std::polar(std::sin(theta), phi)));
  };
  const int nt = 33, np = 64;
  double best = -1.0, bt = 0.0, bp = 0.0;
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < np; ++j) {
      const double t = std::numbers::pi / 2 * i / (nt - 1);
      const double ph = 2 * std::numbers::pi * j / np;
      const double val = fidelity(t, ph);
      if (val > best) best = val, bt = t, bp = ph;
    }
  // coordinate refinement with shrinking steps
  double st = std::numbers::pi / 2 / (nt - 1), sp = 2 * std::numbers::pi / np;
  while (st > 1e-13 || sp > 1e-13) {
    bool moved = false;
    for (auto [dt, dp] : {std::pair{st, 0.0}, {-st, 0.0}, {0.0, sp}, {0.0, -sp},
                          {st, sp}, {st, -sp}, {-st, sp}, {-st, -sp}}) {
      const double val = fidelity(bt + dt, bp + dp);
      if (val > best) {
        best = val, bt += dt, bp += dp;
        moved = true;
      }
    }
    if (!moved) st /= 2, sp /= 2;
  }
  return {{std::cos(bt), std::polar(std::sin(bt), bp)}, best};
}

Report compact_report(const Eigen::VectorXcd& v_weight, int n, int grid_order, std::uint64_t seed) {
  Report r;
  r.command = "compact";
  r.seed = seed;
  const int m = dim_from(v_weight.size());
  r.inputs["m"] = m;
  r.inputs["n"] = n;
  Json vec = Json::array();
  for (const auto& c : v_weight) vec.push_back(Json::array({c.real(), c.imag()}));
  r.inputs["vector"] = vec;
  r.inputs["grid_order"] = grid_order > 0 ? grid_order : 2 * n * m + 4;
  const CompactWehrl w = wehrl_compact_check(v_weight, n, grid_order);
  const CasimirCheck c = casimir_tensor_check(v_weight);
  r.outputs["exact"] = w.integral_exact;
  r.outputs["numeric"] = w.integral_numeric;
  r.outputs["bound"] = w.bound;
  r.outputs["slack"] = w.slack;
  r.outputs["eigcon_residual"] = c.residual;
  r.outputs["quadrature_estimate"] = w.quadrature_estimate;
  r.compare("numeric_vs_exact", w.integral_numeric, w.integral_exact, 1e-6, false);
  r.require(w.integral_exact <= w.bound + 1e-10 && w.integral_numeric <= w.bound + 1e-10);
  return r;
}

}  // namespace wehrl
