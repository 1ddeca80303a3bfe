#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gen.hpp"
#include "wehrl/disc/projection.hpp"
#include "wehrl/disc/wehrl.hpp"

using namespace wehrl;
using Cd = std::complex<double>;
using Q = Rational;

TEST_CASE("exact norms") {
  CHECK(norm2_exact(make_poly<Q>(2, {0, 0, 0, 1})) == Q(1, 4));
  CHECK(norm2_exact(make_poly<Q>(Q(7, 3), {1})) == 1);
  CHECK(norm2_exact(make_poly<Q>(2, {1, 1})) == Q(3, 2));
}

TEST_CASE("radial quadrature reproduces the exact norm") {
  gen::Rng g(21);
  for (int t = 0; t < 40; ++t) {
    const Q nu = Q(g.uniform_int(3, 12), 2);
    const auto f = gen::poly<Q>(g, nu, 20);
    const double exact = to_double(norm2_exact(f));
    CHECK(std::abs(norm_p_numeric(gen::to_complex_poly(f), 2) / exact - 1) < 1e-10);
  }
}

TEST_CASE("L^p norms by quadrature") {
  CHECK(norm_p_numeric(make_poly<Cd>(2, {1.0}), 4) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(norm_p_numeric(make_poly<Cd>(2, {0.0, 1.0}), 4) == doctest::Approx(0.1).epsilon(1e-13));
  CHECK(norm_p_numeric(make_poly<Cd>(2, {1.0, 1.0}), 4) == doctest::Approx(2.1).epsilon(1e-13));
  CHECK_THROWS_AS(norm_p_numeric(make_poly<Cd>(Q(1, 2), {1.0}), 2), NonIntegrable);

  gen::Rng g(4);
  for (int t = 0; t < 20; ++t) {
    const auto f = gen::unit_poly(g, Q(5, 2), 6);
    const int p = 2 * g.uniform_int(1, 3);
    const double expected = norm2_exact(power(f, p / 2));
    CHECK(std::abs(norm_p_numeric(f, p) / expected - 1) < 1e-10);
    // rotation invariance
    auto rotated = f;
    const double theta = 2 * std::numbers::pi * g.uniform();
    for (int m = 0; m <= f.degree(); ++m) rotated.coeffs[m] *= std::polar(1.0, m * theta);
    CHECK(std::abs(norm_p_numeric(rotated, p) / norm_p_numeric(f, p) - 1) < 1e-10);
    CHECK(std::abs(norm2_exact(rotated) - norm2_exact(f)) < 1e-14);
  }
}

TEST_CASE("projection constants") {
  CHECK(projection_c_squared({2, 2, 2, ConstantConvention::corrected_minus_one}) == Q(3, 5));
  CHECK(projection_c_squared({2, 2, 2, ConstantConvention::paper_plus_one}) == Q(9, 28));
  CHECK(projection_c_squared({Q(5, 2), 3, 0}) == 1);
}

TEST_CASE("Q_k examples") {
  const auto zz = tensor(make_poly<Q>(2, {0, 1}), make_poly<Q>(2, {0, 1}));
  const auto q2 = qk_project(zz, {2, 2, 2});
  CHECK(q2.unscaled.coeffs.size() == 1);
  CHECK(q2.unscaled.coeffs[0] == Q(-1, 2));
  CHECK(q2.unscaled.nu == 8);
  CHECK(q2.norm2() == Q(3, 20));

  const auto low = lowest_vector<Q>(2, 2, 2);
  CHECK(norm2_exact(low) == Q(5, 3));
  const auto ql = qk_project(low, {2, 2, 2});
  CHECK(ql.unscaled.coeffs[0] == Q(5, 3));
  CHECK(ql.norm2() == norm2_exact(low));

  const auto c = completeness(make_poly<Q>(2, {0, 1}), make_poly<Q>(2, {0, 1}),
                              ConstantConvention::corrected_minus_one);
  CHECK(c.masses == std::vector<Q>{Q(1, 10), 0, Q(3, 20)});
  CHECK(c.total == Q(1, 4));
  const auto p = completeness(make_poly<Q>(2, {0, 1}), make_poly<Q>(2, {0, 1}),
                              ConstantConvention::paper_plus_one);
  CHECK(p.total == Q(1, 10) + Q(9, 112));
  CHECK(p.total != p.expected);

  const auto ones = completeness(make_poly<Q>(3, {1}), make_poly<Q>(Q(5, 2), {1}),
                                 ConstantConvention::corrected_minus_one);
  CHECK(ones.masses == std::vector<Q>{1});
}

TEST_CASE("completeness under the corrected constant") {
  gen::Rng g(99);
  for (auto [mu, nu] : {std::pair<Q, Q>{2, 2}, {2, 3}, {Q(5, 2), Q(7, 2)}}) {
    for (int t = 0; t < 8; ++t) {
      const auto f = gen::poly<GaussianRational>(g, mu, 5);
      const auto h = gen::poly<GaussianRational>(g, nu, 5);
      const auto c = completeness(f, h, ConstantConvention::corrected_minus_one);
      CHECK(c.total == c.expected);
    }
  }
}

TEST_CASE("partial isometry on the summands") {
  gen::Rng g(12);
  for (int k = 0; k <= 4; ++k) {
    const Q mu = Q(g.uniform_int(3, 9), 2), nu = Q(g.uniform_int(3, 9), 2);
    auto F = lowest_vector<Q>(mu, nu, k);
    for (int r = 0; r <= 3; ++r) {
      const auto q = qk_project(F, {mu, nu, k});
      CHECK(q.norm2() == norm2_exact(F));
      // orthogonal to every other summand
      for (int j = 0; j <= k + r; ++j)
        if (j != k) CHECK(qk_project(F, {mu, nu, j}).norm2() == 0);
      F = raise(F);
    }
  }
}

TEST_CASE("Q_1 annihilates f ⊗ f and its tensor powers") {
  gen::Rng g(13);
  for (int t = 0; t < 20; ++t) {
    const Q nu = Q(g.uniform_int(3, 10), 2);
    const auto f = gen::poly<Q>(g, nu, 6);
    CHECK(qk_project(tensor(f, f), {nu, nu, 1}).unscaled.coeffs.isZero());
    for (int n : {2, 3})
      for (const auto& m : q1_tensor_power_masses(f, n)) CHECK(m == 0);
  }
}

TEST_CASE("wehrl inequality") {
  const auto r = wehrl_check(make_poly<Q>(2, {1, 1}), 2);
  CHECK(r.lhs == Q(21, 10));
  CHECK(r.rhs == Q(9, 4));
  CHECK(r.slack == Q(3, 20));
  const auto z = wehrl_check(make_poly<Q>(2, {0, 1}), 3);
  CHECK(z.lhs == Q(6, 336));
  CHECK(z.slack == Q(1, 8) - Q(1, 56));

  const auto kernel = kernel_poly<Cd>(2, 0.3, 60);
  CHECK(std::abs(wehrl_check(kernel, 2).slack) < 1e-8);
  CHECK(kernel_tail_bound(2, 0.3, 60) < 1e-60);

  gen::Rng g(31);
  for (int t = 0; t < 60; ++t) {
    const auto f = gen::poly<Q>(g, Q(g.uniform_int(4, 7), 2), 6);
    const Q c = gen::rational(g);
    if (c == 0) continue;
    const int n = g.uniform_int(2, 3);
    const auto a = wehrl_check(f, n), b = wehrl_check(scaled(f, c), n);
    Q cn = 1;
    for (int i = 0; i < 2 * n; ++i) cn *= c;
    CHECK(b.lhs == a.lhs * cn);
    CHECK(b.rhs == a.rhs * cn);
    CHECK(a.slack >= 0);
  }
}

TEST_CASE("improved inequality") {
  const auto f = make_poly<Q>(2, {1, 1});
  CHECK(remainder_function(f, 2).coeffs[0] == Q(-1, 4));
  const auto sharp = improved_check(f, 2, RemainderConstant::sharp);
  CHECK(sharp.remainder == Q(3, 20));
  CHECK(sharp.slack == 0);
  const auto paper = improved_check(f, 2, RemainderConstant::paper);
  CHECK(paper.remainder == Q(9, 112));
  CHECK(paper.slack > 0);

  for (double w : {0.1, 0.4, 0.7}) {
    const auto k = kernel_poly<Cd>(Q(5, 2), std::polar(w, 1.0), 120);
    CHECK(improved_check(k, 3, RemainderConstant::sharp).remainder < 1e-10);
  }

  gen::Rng g(44);
  for (int t = 0; t < 30; ++t) {
    auto h = gen::poly<Q>(g, Q(g.uniform_int(4, 7), 2), 5);
    if (h.degree() < 2) continue;
    CHECK(improved_check(h, g.uniform_int(2, 3), RemainderConstant::sharp).remainder > 0);
  }
}

TEST_CASE("ode solutions are kernels") {
  const auto f = ode_solve<Q>(2, 1, 5);
  for (int m = 0; m <= 5; ++m) CHECK(f.coeffs[m] == Q(m + 1) / Q(1 << m));
  CHECK(ode_solve<Q>(Q(7, 2), 0, 4).coeffs == make_poly<Q>(1, {1, 0, 0, 0, 0}).coeffs);
  CHECK_THROWS_AS(ode_solve<Q>(3, 3, 4), OutsideBergman);
  const GaussianRational c{Q(1, 2), Q(-2, 3)};
  const Q nu(9, 4);
  const auto s = ode_solve<GaussianRational>(nu, c, 8);
  const auto k = kernel_poly<GaussianRational>(nu, ScalarTraits<GaussianRational>::conj(c) / nu, 8);
  CHECK(s.coeffs == k.coeffs);
}

TEST_CASE("matrix coefficient integrals") {
  CHECK(matrix_coeff_lp(make_poly<Cd>(2, {1.0}), 1) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(matrix_coeff_lp(make_poly<Cd>(2, {1.0, 1.0}), 2) == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(matrix_coeff_lp(make_poly<Cd>(2, {0.0, 1.0}), 2) ==
        doctest::Approx(0.1 / 3).epsilon(1e-13));
  CHECK_THROWS_AS(matrix_coeff_lp(make_poly<Cd>(Q(1, 2), {1.0}), 1), NonIntegrable);
}

TEST_CASE("evaluation functional profile") {
  const auto pts = eval_functional_profile(2, {0.0, 0.5, 0.9, 0.99});
  CHECK(pts[0].norm_series == 1.0);
  CHECK(pts[2].norm_series == doctest::Approx(1 / 0.19).epsilon(1e-12));
  for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].norm_series > pts[i - 1].norm_series);
  CHECK_THROWS(eval_functional_profile(2, {1.0}));
}

TEST_CASE("analytic gradient matches finite differences") {
  gen::Rng g(77);
  for (int t = 0; t < 20; ++t) {
    const Q nu = Q(g.uniform_int(4, 7), 2);
    const int n = g.uniform_int(2, 3);
    auto f = gen::unit_poly(g, nu, 6);
    if (f.degree() < 1) continue;
    const Eigen::VectorXcd grad = wehrl_gradient(f, n);
    const Eigen::VectorXd u = monomial_weights<double>(nu, f.degree());
    Eigen::VectorXcd dir(f.coeffs.size());
    for (auto& x : dir) x = {g.normal(), g.normal()};
    double analytic = 0.0;
    for (Eigen::Index j = 0; j < dir.size(); ++j) analytic += (std::conj(grad[j]) * dir[j]).real() * u[j];
    const double h = 1e-5;
    auto shifted = [&](double s) {
      auto x = f;
      x.coeffs += s * dir;
      return wehrl_objective(x, n);
    };
    const double numeric = (shifted(h) - shifted(-h)) / (2 * h);
    CHECK(std::abs(numeric - analytic) <= 1e-6 * std::max(1.0, std::abs(analytic)));
  }
}

TEST_CASE("maximizer search") {
  MaximizeOptions opt;
  opt.start = Eigen::VectorXcd::Zero(13);
  opt.start[0] = 1.0;
  const auto fixed = maximize_wehrl(opt);
  CHECK(fixed.iterations == 0);
  CHECK(fixed.objective == doctest::Approx(1.0));

  opt.start = Eigen::VectorXcd::Zero(13);
  opt.start[1] = 1.0;
  const auto saddle = maximize_wehrl(opt);
  CHECK(saddle.objective == doctest::Approx(0.4).epsilon(1e-12));

  opt.start[0] = 1e-3;  // off the saddle the ascent climbs monotonically
  const auto climb = maximize_wehrl(opt);
  CHECK(climb.monotone);
  CHECK(climb.history.front() == doctest::Approx(0.4).epsilon(1e-3));
  CHECK(climb.objective > 1 - 1e-6);

  MaximizeOptions rnd;
  rnd.seed = 5;
  const auto r = maximize_wehrl(rnd);
  CHECK(r.objective >= 1 - 1e-6);
  CHECK(r.kernel_distance < 1e-4);
  CHECK(r.monotone);
}
