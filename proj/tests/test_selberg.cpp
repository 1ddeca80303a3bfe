#include <doctest.h>

#include <cmath>

#include "gen.hpp"
#include "wehrl/selberg.hpp"

using namespace wehrl;

TEST_CASE("selberg closed form") {
  const auto s1 = selberg_closed({2, 1, 0, 0});
  REQUIRE(s1.exact.has_value());
  CHECK(s1.exact->coeff == Rational(1, 3));
  CHECK(s1.exact->sqrt_pi_power == 0);
  CHECK(selberg_closed({1, 0, 0, 2}).exact->coeff == Rational(1, 3));
  CHECK_THROWS_AS(selberg_closed({1, 0, 0, -1}), NonIntegrable);
}

TEST_CASE("a = 0 factorizes into Beta integrals") {
  gen::Rng g(2);
  for (int t = 0; t < 30; ++t) {
    const int r = g.uniform_int(1, 4);
    const Rational b(g.uniform_int(0, 6), g.uniform_int(1, 2));
    const Rational gm(g.uniform_int(0, 6), g.uniform_int(1, 2));
    const auto sel = selberg_closed({r, 0, b, gm});
    GammaRatio beta;
    beta.numer = {b + 1, gm + 1};
    beta.denom = {b + gm + 2};
    const auto one = reduce_exact(beta);
    REQUIRE(sel.exact.has_value());
    REQUIRE(one.has_value());
    HalfPiScaled expected{1, 0};
    for (int j = 0; j < r; ++j) expected = expected * *one;
    CHECK(*sel.exact == expected);
  }
}

TEST_CASE("laguerre constant") {
  CHECK(laguerre_constant_C(unit_disc()).exact->to_pi_scaled() == PiScaledRational(1, 1));
  CHECK(laguerre_constant_C(*find_preset("su21")).exact->to_pi_scaled() == PiScaledRational(1, 2));
  CHECK(laguerre_constant_C(*find_preset("sp2")).exact->to_pi_scaled() == PiScaledRational(1, 3));
}

TEST_CASE("selberg numerics") {
  SelbergOptions gj{SelbergMethod::gauss_jacobi, 8};
  CHECK(selberg_numeric({1, 0, 0, 2}, gj).value == doctest::Approx(1.0 / 3).epsilon(1e-15));
  SelbergOptions gj16{SelbergMethod::gauss_jacobi, 16};
  const SelbergSpec even{2, 2, 0, 1};
  CHECK(std::abs(selberg_numeric(even, gj16).value / selberg_closed(even).value() - 1) < 1e-12);
  const SelbergSpec odd{2, 1, 0, 0};
  SelbergOptions simplex{SelbergMethod::ordered_simplex};
  CHECK(std::abs(selberg_numeric(odd, simplex).value - 1.0 / 3) < 1e-12);
  CHECK_THROWS_AS(selberg_numeric({2, 1, 0, 0}, {SelbergMethod::gauss_jacobi, 8}), MethodUnsupported);
}

TEST_CASE("monte carlo: determinism, coverage, error scaling") {
  const SelbergSpec odd{2, 1, 0, 0};
  SelbergOptions mc{SelbergMethod::monte_carlo, 200000, 7};
  const auto a = selberg_numeric(odd, mc), b = selberg_numeric(odd, mc);
  CHECK(a.value == b.value);
  CHECK(a.error_is_stderr);
  CHECK(std::abs(a.value - 1.0 / 3) < 4 * a.error);

  double ratio_sum = 0.0;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto small = selberg_numeric(odd, {SelbergMethod::monte_carlo, 20000, seed});
    const auto big = selberg_numeric(odd, {SelbergMethod::monte_carlo, 40000, seed});
    ratio_sum += small.error / big.error;
  }
  const double mean_ratio = ratio_sum / 8;
  CHECK(mean_ratio > 1.3);
  CHECK(mean_ratio < 1.5);

  SelbergOptions permuted = mc;
  permuted.permute_coordinates = true;
  const auto c = selberg_numeric(odd, permuted);
  CHECK(std::abs(c.value - a.value) < 4 * std::hypot(a.error, c.error));
}

TEST_CASE("degree integral identity") {
  const auto r = verify_degree_integral(unit_disc(), 4);
  CHECK(r.passed());
  CHECK(verify_degree_integral(*find_preset("su21"), 4).passed());
  CHECK(verify_degree_integral(*find_preset("sp2"), 4).passed());
  CHECK_THROWS_AS(verify_degree_integral(unit_disc(), 1), NotAdmissible);
}
