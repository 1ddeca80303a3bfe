#include <doctest.h>

#include "gen.hpp"
#include "wehrl/domain.hpp"
#include "wehrl/gamma_product.hpp"
#include "wehrl/pi_scaled.hpp"
#include "wehrl/quadrature.hpp"
#include "wehrl/rational.hpp"
#include "wehrl/roots.hpp"

using namespace wehrl;

TEST_CASE("pochhammer and friends") {
  CHECK(pochhammer(Rational(3, 2), 2) == Rational(15, 4));
  CHECK(pochhammer(Rational(7, 3), 0) == 1);
  CHECK(pochhammer(Rational(1), 5) == 120);
  CHECK(factorial(0) == 1);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(4, 5) == 0);
}

TEST_CASE("pochhammer recurrence") {
  gen::Rng g(11);
  for (int t = 0; t < 100; ++t) {
    const Rational x = gen::rational(g);
    const int k = g.uniform_int(0, 8);
    CHECK(pochhammer(x, k + 1) == pochhammer(x, k) * (x + k));
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(to_string(Rational(-7, 2)) == "-7/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("pi-scaled arithmetic") {
  const PiScaledRational a(3, -1), b(Rational(1, 2), -1);
  CHECK((a + b) == PiScaledRational(Rational(7, 2), -1));
  CHECK((a * b) == PiScaledRational(Rational(3, 2), -2));
  CHECK((a / b) == PiScaledRational(6, 0));
  CHECK(a.inverse() == PiScaledRational(Rational(1, 3), 1));
  CHECK(a.pow(3) == PiScaledRational(27, -3));
  CHECK_THROWS_AS(a + PiScaledRational(1, 2), PiPowerMismatch);
  CHECK(a.to_string() == "3*pi^-1");
  CHECK(a.to_double() == doctest::Approx(3 / 3.141592653589793));
}

TEST_CASE("gamma ladder") {
  CHECK(gamma_on_ladder(Rational(4))->coeff == 6);
  const auto half = gamma_on_ladder(Rational(1, 2));
  CHECK(half->coeff == 1);
  CHECK(half->sqrt_pi_power == 1);
  CHECK(gamma_on_ladder(Rational(5, 2))->coeff == Rational(3, 4));
  CHECK(gamma_on_ladder(Rational(-1, 2))->coeff == -2);
  CHECK_FALSE(gamma_on_ladder(Rational(1, 3)).has_value());
  CHECK(gamma_shift_ratio(Rational(7, 2), Rational(3, 2)) == Rational(15, 4));
}

TEST_CASE("gamma ratio exact vs high precision") {
  gen::Rng g(5);
  for (int t = 0; t < 40; ++t) {
    GammaRatio r;
    const Rational x = Rational(g.uniform_int(1, 12), 2);
    const Rational y = Rational(g.uniform_int(1, 12), 2);
    r.numer = {x, Rational(g.uniform_int(1, 9), 3)};
    r.denom = {y, r.numer[1] + g.uniform_int(0, 3)};
    const auto exact = reduce_exact(r);
    REQUIRE(exact.has_value());
    CHECK(exact->to_double() ==
          doctest::Approx(evaluate_high_precision(r).convert_to<double>()).epsilon(1e-13));
  }
}

TEST_CASE("gauss rules") {
  const auto lg = gauss_legendre(6);
  CHECK(lg.integrate([](double x) { return x * x; }) == doctest::Approx(2.0 / 3));
  CHECK(lg.integrate([](double x) { return std::pow(x, 10); }) == doctest::Approx(2.0 / 11));
  // ∫₀¹ x^2 (1-x)^{1/2} dx = B(3, 3/2) = 16/105
  const auto gj = gauss_jacobi01(8, 0.0, 0.5);
  CHECK(gj.integrate([](double x) { return x * x; }) == doctest::Approx(16.0 / 105).epsilon(1e-14));
  CHECK(gj.weights.sum() == doctest::Approx(2.0 / 3).epsilon(1e-14));
}

TEST_CASE("domain invariants") {
  CHECK(derived_invariants({"", 1, 0, 0}) == DerivedInvariants{2, 1, 1});
  CHECK(derived_invariants({"", 3, 1, 0}) == DerivedInvariants{4, 6, 6});
  CHECK(derived_invariants({"", 1, 2, 1}) == DerivedInvariants{3, 2, 1});
  CHECK_FALSE(hc_admissible(unit_disc(), Rational(1)));  // boundary λ = p - 1
  CHECK(hc_admissible(unit_disc(), Rational(2)));
  CHECK(hc_admissible(unit_disc(), Rational(5, 2)));
  CHECK(hc_admissible(*find_preset("sp3"), Rational(4)));
  CHECK(*find_preset("so23") == *find_preset("sp2"));
  for (const auto& p : domain_presets()) {
    INFO(p.key);
    CHECK(p.params.dimension() == p.classical_dimension);
    CHECK(p.params.dimension() == p.params.n1() + p.params.r * p.params.b);
  }
  CHECK(parse_domain("2,1,0") == *find_preset("sp2"));
  CHECK_THROWS(parse_domain("nonsense"));
}

TEST_CASE("dimension is monotone in r, a, b") {
  for (int r = 1; r <= 4; ++r)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        const DomainParams d{"", r, a, b};
        CHECK(DomainParams{"", r + 1, a, b}.dimension() > d.dimension());
        CHECK(DomainParams{"", r, a + 1, b}.dimension() >= d.dimension());
        CHECK(DomainParams{"", r, a, b + 1}.dimension() > d.dimension());
      }
}

TEST_CASE("root presets") {
  for (const auto& rs : root_presets()) {
    INFO(rs.label);
    CHECK(static_cast<int>(rs.strongly_orthogonal().size()) == rs.real_rank);
  }
  CHECK(root_preset("C2").positive_roots.size() == 4);
  CHECK(root_preset("A2").positive_roots.size() == 3);
  CHECK(hc_degree_root_product(root_preset("A1"), 4) == 3);
  CHECK(hc_degree_root_product(root_preset("C2"), 4) == 5);
  CHECK(hc_degree_root_product(root_preset("A2"), 4) == 3);
}
