#include <doctest.h>

#include "gen.hpp"
#include "wehrl/degrees.hpp"

using namespace wehrl;

namespace {
DomainParams preset(const char* key) { return *find_preset(key); }
}  // namespace

TEST_CASE("scalar formal degrees") {
  CHECK(scalar_formal_degree(unit_disc(), 4) == PiScaledRational(3, -1));
  CHECK(scalar_formal_degree(preset("sp2"), 4) == PiScaledRational(15, -3));
  CHECK(so_odd_formal_degree(2, 4) == PiScaledRational(15, -3));
  CHECK(scalar_formal_degree(preset("su21"), 4) == PiScaledRational(6, -2));
  CHECK_THROWS_AS(scalar_formal_degree(unit_disc(), 1), NotAdmissible);
}

TEST_CASE("c_G") {
  CHECK(c_G(unit_disc()) == PiScaledRational(1, -1));
  CHECK(c_G(preset("su21")) == PiScaledRational(2, -2));
  CHECK(c_G(preset("sp2")) == PiScaledRational(3, -3));
  CHECK(c_G(preset("so23")) == PiScaledRational(3, -3));
  CHECK(c_G_orthogonal_odd(2) == PiScaledRational(3, -3));
  CHECK(c_G_symplectic(2, CgFormula::statement) == PiScaledRational(6, -3));
}

TEST_CASE("symplectic c_G agrees with the root-product ratio") {
  for (int r : {2, 3}) {
    const DomainParams d{"", r, 1, 0};
    const auto& rs = root_preset(r == 2 ? "C2" : "C3");
    for (const Rational lambda : {Rational(r + 1), Rational(2 * r + 3, 2), Rational(9)}) {
      const PiScaledRational ratio =
          scalar_formal_degree(d, lambda) / PiScaledRational(hc_degree_root_product(rs, lambda));
      CHECK(ratio == c_G_symplectic(r));
    }
  }
}

TEST_CASE("d = c_G d^H across presets") {
  gen::Rng g(3);
  for (const auto& p : domain_presets()) {
    INFO(p.key);
    const DomainParams& d = p.params;
    for (int t = 0; t < 6; ++t) {
      const Rational lambda = Rational(d.genus() - 1) + Rational(g.uniform_int(1, 40), g.uniform_int(1, 4));
      PiScaledRational deg;
      try {
        deg = scalar_formal_degree(d, lambda);
      } catch (const NonTelescoping&) {
        continue;  // non-ladder λ on half-integer families
      }
      CHECK(deg == c_G(d) * PiScaledRational(hc_degree_scalar(d, lambda)));
    }
  }
}

TEST_CASE("hc degrees") {
  CHECK(hc_degree_scalar(unit_disc(), 4) == 3);
  CHECK(hc_degree_scalar(preset("su21"), 4) == 3);
  CHECK(hc_degree_scalar(preset("sp2"), 4) == 5);
  gen::Rng g(8);
  for (int t = 0; t < 30; ++t) {
    const Rational lambda = Rational(1) + Rational(g.uniform_int(1, 50), g.uniform_int(1, 7));
    CHECK(hc_degree_scalar(unit_disc(), lambda) == lambda - 1);
    CHECK(hc_degree_root_product(root_preset("A1"), lambda) == lambda - 1);
  }
}

TEST_CASE("wehrl constants") {
  CHECK(wehrl_constant(unit_disc(), 2, 2) == PiScaledRational(Rational(1, 3), -1));
  CHECK(wehrl_constant(unit_disc(), 2, 3) == PiScaledRational(Rational(1, 5), -2));
  CHECK(wehrl_constant(preset("su21"), 4, 2) == PiScaledRational(Rational(6, 7), -2));
  CHECK(wehrl_constant(preset("sp2"), 4, 1) == PiScaledRational(1, 0));
  for (const char* key : {"su22", "sp3", "so25", "e6"}) {
    const DomainParams d = preset(key);
    const PiScaledRational c = wehrl_constant(d, d.genus() + 1, 3);
    CHECK(c.pi_power() == -2 * d.dimension());
  }
}

TEST_CASE("partial isometry constants") {
  CHECK(partial_isometry_constant(unit_disc(), 2, 2) == PiScaledRational(Rational(1, 3), -1));
  CHECK(partial_isometry_constant(unit_disc(), 3, 3) == PiScaledRational(Rational(4, 5), -1));
  gen::Rng g(1);
  for (int t = 0; t < 20; ++t) {
    const Rational x = Rational(g.uniform_int(5, 30), 2), y = Rational(g.uniform_int(5, 30), 2);
    CHECK(partial_isometry_constant(preset("sp2"), x, y) ==
          partial_isometry_constant(preset("sp2"), y, x));
  }
}
