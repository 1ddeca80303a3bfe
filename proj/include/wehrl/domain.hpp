// Irreducible bounded symmetric domains by structure constants (r, a, b).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wehrl/rational.hpp"

namespace wehrl {

struct DomainParams {
  std::string family_label = "custom";
  int r = 1;  // real rank
  int a = 0;  // root multiplicities
  int b = 0;

  // Derived; never stored.
  int genus() const { return (r - 1) * a + b + 2; }
  int n1() const { return r + a * r * (r - 1) / 2; }
  int dimension() const { return n1() + r * b; }

  friend bool operator==(const DomainParams& x, const DomainParams& y) {
    return x.r == y.r && x.a == y.a && x.b == y.b;
  }
};

struct DerivedInvariants {
  int p;
  int N;
  int n1;
  friend bool operator==(const DerivedInvariants&, const DerivedInvariants&) = default;
};

/// Throws std::invalid_argument unless r >= 1, a >= 0, b >= 0.
void validate(const DomainParams& d);

DerivedInvariants derived_invariants(const DomainParams& d);

/// Scalar weight λ (Λ(h_j) = -λ).
struct WeightSpec {
  Rational lambda;
};

/// λ > p - 1.
bool hc_admissible(const DomainParams& d, const WeightSpec& w);
inline bool hc_admissible(const DomainParams& d, const Rational& lambda) {
  return hc_admissible(d, WeightSpec{lambda});
}

struct DomainPreset {
  DomainParams params;
  std::string key;             // short CLI name, e.g. "sp2"
  int classical_dimension;     // complex dimension from the classification table
};

const std::vector<DomainPreset>& domain_presets();

/// Looks up by key ("disc", "sp2", ...) or family label ("Sp(2,R)").
std::optional<DomainParams> find_preset(const std::string& name);

/// Accepts a preset name or an "r,a,b" triple.
DomainParams parse_domain(const std::string& text);

inline DomainParams unit_disc() { return {"SU(1,1)", 1, 0, 0}; }

}  // namespace wehrl
