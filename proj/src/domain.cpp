#include "wehrl/domain.hpp"

#include <sstream>
#include <stdexcept>

namespace wehrl {

void validate(const DomainParams& d) {
  if (d.r < 1 || d.a < 0 || d.b < 0)
    throw std::invalid_argument("domain parameters need r >= 1, a >= 0, b >= 0");
}

DerivedInvariants derived_invariants(const DomainParams& d) {
  validate(d);
  return {d.genus(), d.dimension(), d.n1()};
}

bool hc_admissible(const DomainParams& d, const WeightSpec& w) {
  return w.lambda > Rational(d.genus() - 1);
}

const std::vector<DomainPreset>& domain_presets() {
  // (r, a, b): SU(p,q) -> (p, 2, q-p); Sp(r,R) -> (r, 1, 0); SO(2,n) -> (2, n-2, 0);
  // SO*(2n) -> (floor(n/2), 4, 0 or 2); E6 -> (2, 6, 4); E7 -> (3, 8, 0).
  static const std::vector<DomainPreset> presets = {
      {{"SU(1,1)", 1, 0, 0}, "disc", 1},
      {{"SU(2,1)", 1, 2, 1}, "su21", 2},
      {{"SU(3,1)", 1, 2, 2}, "su31", 3},
      {{"SU(2,2)", 2, 2, 0}, "su22", 4},
      {{"SU(2,3)", 2, 2, 1}, "su23", 6},
      {{"SU(3,3)", 3, 2, 0}, "su33", 9},
      {{"Sp(2,R)", 2, 1, 0}, "sp2", 3},
      {{"Sp(3,R)", 3, 1, 0}, "sp3", 6},
      {{"Sp(4,R)", 4, 1, 0}, "sp4", 10},
      {{"SO(2,3)", 2, 1, 0}, "so23", 3},
      {{"SO(2,4)", 2, 2, 0}, "so24", 4},
      {{"SO(2,5)", 2, 3, 0}, "so25", 5},
      {{"SO(2,7)", 2, 5, 0}, "so27", 7},
      {{"SO*(8)", 2, 4, 0}, "sostar8", 6},
      {{"SO*(10)", 2, 4, 2}, "sostar10", 10},
      {{"E6", 2, 6, 4}, "e6", 16},
      {{"E7", 3, 8, 0}, "e7", 27},
  };
  return presets;
}

std::optional<DomainParams> find_preset(const std::string& name) {
  for (const auto& p : domain_presets())
    if (p.key == name || p.params.family_label == name) return p.params;
  return std::nullopt;
}

DomainParams parse_domain(const std::string& text) {
  if (auto p = find_preset(text)) return *p;
  std::istringstream in(text);
  DomainParams d;
  char c1 = 0;
  char c2 = 0;
  if (!(in >> d.r >> c1 >> d.a >> c2 >> d.b) || c1 != ',' || c2 != ',' || !in.eof())
    throw std::invalid_argument("unknown domain '" + text + "' (use a preset or r,a,b)");
  validate(d);
  d.family_label = "custom";
  return d;
}

}  // namespace wehrl
