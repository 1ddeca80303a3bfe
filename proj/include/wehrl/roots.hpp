// Low-rank positive root systems with their compact/noncompact split, enough to
// evaluate the Harish-Chandra root product for scalar weights.
#pragma once

#include <string>
#include <vector>

#include "wehrl/rational.hpp"

namespace wehrl {

struct PositiveRoot {
  std::vector<Rational> coords;  // in the ε-basis
  bool compact = false;
};

/// Per-root data derived from the preset.
struct RootEntry {
  Rational lambda_multiple;  // Λ(h_α) = lambda_multiple · λ  (0, -1 or -2)
  Rational rho_value;        // ρ(h_α)
  bool long_root;
  bool compact;
};

struct RootSystemPreset {
  std::string label;        // "A1", "A2", "C2", ...
  std::string group;        // "SU(1,1)", ...
  int real_rank;
  std::vector<PositiveRoot> positive_roots;

  std::vector<Rational> rho() const;
  std::vector<RootEntry> entries() const;
  /// Harish-Chandra's cascade of strongly orthogonal noncompact roots.
  std::vector<int> strongly_orthogonal() const;
};

const std::vector<RootSystemPreset>& root_presets();
/// By label ("C2") or group ("Sp(2,R)"); throws std::invalid_argument.
const RootSystemPreset& root_preset(const std::string& name);

/// |∏_{α∈Δ⁺} (Λ(h_α) + ρ(h_α)) / ρ(h_α)| for the scalar weight λ.
Rational hc_degree_root_product(const RootSystemPreset& rs, const Rational& lambda);

}  // namespace wehrl
