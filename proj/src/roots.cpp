#include "wehrl/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace wehrl {
namespace {

Rational dot(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::vector<Rational> unit(int dim, int i, int sign_i, int j = -1, int sign_j = 0) {
  std::vector<Rational> v(dim, Rational(0));
  v[i] = sign_i;
  if (j >= 0) v[j] = sign_j;
  return v;
}

// C_n = sp(n): 2ε_i and ε_i + ε_j noncompact, ε_i - ε_j compact.
RootSystemPreset type_c(int n, std::string group) {
  RootSystemPreset rs{"C" + std::to_string(n), std::move(group), n, {}};
  for (int i = 0; i < n; ++i) rs.positive_roots.push_back({unit(n, i, 2), false});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      rs.positive_roots.push_back({unit(n, i, 1, j, 1), false});
      rs.positive_roots.push_back({unit(n, i, 1, j, -1), true});
    }
  return rs;
}

// su(p,q) inside A_{p+q-1}: ε_i - ε_j is compact iff i, j lie on the same side.
RootSystemPreset type_a(int p, int q, std::string group) {
  const int n = p + q;
  RootSystemPreset rs{"A" + std::to_string(n - 1), std::move(group), std::min(p, q), {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rs.positive_roots.push_back({unit(n, i, 1, j, -1), (i < p) == (j < p)});
  return rs;
}

bool is_root_or_zero(const RootSystemPreset& rs, const std::vector<Rational>& v) {
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return true;
  for (const auto& r : rs.positive_roots) {
    if (r.coords == v) return true;
    std::vector<Rational> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](const Rational& x) { return -x; });
    if (r.coords == neg) return true;
  }
  return false;
}

}  // namespace

std::vector<Rational> RootSystemPreset::rho() const {
  std::vector<Rational> out(positive_roots.front().coords.size(), Rational(0));
  for (const auto& r : positive_roots)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += r.coords[i] / 2;
  return out;
}

std::vector<RootEntry> RootSystemPreset::entries() const {
  const auto half_sum = rho();
  Rational longest = 0;
  for (const auto& r : positive_roots) longest = std::max(longest, dot(r.coords, r.coords));
  std::vector<RootEntry> out;
  for (const auto& r : positive_roots) {
    const Rational len2 = dot(r.coords, r.coords);
    const Rational rho_h = 2 * dot(half_sum, r.coords) / len2;
    // Λ(h_α) = -λ <γ₁,γ₁>/<α,α> on noncompact roots, 0 on compact ones.
    const Rational mult = r.compact ? Rational(0) : -longest / len2;
    out.push_back({mult, rho_h, len2 == longest, r.compact});
  }
  return out;
}

std::vector<int> RootSystemPreset::strongly_orthogonal() const {
  const auto half_sum = rho();
  std::vector<int> candidates;
  for (int i = 0; i < static_cast<int>(positive_roots.size()); ++i)
    if (!positive_roots[i].compact) candidates.push_back(i);
  std::vector<int> chosen;
  while (!candidates.empty()) {
    // Highest remaining root: largest pairing with ρ.
    const int top = *std::max_element(candidates.begin(), candidates.end(), [&](int x, int y) {
      return dot(half_sum, positive_roots[x].coords) < dot(half_sum, positive_roots[y].coords);
    });
    chosen.push_back(top);
    std::vector<int> keep;
    for (int c : candidates) {
      if (c == top) continue;
      const auto& u = positive_roots[top].coords;
      const auto& v = positive_roots[c].coords;
      std::vector<Rational> plus(u.size());
      std::vector<Rational> minus(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        plus[i] = u[i] + v[i];
        minus[i] = u[i] - v[i];
      }
      if (!is_root_or_zero(*this, plus) && !is_root_or_zero(*this, minus)) keep.push_back(c);
    }
    candidates = std::move(keep);
  }
  return chosen;
}

const std::vector<RootSystemPreset>& root_presets() {
  static const std::vector<RootSystemPreset> presets = {
      type_a(1, 1, "SU(1,1)"), type_a(2, 1, "SU(2,1)"), type_c(2, "Sp(2,R)"),
      type_a(2, 2, "SU(2,2)"), type_c(3, "Sp(3,R)"),
  };
  return presets;
}

const RootSystemPreset& root_preset(const std::string& name) {
  for (const auto& rs : root_presets())
    if (rs.label == name || rs.group == name) return rs;
  throw std::invalid_argument("no root-system preset '" + name + "'");
}

Rational hc_degree_root_product(const RootSystemPreset& rs, const Rational& lambda) {
  Rational prod = 1;
  for (const auto& e : rs.entries()) prod *= (e.lambda_multiple * lambda + e.rho_value) / e.rho_value;
  return boost::multiprecision::abs(prod);
}

}  // namespace wehrl
