// Projections Q_k^{μ,ν}: H_μ ⊗ H_ν → H_{μ+ν+2k} given by the bidifferential
// formula
//
//   Q_k F(ξ) = C Σ_j (-1)^j binom(k,j) / ((μ)_j (ν)_{k-j}) ∂_z^j ∂_w^{k-j} F |_{z=w=ξ}.
//
// C is irrational in general, so results carry C² separately and the
// polynomial part stays exact.
#pragma once

#include <string>
#include <vector>

#include "wehrl/disc/poly.hpp"

namespace wehrl {

enum class ConstantConvention { paper_plus_one, corrected_minus_one };

std::string to_string(ConstantConvention c);
ConstantConvention convention_from_string(const std::string& s);

struct ProjectionSpec {
  Rational mu;
  Rational nu;
  int k = 0;
  ConstantConvention convention = ConstantConvention::corrected_minus_one;
};

/// C^{-2} = k! (μ+ν+k±1)_k / ((μ)_k (ν)_k); +1 under `paper_plus_one`, -1 under `corrected_minus_one`.
Rational projection_c_inverse_squared(const ProjectionSpec& spec);
inline Rational projection_c_squared(const ProjectionSpec& spec) {
  return Rational(1) / projection_c_inverse_squared(spec);
}

template <typename Scalar>
struct Projection {
  PolyFun<Scalar> unscaled;  // Q_k F / C, at weight μ+ν+2k
  Rational c_squared;

  RealOf<Scalar> norm2() const {
    return norm2_exact(unscaled) * ScalarTraits<RealOf<Scalar>>::from_rational(c_squared);
  }
};

template <typename Scalar>
Projection<Scalar> qk_project(const Poly2<Scalar>& F, const ProjectionSpec& spec) {
  using T = ScalarTraits<Scalar>;
  const int k = spec.k;
  const Rational weight = spec.mu + spec.nu + 2 * k;
  // coefficient of ∂_z^j ∂_w^{k-j}
  std::vector<Rational> coef(k + 1);
  for (int j = 0; j <= k; ++j) {
    coef[j] = binomial(k, j) / (pochhammer(spec.mu, j) * pochhammer(spec.nu, k - j));
    if (j % 2 == 1) coef[j] = -coef[j];
  }
  const int out_degree = std::max<int>(0, static_cast<int>(F.c.rows() + F.c.cols()) - 2 - k);
  VectorX<Scalar> out = VectorX<Scalar>::Constant(out_degree + 1, Scalar(0));
  for (Eigen::Index a = 0; a < F.c.rows(); ++a)
    for (Eigen::Index b = 0; b < F.c.cols(); ++b) {
      if (F.c(a, b) == Scalar(0)) continue;
      if (a + b < k) continue;
      Rational s = 0;
      for (int j = 0; j <= k; ++j) {
        if (j > a || k - j > b) continue;
        // ∂^j z^a = a!/(a-j)! z^{a-j}
        s += coef[j] * factorial(static_cast<int>(a)) / factorial(static_cast<int>(a) - j) *
             factorial(static_cast<int>(b)) / factorial(static_cast<int>(b) - (k - j));
      }
      if (s != 0) out[a + b - k] += F.c(a, b) * T::from_rational(s);
    }
  return {PolyFun<Scalar>{weight, out}, projection_c_squared(spec)};
}

/// Per-k mass of F in the decomposition, k = 0..max_k.
template <typename Scalar>
std::vector<RealOf<Scalar>> projection_masses(const Poly2<Scalar>& F, ConstantConvention conv,
                                              int max_k) {
  std::vector<RealOf<Scalar>> out;
  for (int k = 0; k <= max_k; ++k) out.push_back(qk_project(F, {F.mu, F.nu, k, conv}).norm2());
  return out;
}

/// Completeness: Σ_k ‖Q_k(f⊗g)‖² against ‖f‖²‖g‖².
template <typename Scalar>
struct CompletenessResult {
  std::vector<RealOf<Scalar>> masses;
  RealOf<Scalar> total;
  RealOf<Scalar> expected;
};

template <typename Scalar>
CompletenessResult<Scalar> completeness(const PolyFun<Scalar>& f, const PolyFun<Scalar>& g,
                                        ConstantConvention conv, int max_k = -1) {
  if (max_k < 0) max_k = f.degree() + g.degree();
  CompletenessResult<Scalar> r;
  r.masses = projection_masses(tensor(f, g), conv, max_k);
  r.total = RealOf<Scalar>(0);
  for (const auto& m : r.masses) r.total += m;
  r.expected = norm2_exact(f) * norm2_exact(g);
  return r;
}

/// Norms of the n-1 copies of the Q₁-component of f^{⊗n}: for j = 2..n the
/// copy Q_1^{(j-1)ν,ν}(f^{j-1} ⊗ f) · f^{n-j} in H_{nν+2}.
template <typename Scalar>
std::vector<RealOf<Scalar>> q1_tensor_power_masses(const PolyFun<Scalar>& f, int n) {
  std::vector<RealOf<Scalar>> out;
  for (int j = 2; j <= n; ++j) {
    const PolyFun<Scalar> head = power(f, j - 1);
    const auto q1 = qk_project(tensor(head, f), {head.nu, f.nu, 1,
                                                 ConstantConvention::corrected_minus_one});
    const PolyFun<Scalar> copy = product(q1.unscaled, power(f, n - j));
    out.push_back(norm2_exact(copy) *
                  ScalarTraits<RealOf<Scalar>>::from_rational(q1.c_squared));
  }
  return out;
}

}  // namespace wehrl
