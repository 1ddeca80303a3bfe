// SU(2): irreducibles V_m realized as homogeneous polynomials of degree m in
// (x, y), Cartan components of tensor powers, the Casimir tensor identity and
// Haar quadrature of the compact Wehrl integral.
//
// Monomial basis x^{m-i} y^i (i = 0..m, weight m - 2i) with the invariant Gram
// weights i!(m-i)!/m!, so ‖x^m‖ = 1 and e_i = sqrt(binom(m,i)) x^{m-i} y^i is
// the orthonormal weight basis. Everything exact lives in the monomial basis,
// where the sl₂ operators have integer entries.
#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "wehrl/rational.hpp"
#include "wehrl/report.hpp"

namespace wehrl {

struct Su2Irrep {
  int m = 0;

  int dim() const { return m + 1; }

  template <typename Real>
  VectorX<Real> gram() const {
    VectorX<Real> g(m + 1);
    for (int i = 0; i <= m; ++i) {
      if constexpr (std::is_same_v<Real, Rational>)
        g[i] = Rational(1) / binomial(m, i);
      else
        g[i] = 1.0 / to_double(binomial(m, i));
    }
    return g;
  }

  /// F = y∂_x : x^{m-i} y^i -> (m-i) x^{m-i-1} y^{i+1}.
  template <typename Scalar>
  MatrixX<Scalar> lowering() const {
    MatrixX<Scalar> f = MatrixX<Scalar>::Constant(m + 1, m + 1, Scalar(0));
    for (int i = 0; i < m; ++i) f(i + 1, i) = Scalar(m - i);
    return f;
  }
  /// E = x∂_y.
  template <typename Scalar>
  MatrixX<Scalar> raising() const {
    MatrixX<Scalar> e = MatrixX<Scalar>::Constant(m + 1, m + 1, Scalar(0));
    for (int i = 1; i <= m; ++i) e(i - 1, i) = Scalar(i);
    return e;
  }
  /// H = x∂_x - y∂_y.
  template <typename Scalar>
  MatrixX<Scalar> cartan() const {
    MatrixX<Scalar> h = MatrixX<Scalar>::Constant(m + 1, m + 1, Scalar(0));
    for (int i = 0; i <= m; ++i) h(i, i) = Scalar(m - 2 * i);
    return h;
  }

  /// Squared matrix entries |<e_{i+1}, F e_i>|² = (i+1)(m-i) in the orthonormal basis.
  std::vector<Rational> lowering_squared_entries() const {
    std::vector<Rational> out;
    for (int i = 0; i < m; ++i) out.emplace_back((i + 1) * (m - i));
    return out;
  }
};

/// Element of V_m^{⊗n}; index = Σ_k i_k (m+1)^{n-1-k}, first factor most significant.
template <typename Scalar>
struct TensorState {
  int m = 0;
  int n = 0;
  VectorX<Scalar> coeffs;

  Eigen::Index size() const { return coeffs.size(); }
};

template <typename Real>
VectorX<Real> tensor_gram(int m, int n) {
  const VectorX<Real> g = Su2Irrep{m}.gram<Real>();
  VectorX<Real> out = VectorX<Real>::Constant(1, Real(1));
  for (int k = 0; k < n; ++k) {
    VectorX<Real> next(out.size() * g.size());
    for (Eigen::Index a = 0; a < out.size(); ++a)
      for (Eigen::Index b = 0; b < g.size(); ++b) next[a * g.size() + b] = out[a] * g[b];
    out = std::move(next);
  }
  return out;
}

/// <a, b> in the product Gram inner product (linear in a).
template <typename Scalar>
Scalar tensor_inner(const VectorX<Scalar>& a, const VectorX<Scalar>& b,
                    const VectorX<RealOf<Scalar>>& gram) {
  using T = ScalarTraits<Scalar>;
  Scalar s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    s += a[i] * T::conj(b[i]) * T::from_real(gram[i]);
  return s;
}

template <typename Scalar>
RealOf<Scalar> tensor_norm2(const TensorState<Scalar>& t) {
  using T = ScalarTraits<Scalar>;
  const auto g = tensor_gram<RealOf<Scalar>>(t.m, t.n);
  RealOf<Scalar> s(0);
  for (Eigen::Index i = 0; i < t.coeffs.size(); ++i) s += T::abs2(t.coeffs[i]) * g[i];
  return s;
}

template <typename Scalar>
TensorState<Scalar> tensor_product(const TensorState<Scalar>& a, const TensorState<Scalar>& b) {
  TensorState<Scalar> out{a.m, a.n + b.n, VectorX<Scalar>(a.size() * b.size())};
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = 0; j < b.size(); ++j)
      out.coeffs[i * b.size() + j] = a.coeffs[i] * b.coeffs[j];
  return out;
}

template <typename Scalar>
TensorState<Scalar> as_state(int m, const VectorX<Scalar>& v) {
  return {m, 1, v};
}

template <typename Scalar>
TensorState<Scalar> tensor_power(int m, const VectorX<Scalar>& v, int n) {
  TensorState<Scalar> acc{m, 0, VectorX<Scalar>::Constant(1, Scalar(1))};
  for (int k = 0; k < n; ++k) acc = tensor_product(acc, as_state(m, v));
  return acc;
}

/// Applies the single-factor matrix A to every factor and sums (a Lie
/// algebra element acting on the tensor product).
template <typename Scalar>
VectorX<Scalar> apply_total(const MatrixX<Scalar>& a, const VectorX<Scalar>& x, int m, int n) {
  const Eigen::Index d = m + 1;
  VectorX<Scalar> out = VectorX<Scalar>::Constant(x.size(), Scalar(0));
  Eigen::Index stride = 1;
  for (int k = n - 1; k >= 0; --k, stride *= d) {
    for (Eigen::Index idx = 0; idx < x.size(); ++idx) {
      if (x[idx] == Scalar(0)) continue;
      const Eigen::Index digit = (idx / stride) % d;
      const Eigen::Index base = idx - digit * stride;
      for (Eigen::Index r = 0; r < d; ++r) {
        if (a(r, digit) == Scalar(0)) continue;
        out[base + r * stride] += a(r, digit) * x[idx];
      }
    }
  }
  return out;
}

/// Orthogonal projector onto the Cartan component V_{nm} ⊆ V_m^{⊗n}, held as
/// the weight basis u_j = F_tot^j (x^m)^{⊗n}, j = 0..nm (mutually orthogonal:
/// distinct weights).
template <typename Scalar>
struct CartanProjection {
  int m = 0;
  int n = 0;
  std::vector<VectorX<Scalar>> basis;
  std::vector<RealOf<Scalar>> basis_norm2;
  VectorX<RealOf<Scalar>> gram;

  int rank() const { return static_cast<int>(basis.size()); }

  /// ‖P t‖² = Σ_j |<t, u_j>|² / <u_j, u_j>.
  RealOf<Scalar> mass(const VectorX<Scalar>& t) const {
    using T = ScalarTraits<Scalar>;
    RealOf<Scalar> s(0);
    for (std::size_t j = 0; j < basis.size(); ++j)
      s += T::abs2(tensor_inner(t, basis[j], gram)) / basis_norm2[j];
    return s;
  }

  VectorX<Scalar> apply(const VectorX<Scalar>& t) const {
    using T = ScalarTraits<Scalar>;
    VectorX<Scalar> out = VectorX<Scalar>::Constant(t.size(), Scalar(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Scalar c = tensor_inner(t, basis[j], gram) / T::from_real(basis_norm2[j]);
      out += basis[j] * c;
    }
    return out;
  }

  /// Dense projector P = Σ_j u_j u_j^* G / <u_j, u_j>.
  MatrixX<Scalar> matrix() const {
    using T = ScalarTraits<Scalar>;
    const Eigen::Index d = gram.size();
    MatrixX<Scalar> p = MatrixX<Scalar>::Constant(d, d, Scalar(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Scalar inv = T::from_real(RealOf<Scalar>(1) / basis_norm2[j]);
      for (Eigen::Index a = 0; a < d; ++a) {
        if (basis[j][a] == Scalar(0)) continue;
        for (Eigen::Index b = 0; b < d; ++b) {
          if (basis[j][b] == Scalar(0)) continue;
          p(a, b) += basis[j][a] * T::conj(basis[j][b]) * T::from_real(gram[b]) * inv;
        }
      }
    }
    return p;
  }
};

template <typename Scalar>
CartanProjection<Scalar> cartan_projection(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("cartan_projection needs n >= 1, m >= 0");
  using T = ScalarTraits<Scalar>;
  CartanProjection<Scalar> p{m, n, {}, {}, tensor_gram<RealOf<Scalar>>(m, n)};
  const MatrixX<Scalar> f = Su2Irrep{m}.lowering<Scalar>();
  VectorX<Scalar> u = VectorX<Scalar>::Constant(p.gram.size(), Scalar(0));
  u[0] = Scalar(1);  // (x^m)^{⊗n}
  for (int j = 0; j <= n * m; ++j) {
    p.basis.push_back(u);
    p.basis_norm2.push_back(T::real(tensor_inner(u, u, p.gram)));
    u = apply_total(f, u, m, n);
  }
  return p;
}

/// ‖P_{nm}(v^{⊗n})‖² / ‖v‖^{2n} for v given in the monomial basis.
template <typename Scalar>
RealOf<Scalar> cartan_fraction(const VectorX<Scalar>& v, int m, int n) {
  const auto p = cartan_projection<Scalar>(n, m);
  const auto t = tensor_power(m, v, n);
  RealOf<Scalar> vn2 = tensor_norm2(as_state(m, v));
  RealOf<Scalar> denom(1);
  for (int k = 0; k < n; ++k) denom *= vn2;
  return p.mass(t.coeffs) / denom;
}

/// The n > 2 reduction: ‖P(v^{⊗n})‖² and ‖P(v_{2m} ⊗ v^{⊗(n-2)})‖², where
/// v_{2m} is the V_{2m}-component of v ⊗ v.
template <typename Scalar>
std::pair<RealOf<Scalar>, RealOf<Scalar>> reduction_pair(const VectorX<Scalar>& v, int m, int n) {
  if (n < 2) throw std::invalid_argument("reduction needs n >= 2");
  const auto p2 = cartan_projection<Scalar>(2, m);
  const auto pn = cartan_projection<Scalar>(n, m);
  const TensorState<Scalar> v2{m, 2, p2.apply(tensor_power(m, v, 2).coeffs)};
  const auto mixed = tensor_product(v2, tensor_power(m, v, n - 2));
  return {pn.mass(tensor_power(m, v, n).coeffs), pn.mass(mixed.coeffs)};
}

// ---------------------------------------------------------------------------
// Numeric side

/// Weight-basis coefficients -> monomial-basis coefficients (and back).
Eigen::VectorXcd weight_to_monomial(const Eigen::VectorXcd& c);
Eigen::VectorXcd monomial_to_weight(const Eigen::VectorXcd& p);
/// Exact conversion when every nonzero entry sits where binom(m, i) is a perfect square.
std::optional<VectorX<Rational>> weight_to_monomial_exact(const VectorX<Rational>& c);

/// SU(2) element [[a, b], [-b̄, ā]].
struct Su2Element {
  std::complex<double> a{1.0, 0.0};
  std::complex<double> b{0.0, 0.0};
};

Su2Element su2_from_euler(double alpha, double beta, double gamma);
Su2Element random_su2(std::uint64_t seed);
/// Gaussian random unit vector in the weight basis of V_m.
Eigen::VectorXcd random_unit_vector(int m, std::uint64_t seed);
/// τ(k) on V_m in the monomial basis: P(x, y) ↦ P(a x - b̄ y, b x + ā y).
Eigen::MatrixXcd su2_action(int m, const Su2Element& k);
/// v(a, b) = Σ p_i a^{m-i} b^i = <τ(k) v, x^m>.
std::complex<double> evaluate_top_coefficient(const Eigen::VectorXcd& p, std::complex<double> a,
                                              std::complex<double> b);

struct HaarGrid {
  int order = 0;
  std::vector<Su2Element> nodes;
  std::vector<double> weights;  // sum to 1
};

/// Euler angles: Gauss–Legendre in cos β, trapezoid in α and γ.
HaarGrid make_haar_grid(int order);
double haar_moment(int p, int q, const HaarGrid& grid);
inline Rational haar_moment_exact(int p, int q) {
  return factorial(p) * factorial(q) / factorial(p + q + 1);
}

struct CasimirCheck {
  double residual = 0.0;
  double lambda_norm2 = 0.0;      // <Λ, Λ> = m²/8
  double casimir_constant = 0.0;  // <Λ + 2ρ, Λ> = m(m+2)/8
  double casimir_deviation = 0.0; // ‖Σ τ(T_i)² - constant·I‖
  double cartan_mass = 0.0;       // ‖P_{2m}(v⊗v)‖² / ‖v‖⁴
};

/// Σ_i τ(T_i) v ⊗ τ(T_i) v against <Λ, Λ> v ⊗ v, T_i Killing-orthonormal;
/// v in the weight basis.
CasimirCheck casimir_tensor_check(const Eigen::VectorXcd& v_weight);

struct CompactWehrl {
  int m = 0;
  int n = 0;
  double integral_numeric = 0.0;
  double integral_exact = 0.0;        // cartan_fraction / (nm + 1), float route
  std::optional<Rational> exact;      // when the input is rational in the monomial basis
  double bound = 0.0;                 // 1 / (nm + 1)
  double slack = 0.0;
  double quadrature_estimate = 0.0;   // |I(order) - I(order + 4)|
};

/// v in the weight basis (normalized internally). grid_order = 0 picks 2nm + 4.
CompactWehrl wehrl_compact_check(const Eigen::VectorXcd& v_weight, int n, int grid_order = 0,
                                 double tolerance = 1e-6);
/// Same with an exact rational weight-basis vector (exact fraction when representable).
CompactWehrl wehrl_compact_check(const VectorX<Rational>& v_weight, int n, int grid_order = 0,
                                 double tolerance = 1e-6);

struct CoherentFit {
  Su2Element k0;
  double fidelity = 0.0;  // max_k |<τ(k)^{-1} v, e_m>|² / ‖v‖², 1 iff v is a translate of e_m
};
CoherentFit fit_coherent(const Eigen::VectorXcd& v_weight);

Report compact_report(const Eigen::VectorXcd& v_weight, int n, int grid_order, std::uint64_t seed);

}  // namespace wehrl
