// Polynomials in weighted Bergman spaces H_ν on the unit disc, unit-normalized
// so that <z^m, z^k>_ν = δ_{mk} m!/(ν)_m.  Templated on the coefficient scalar:
// Rational / GaussianRational give exact norms, double / complex<double> give
// floating ones through the same code.
#pragma once

#include <algorithm>
#include <complex>

#include "wehrl/rational.hpp"

namespace wehrl {

template <typename Scalar>
struct PolyFun {
  Rational nu;
  VectorX<Scalar> coeffs;  // f(z) = Σ coeffs[m] z^m

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Scalar coeff(int m) const {
    return (m >= 0 && m < coeffs.size()) ? coeffs[m] : Scalar(0);
  }
};

template <typename Scalar>
PolyFun<Scalar> make_poly(const Rational& nu, std::initializer_list<Scalar> c) {
  PolyFun<Scalar> f{nu, VectorX<Scalar>(static_cast<Eigen::Index>(c.size()))};
  Eigen::Index i = 0;
  for (const auto& x : c) f.coeffs[i++] = x;
  return f;
}

/// Weights m!/(ν)_m for m = 0..degree.
template <typename Real>
VectorX<Real> monomial_weights(const Rational& nu, int degree) {
  VectorX<Real> w(std::max(degree + 1, 0));
  if (degree < 0) return w;
  w[0] = Real(1);
  if constexpr (std::is_same_v<Real, Rational>) {
    for (int m = 1; m <= degree; ++m) w[m] = w[m - 1] * Rational(m) / (nu + (m - 1));
  } else {
    const double v = to_double(nu);
    for (int m = 1; m <= degree; ++m) w[m] = w[m - 1] * m / (v + (m - 1));
  }
  return w;
}

/// Σ |c_m|² m!/(ν)_m.
template <typename Scalar>
RealOf<Scalar> norm2_exact(const PolyFun<Scalar>& f) {
  using T = ScalarTraits<Scalar>;
  const auto w = monomial_weights<RealOf<Scalar>>(f.nu, f.degree());
  RealOf<Scalar> s(0);
  for (int m = 0; m <= f.degree(); ++m) s += T::abs2(f.coeffs[m]) * w[m];
  return s;
}

/// Re <f, g>_ν (g, f at the same weight).
template <typename Scalar>
RealOf<Scalar> real_inner(const PolyFun<Scalar>& f, const PolyFun<Scalar>& g) {
  using T = ScalarTraits<Scalar>;
  const int d = std::max(f.degree(), g.degree());
  const auto w = monomial_weights<RealOf<Scalar>>(f.nu, d);
  RealOf<Scalar> s(0);
  for (int m = 0; m <= d; ++m) {
    if constexpr (std::is_same_v<Scalar, GaussianRational>) {
      const auto p = f.coeff(m) * T::conj(g.coeff(m));
      s += p.re * w[m];
    } else if constexpr (std::is_same_v<Scalar, std::complex<double>>) {
      s += (f.coeff(m) * std::conj(g.coeff(m))).real() * w[m];
    } else {
      s += f.coeff(m) * g.coeff(m) * w[m];
    }
  }
  return s;
}

template <typename Scalar>
VectorX<Scalar> convolve(const VectorX<Scalar>& x, const VectorX<Scalar>& y) {
  if (x.size() == 0 || y.size() == 0) return VectorX<Scalar>();
  VectorX<Scalar> out = VectorX<Scalar>::Constant(x.size() + y.size() - 1, Scalar(0));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] == Scalar(0)) continue;
    for (Eigen::Index j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

/// f·g lives in H_{μ+ν}.
template <typename Scalar>
PolyFun<Scalar> product(const PolyFun<Scalar>& f, const PolyFun<Scalar>& g) {
  return {f.nu + g.nu, convolve(f.coeffs, g.coeffs)};
}

/// f^n in H_{nν}; f^0 = 1 at weight 0.
template <typename Scalar>
PolyFun<Scalar> power(const PolyFun<Scalar>& f, int n) {
  VectorX<Scalar> acc = VectorX<Scalar>::Constant(1, Scalar(1));
  for (int i = 0; i < n; ++i) acc = convolve(acc, f.coeffs);
  return {f.nu * n, acc};
}

template <typename Scalar>
VectorX<Scalar> derivative(const VectorX<Scalar>& c) {
  if (c.size() <= 1) return VectorX<Scalar>::Constant(1, Scalar(0));
  VectorX<Scalar> out(c.size() - 1);
  for (Eigen::Index m = 1; m < c.size(); ++m) out[m - 1] = c[m] * Scalar(static_cast<int>(m));
  return out;
}

template <typename Scalar>
PolyFun<Scalar> scaled(PolyFun<Scalar> f, const Scalar& s) {
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) f.coeffs[i] = f.coeffs[i] * s;
  return f;
}

template <typename Scalar>
PolyFun<Scalar> with_weight(PolyFun<Scalar> f, const Rational& nu) {
  f.nu = nu;
  return f;
}

/// Value of f at a point of the disc.
template <typename Scalar>
std::complex<double> evaluate(const PolyFun<Scalar>& f, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (int m = f.degree(); m >= 0; --m) acc = acc * z + to_complex(f.coeffs[m]);
  return acc;
}

/// Element of H_μ ⊗ H_ν as a polynomial F(z, w) = Σ c(i, j) z^i w^j.
template <typename Scalar>
struct Poly2 {
  Rational mu;
  Rational nu;
  MatrixX<Scalar> c;
};

template <typename Scalar>
Poly2<Scalar> tensor(const PolyFun<Scalar>& f, const PolyFun<Scalar>& g) {
  Poly2<Scalar> F{f.nu, g.nu, MatrixX<Scalar>(f.coeffs.size(), g.coeffs.size())};
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i)
    for (Eigen::Index j = 0; j < g.coeffs.size(); ++j) F.c(i, j) = f.coeffs[i] * g.coeffs[j];
  return F;
}

/// Product-norm in H_μ ⊗ H_ν.
template <typename Scalar>
RealOf<Scalar> norm2_exact(const Poly2<Scalar>& F) {
  using T = ScalarTraits<Scalar>;
  const auto wz = monomial_weights<RealOf<Scalar>>(F.mu, static_cast<int>(F.c.rows()) - 1);
  const auto ww = monomial_weights<RealOf<Scalar>>(F.nu, static_cast<int>(F.c.cols()) - 1);
  RealOf<Scalar> s(0);
  for (Eigen::Index i = 0; i < F.c.rows(); ++i)
    for (Eigen::Index j = 0; j < F.c.cols(); ++j) s += T::abs2(F.c(i, j)) * wz[i] * ww[j];
  return s;
}

/// (z - w)^k in H_μ ⊗ H_ν: the lowest vector of the k-th summand.
template <typename Scalar>
Poly2<Scalar> lowest_vector(const Rational& mu, const Rational& nu, int k) {
  Poly2<Scalar> F{mu, nu, MatrixX<Scalar>::Constant(k + 1, k + 1, Scalar(0))};
  for (int j = 0; j <= k; ++j) {
    const Rational c = binomial(k, j) * ((k - j) % 2 == 0 ? 1 : -1);
    F.c(j, k - j) = ScalarTraits<Scalar>::from_rational(c);
  }
  return F;
}

/// Diagonal raising operator z²∂_z + μz + w²∂_w + νw of the tensor product
/// representation; it maps each summand H_{μ+ν+2k} into itself.
template <typename Scalar>
Poly2<Scalar> raise(const Poly2<Scalar>& F) {
  using T = ScalarTraits<Scalar>;
  const Eigen::Index rows = F.c.rows() + 1;
  const Eigen::Index cols = F.c.cols() + 1;
  Poly2<Scalar> out{F.mu, F.nu, MatrixX<Scalar>::Constant(rows, cols, Scalar(0))};
  const Scalar mu = T::from_rational(F.mu);
  const Scalar nu = T::from_rational(F.nu);
  for (Eigen::Index i = 0; i < F.c.rows(); ++i)
    for (Eigen::Index j = 0; j < F.c.cols(); ++j) {
      const Scalar& x = F.c(i, j);
      out.c(i + 1, j) += x * (Scalar(static_cast<int>(i)) + mu);
      out.c(i, j + 1) += x * (Scalar(static_cast<int>(j)) + nu);
    }
  return out;
}

}  // namespace wehrl
