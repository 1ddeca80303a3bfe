#include "wehrl/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "wehrl/degrees.hpp"
#include "wehrl/errors.hpp"
#include "wehrl/quadrature.hpp"

namespace wehrl {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

bool is_even_integer(const Rational& q) {
  return is_integer(q) && q >= 0 && numerator(q) % 2 == 0;
}

HighPrecision to_hp(const Rational& q) {
  return HighPrecision(numerator(q).str()) / HighPrecision(denominator(q).str());
}

ClosedForm close(const GammaRatio& g, int extra_sqrt_pi) {
  ClosedForm out;
  out.exact = reduce_exact(g);
  if (out.exact) {
    out.exact->sqrt_pi_power += extra_sqrt_pi;
    out.high_precision = to_hp(out.exact->coeff) *
                         pow(boost::math::constants::pi<HighPrecision>(),
                             HighPrecision(out.exact->sqrt_pi_power) / 2);
  } else {
    out.high_precision = evaluate_high_precision(g) *
                         pow(boost::math::constants::pi<HighPrecision>(),
                             HighPrecision(extra_sqrt_pi) / 2);
  }
  return out;
}

// Gauss–Jacobi on the hypercube: weights s^b (1-s)^γ per axis, |Δ|^a polynomial.
NumericEstimate hypercube_gauss(const SelbergSpec& spec, int nodes) {
  const double a = to_double(spec.a);
  const GaussRule rule = gauss_jacobi01(nodes, to_double(spec.b), to_double(spec.gamma));
  const int r = spec.r;
  std::vector<int> idx(r, 0);
  double total = 0.0;
  long count = 0;
  while (true) {
    double w = 1.0;
    double vandermonde = 1.0;
    for (int j = 0; j < r; ++j) {
      w *= rule.weights[idx[j]];
      for (int k = j + 1; k < r; ++k)
        vandermonde *= std::pow(std::abs(rule.nodes[idx[j]] - rule.nodes[idx[k]]), a);
    }
    total += w * vandermonde;
    ++count;
    int pos = 0;
    while (pos < r && ++idx[pos] == nodes) idx[pos++] = 0;
    if (pos == r) break;
  }
  return {total, 0.0, false, count, 0, SelbergMethod::gauss_jacobi};
}

// Ordered region 1 > t_1 > t_2 > ... > t_r > 0 with t = 1 - s and collapsed
// coordinates t_k = y_1 ··· y_k. Then ∏ t_k^γ · Jacobian = ∏ y_i^{γ(r-i+1) + (r-i)}
// becomes a Jacobi weight per axis and the rest is polynomial for integer a, b.
NumericEstimate simplex_gauss(const SelbergSpec& spec, int nodes) {
  const int r = spec.r;
  const double a = to_double(spec.a);
  const double b = to_double(spec.b);
  const double g = to_double(spec.gamma);
  std::vector<GaussRule> rules;
  for (int i = 1; i <= r; ++i) rules.push_back(gauss_jacobi01(nodes, g * (r - i + 1) + (r - i), 0.0));
  std::vector<int> idx(r, 0);
  std::vector<double> t(r);
  double total = 0.0;
  long count = 0;
  while (true) {
    double w = 1.0;
    double prod = 1.0;
    for (int i = 0; i < r; ++i) {
      w *= rules[i].weights[idx[i]];
      prod *= rules[i].nodes[idx[i]];
      t[i] = prod;
    }
    double f = 1.0;
    for (int j = 0; j < r; ++j) {
      if (b != 0.0) f *= std::pow(1.0 - t[j], b);
      for (int k = j + 1; k < r; ++k) f *= std::pow(t[j] - t[k], a);
    }
    total += w * f;
    ++count;
    int pos = 0;
    while (pos < r && ++idx[pos] == nodes) idx[pos++] = 0;
    if (pos == r) break;
  }
  double orderings = 1.0;
  for (int k = 2; k <= r; ++k) orderings *= k;
  return {orderings * total, 0.0, false, count, 0, SelbergMethod::ordered_simplex};
}

NumericEstimate monte_carlo(const SelbergSpec& spec, const SelbergOptions& opt, long budget) {
  const int r = spec.r;
  const int strata = std::max(1, opt.strata);
  const int parts = std::max(1, opt.partitions);
  // Per (partition, stratum) sums, reduced in a fixed order.
  std::vector<double> sum(static_cast<std::size_t>(parts) * strata, 0.0);
  std::vector<double> sum2(sum.size(), 0.0);
  std::vector<long> n(sum.size(), 0);
  const long per_cell = std::max<long>(2, budget / (static_cast<long>(parts) * strata));
  std::vector<double> s(r);
  for (int p = 0; p < parts; ++p) {
    std::mt19937_64 rng(splitmix64(opt.seed ^ splitmix64(static_cast<std::uint64_t>(p) + 1)));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int k = 0; k < strata; ++k) {
      const std::size_t cell = static_cast<std::size_t>(p) * strata + k;
      for (long i = 0; i < per_cell; ++i) {
        s[0] = (k + unif(rng)) / strata;
        for (int j = 1; j < r; ++j) s[j] = unif(rng);
        if (opt.permute_coordinates) std::reverse(s.begin(), s.end());
        const double f = selberg_integrand(spec, s);
        sum[cell] += f;
        sum2[cell] += f * f;
      }
      n[cell] = per_cell;
    }
  }
  double estimate = 0.0;
  double variance = 0.0;
  long total = 0;
  for (int k = 0; k < strata; ++k) {
    double sk = 0.0;
    double s2k = 0.0;
    long nk = 0;
    for (int p = 0; p < parts; ++p) {
      const std::size_t cell = static_cast<std::size_t>(p) * strata + k;
      sk += sum[cell];
      s2k += sum2[cell];
      nk += n[cell];
    }
    const double mean = sk / nk;
    const double var = std::max(0.0, (s2k / nk - mean * mean) * nk / (nk - 1.0));
    estimate += mean / strata;
    variance += var / (static_cast<double>(strata) * strata * nk);
    total += nk;
  }
  return {estimate, std::sqrt(variance), true, total, opt.seed, SelbergMethod::monte_carlo};
}

int default_nodes(const SelbergSpec& spec) {
  // Polynomial degree per axis grows with a·(r-1) and b; keep a safety margin.
  const double a = to_double(spec.a);
  const double b = to_double(spec.b);
  return 12 + static_cast<int>(std::ceil(a * spec.r + b * spec.r));
}

}  // namespace

void check_integrable(const SelbergSpec& spec) {
  if (spec.r < 1) throw NonIntegrable("Selberg integral needs r >= 1");
  if (spec.gamma <= -1 || spec.b <= -1 || spec.a < 0)
    throw NonIntegrable("Selberg integral diverges: need gamma > -1, b > -1, a >= 0");
}

GammaRatio selberg_gamma_ratio(const SelbergSpec& spec) {
  GammaRatio g;
  for (int j = 1; j <= spec.r; ++j) {
    const Rational step = spec.a * (j - 1) / 2;
    g.numer.push_back(spec.b + 1 + step);
    g.numer.push_back(spec.gamma + 1 + step);
    g.numer.push_back(1 + spec.a * j / 2);
    g.denom.push_back(spec.gamma + spec.b + 2 + spec.a * (spec.r + j - 2) / 2);
    g.denom.push_back(1 + spec.a / 2);
  }
  return g;
}

ClosedForm selberg_closed(const SelbergSpec& spec) {
  check_integrable(spec);
  return close(selberg_gamma_ratio(spec), 0);
}

ClosedForm laguerre_constant_C(const DomainParams& d) {
  validate(d);
  const Rational a{d.a};
  const Rational b{d.b};
  GammaRatio g;
  for (int j = 1; j <= d.r; ++j) {
    g.numer.push_back(1 + a / 2);
    g.denom.push_back(b + 1 + a * (j - 1) / 2);
    g.denom.push_back(1 + a * j / 2);
  }
  return close(g, 2 * d.dimension());
}

std::string to_string(SelbergMethod m) {
  switch (m) {
    case SelbergMethod::gauss_jacobi:
      return "gauss_jacobi";
    case SelbergMethod::ordered_simplex:
      return "ordered_simplex";
    case SelbergMethod::monte_carlo:
      return "monte_carlo";
    case SelbergMethod::automatic:
      return "auto";
  }
  return "auto";
}

SelbergMethod selberg_method_from_string(const std::string& s) {
  if (s == "gauss_jacobi") return SelbergMethod::gauss_jacobi;
  if (s == "ordered_simplex") return SelbergMethod::ordered_simplex;
  if (s == "monte_carlo") return SelbergMethod::monte_carlo;
  if (s == "auto") return SelbergMethod::automatic;
  throw std::invalid_argument("unknown Selberg method " + s);
}

double selberg_integrand(const SelbergSpec& spec, std::span<const double> s) {
  const double a = to_double(spec.a);
  const double b = to_double(spec.b);
  const double g = to_double(spec.gamma);
  double f = 1.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    f *= std::pow(1.0 - s[j], g) * std::pow(s[j], b);
    for (std::size_t k = j + 1; k < s.size(); ++k) f *= std::pow(std::abs(s[j] - s[k]), a);
  }
  return f;
}

NumericEstimate selberg_numeric(const SelbergSpec& spec, const SelbergOptions& options) {
  check_integrable(spec);
  SelbergMethod method = options.method;
  if (method == SelbergMethod::automatic)
    method = is_even_integer(spec.a) ? SelbergMethod::gauss_jacobi : SelbergMethod::ordered_simplex;

  if (method == SelbergMethod::monte_carlo) {
    const long budget = options.budget > 0 ? options.budget : 1'000'000;
    return monte_carlo(spec, options, budget);
  }
  if (method == SelbergMethod::gauss_jacobi && !is_even_integer(spec.a))
    throw MethodUnsupported("gauss_jacobi needs a to be a nonnegative even integer");

  const int nodes = options.budget > 0 ? static_cast<int>(options.budget) : default_nodes(spec);
  auto run = [&](int n) {
    return method == SelbergMethod::gauss_jacobi ? hypercube_gauss(spec, n) : simplex_gauss(spec, n);
  };
  NumericEstimate est = run(nodes);
  // A-posteriori bound from a refined rule.
  const NumericEstimate refined = run(nodes + 4);
  est.error = std::abs(refined.value - est.value);
  est.seed = options.seed;
  return est;
}

SelbergSpec degree_selberg_spec(const DomainParams& d, const Rational& lambda) {
  return {d.r, Rational(d.a), Rational(d.b), lambda - d.genus()};
}

Report verify_degree_integral(const DomainParams& d, const Rational& lambda,
                              const SelbergOptions& options, double tolerance) {
  Report rep;
  rep.command = "verify_degree_integral";
  rep.seed = options.seed;
  rep.inputs = Json{{"domain", d.family_label},
                    {"r", d.r},
                    {"a", d.a},
                    {"b", d.b},
                    {"lambda", to_string(lambda)},
                    {"method", to_string(options.method)},
                    {"budget", options.budget}};

  const PiScaledRational degree = scalar_formal_degree(d, lambda);
  const PiScaledRational exact_inverse = degree.inverse();
  const SelbergSpec spec = degree_selberg_spec(d, lambda);
  const ClosedForm c = laguerre_constant_C(d);
  const ClosedForm closed = selberg_closed(spec);
  const NumericEstimate est = selberg_numeric(spec, options);

  rep.outputs["d_lambda"] = exact_json(degree);
  rep.outputs["d_lambda_inverse"] = exact_json(exact_inverse);
  if (c.exact) rep.outputs["laguerre_C"] = exact_json(*c.exact);
  if (closed.exact) rep.outputs["selberg_closed"] = exact_json(*closed.exact);

  // Exact identity d_λ · C · S_closed = 1 whenever both sides telescope.
  if (c.exact && closed.exact) {
    const HalfPiScaled product = *c.exact * *closed.exact;
    const HalfPiScaled one{degree.coeff() * product.coeff,
                           2 * degree.pi_power() + product.sqrt_pi_power};
    rep.outputs["exact_identity_holds"] = (one == HalfPiScaled{1, 0});
    rep.require(one == HalfPiScaled{1, 0});
  }

  const double exact_value = exact_inverse.to_double();
  const double numeric = c.value() * est.value;
  const double deviation = std::abs(numeric - exact_value) / exact_value;
  rep.outputs["numeric"] = Json{{"value", numeric},
                                {"selberg_estimate", est.value},
                                {"error", c.value() * est.error},
                                {"error_kind", est.error_is_stderr ? "stderr" : "abs_err_bound"},
                                {"samples_or_nodes", est.samples_or_nodes},
                                {"method", to_string(est.method)}};
  rep.outputs["exact"] = exact_value;
  rep.outputs["deviation"] = deviation;
  rep.outputs["tolerance"] = tolerance;
  bool ok = deviation <= tolerance;
  if (est.error_is_stderr) {
    const double sigma = c.value() * est.error;
    ok = std::abs(numeric - exact_value) <= 3.0 * sigma && deviation <= tolerance;
    rep.outputs["within_3_sigma"] = std::abs(numeric - exact_value) <= 3.0 * sigma;
  }
  rep.require(ok);
  rep.outputs["gamma_convention"] =
      "Gindikin Gamma_a without the (2 pi)^((n1-r)/2) factor";
  return rep;
}

}  // namespace wehrl
