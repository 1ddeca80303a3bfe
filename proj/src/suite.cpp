#include "wehrl/suite.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "wehrl/compact.hpp"
#include "wehrl/degrees.hpp"
#include "wehrl/disc/wehrl.hpp"
#include "wehrl/selberg.hpp"

namespace wehrl {

void SuiteConfig::validate() const {
  if (quadrature_nodes < 0) throw ConfigError("quadrature_nodes must be >= 0");
  if (mc_budget <= 0) throw ConfigError("mc_budget must be positive");
  if (!(tolerance_abs > 0 && tolerance_abs < 1)) throw ConfigError("tolerance_abs must lie in (0, 1)");
  if (!(tolerance_rel > 0 && tolerance_rel < 1)) throw ConfigError("tolerance_rel must lie in (0, 1)");
}

Json SuiteConfig::to_json() const {
  return Json{{"quadrature_nodes", quadrature_nodes}, {"mc_budget", mc_budget},
              {"seed", seed},
              {"tolerance_abs", tolerance_abs},
              {"tolerance_rel", tolerance_rel},
              {"convention", to_string(convention)}};
}

SuiteConfig SuiteConfig::from_json(const Json& j, SuiteConfig base) {
  try {
    if (j.contains("quadrature_nodes")) base.quadrature_nodes = j.at("quadrature_nodes").get<int>();
    if (j.contains("mc_budget")) base.mc_budget = j.at("mc_budget").get<long>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tolerance_abs")) base.tolerance_abs = j.at("tolerance_abs").get<double>();
    if (j.contains("tolerance_rel")) base.tolerance_rel = j.at("tolerance_rel").get<double>();
    if (j.contains("convention"))
      base.convention = convention_from_string(j.at("convention").get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad suite config: ") + e.what());
  }
  base.validate();
  return base;
}

SuiteConfig SuiteConfig::from_json(const Json& j) { return from_json(j, SuiteConfig{}); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"degrees", "selberg", "disc", "compact"};
  return names;
}

namespace {

using Q = Rational;
using Cd = std::complex<double>;

// Raw 64-bit draws mapped by hand so streams do not depend on the standard
// library's distribution implementations.
struct Draw {
  std::mt19937_64 engine;
  explicit Draw(std::uint64_t seed) : engine(seed) {}
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Q rational() { return Q(integer(-9, 9)) / Q(integer(1, 6)); }
  double uniform() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
  double normal() {
    const double u = uniform() + 1e-300, v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
  }
  PolyFun<Q> poly(const Q& nu, int max_degree) {
    const int d = integer(0, max_degree);
    PolyFun<Q> f{nu, VectorX<Q>(d + 1)};
    for (int i = 0; i <= d; ++i) f.coeffs[i] = rational();
    if ((f.coeffs.array() == Q(0)).all()) f.coeffs[d] = 1;
    return f;
  }
  Eigen::VectorXcd unit_vector(int size) {
    Eigen::VectorXcd v(size);
    for (auto& x : v) x = {normal(), normal()};
    return v / v.norm();
  }
};

Json poly_json(const PolyFun<Q>& f) {
  Json c = Json::array();
  for (const auto& x : f.coeffs) c.push_back(to_string(x));
  return Json{{"nu", to_string(f.nu)}, {"coeffs", c}};
}

Report start(const std::string& command, const SuiteConfig& cfg) {
  Report r;
  r.command = command;
  r.seed = cfg.seed;
  return r;
}

// Runs `body`; an exception becomes a FAIL report carrying the message.
template <typename F>
void run_case(std::vector<Report>& out, const std::string& command, const SuiteConfig& cfg,
              F&& body) {
  Report r = start(command, cfg);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.outputs["error"] = e.what();
    r.verdict = Verdict::FAIL;
  }
  out.push_back(std::move(r));
}

const std::vector<std::string>& acceptance_presets() {
  static const std::vector<std::string> keys = {"disc", "su21", "su22", "sp2", "sp3", "so23", "so25"};
  return keys;
}

std::vector<Q> lambda_grid(const DomainParams& d) {
  const Q p(d.genus());
  return {p, p + Q(1, 2), p + 1, p + 5};
}

const char* root_label(const std::string& key) {
  if (key == "disc") return "A1";
  if (key == "su21") return "A2";
  if (key == "su22") return "A3";
  if (key == "sp2") return "C2";
  if (key == "sp3") return "C3";
  return nullptr;
}

// ---------------------------------------------------------------------------

void degrees_battery(std::vector<Report>& out, const SuiteConfig& cfg) {
  for (const auto& key : acceptance_presets()) {
    const DomainParams d = *find_preset(key);
    for (const Q& lambda : lambda_grid(d)) {
      run_case(out, "degrees.consistency", cfg, [&](Report& r) {
        r.inputs = Json{{"domain", key}, {"lambda", to_string(lambda)}};
        PiScaledRational deg;
        try {
          deg = scalar_formal_degree(d, lambda);
        } catch (const NonTelescoping& e) {
          r.outputs["skipped"] = e.what();
          return;  // stays INFO
        }
        r.outputs["d_lambda"] = exact_json(deg);
        r.compare_exact("d_equals_cG_dH", deg, c_G(d) * PiScaledRational(hc_degree_scalar(d, lambda)));
        if (const char* label = root_label(key))
          r.compare_exact("dH_vs_root_product", hc_degree_scalar(d, lambda),
                          hc_degree_root_product(root_preset(label), lambda));
      });
    }
  }

  run_case(out, "degrees.cG_symplectic_rank2", cfg, [&](Report& r) {
    const DomainParams sp2 = *find_preset("sp2");
    const PiScaledRational expected(3, -3);
    r.inputs = Json{{"domain", "sp2"}};
    r.compare_exact("proof_formula", c_G_symplectic(2, CgFormula::proof), expected);
    const Q lambda = 4;
    r.compare_exact("root_product_ratio",
                    scalar_formal_degree(sp2, lambda) /
                        PiScaledRational(hc_degree_root_product(root_preset("C2"), lambda)),
                    expected);
    r.compare_exact("so23_case_formula", c_G_orthogonal_odd(2), expected);
    const PiScaledRational statement = c_G_symplectic(2, CgFormula::statement);
    r.outputs["statement_formula"] = exact_json(statement);
    r.outputs["documented_mismatch"] = !(statement == expected);
    r.require(!(statement == expected));
  });

  run_case(out, "degrees.cG_symplectic_rank3", cfg, [&](Report& r) {
    const DomainParams sp3 = *find_preset("sp3");
    const Q lambda = 6;
    r.compare_exact("root_product_ratio",
                    scalar_formal_degree(sp3, lambda) /
                        PiScaledRational(hc_degree_root_product(root_preset("C3"), lambda)),
                    c_G_symplectic(3));
  });

  run_case(out, "degrees.isogeny", cfg, [&](Report& r) {
    const DomainParams sp2 = *find_preset("sp2"), so23 = *find_preset("so23");
    r.require(derived_invariants(sp2) == derived_invariants(so23));
    r.compare_exact("c_G", c_G(sp2), c_G(so23));
    for (const Q& lambda : lambda_grid(sp2))
      r.compare_exact("d_" + to_string(lambda), scalar_formal_degree(sp2, lambda),
                      so_odd_formal_degree(2, lambda));
  });

  run_case(out, "degrees.wehrl_constants", cfg, [&](Report& r) {
    const DomainParams disc = unit_disc();
    r.compare_exact("disc_nu2_n2", wehrl_constant(disc, 2, 2), PiScaledRational(Q(1, 3), -1));
    r.compare_exact("disc_nu2_n3", wehrl_constant(disc, 2, 3), PiScaledRational(Q(1, 5), -2));
    r.compare_exact("su21_l4_n2", wehrl_constant(*find_preset("su21"), 4, 2),
                    PiScaledRational(Q(6, 7), -2));
    r.compare_exact("n1_degenerate", wehrl_constant(*find_preset("sp3"), 5, 1), PiScaledRational(1));
    r.compare_exact("partial_isometry_disc_3_3", partial_isometry_constant(disc, 3, 3),
                    PiScaledRational(Q(4, 5), -1));
  });
}

void selberg_battery(std::vector<Report>& out, const SuiteConfig& cfg) {
  run_case(out, "selberg.closed", cfg, [&](Report& r) {
    const auto a = selberg_closed({2, 1, 0, 0});
    const auto b = selberg_closed({1, 0, 0, 2});
    r.require(a.exact && b.exact && a.exact->is_pi_scaled() && b.exact->is_pi_scaled());
    r.compare_exact("r2_a1_b0_g0", a.exact->to_pi_scaled(), PiScaledRational(Q(1, 3)));
    r.compare_exact("r1_a0_b0_g2", b.exact->to_pi_scaled(), PiScaledRational(Q(1, 3)));
  });

  run_case(out, "selberg.monte_carlo", cfg, [&](Report& r) {
    const SelbergSpec spec{2, 1, 0, 0};
    const auto est = selberg_numeric(spec, {SelbergMethod::monte_carlo, cfg.mc_budget, cfg.seed});
    r.inputs = Json{{"spec", "r=2,a=1,b=0,gamma=0"}, {"budget", cfg.mc_budget}};
    r.outputs["stderr"] = est.error;
    r.compare("estimate", est.value, 1.0 / 3, 3 * est.error, false);
  });

  run_case(out, "selberg.gauss_jacobi", cfg, [&](Report& r) {
    const SelbergSpec spec{2, 2, 0, 1};
    const auto est = selberg_numeric(spec, {SelbergMethod::gauss_jacobi, cfg.quadrature_nodes});
    r.inputs = Json{{"spec", "r=2,a=2,b=0,gamma=1"}, {"nodes", est.samples_or_nodes}};
    r.compare("estimate", est.value, selberg_closed(spec).value(), cfg.tolerance_rel);
  });

  for (const auto& key : acceptance_presets()) {
    const DomainParams d = *find_preset(key);
    for (const Q& lambda : lambda_grid(d)) {
      run_case(out, "selberg.degree_integral", cfg, [&](Report& r) {
        SelbergOptions opt{SelbergMethod::automatic, cfg.quadrature_nodes, cfg.seed};
        r = verify_degree_integral(d, lambda, opt, cfg.tolerance_rel);
        r.command = "selberg.degree_integral";
        r.inputs["preset"] = key;
      });
    }
  }

  run_case(out, "selberg.laguerre_constant", cfg, [&](Report& r) {
    r.compare_exact("disc", laguerre_constant_C(unit_disc()).exact->to_pi_scaled(), PiScaledRational(1, 1));
    r.compare_exact("su21", laguerre_constant_C(*find_preset("su21")).exact->to_pi_scaled(),
                    PiScaledRational(1, 2));
    r.compare_exact("sp2", laguerre_constant_C(*find_preset("sp2")).exact->to_pi_scaled(),
                    PiScaledRational(1, 3));
  });
}

void disc_battery(std::vector<Report>& out, const SuiteConfig& cfg) {
  const ConstantConvention conv = cfg.convention;
  run_case(out, "disc.completeness", cfg, [&](Report& r) {
    r.inputs = Json{{"f", "z"}, {"g", "z"}, {"mu", 2}, {"nu", 2}, {"convention", to_string(conv)}};
    const auto c = completeness(make_poly<Q>(2, {0, 1}), make_poly<Q>(2, {0, 1}), conv);
    Json masses = Json::array();
    for (const auto& m : c.masses) masses.push_back(exact_json(m));
    r.outputs["masses"] = masses;
    r.compare_exact("total", c.total, c.expected);
  });

  run_case(out, "disc.completeness_random", cfg, [&](Report& r) {
    Draw draw(cfg.seed);
    r.inputs = Json{{"cases", 12}, {"convention", to_string(conv)}};
    int failures = 0;
    for (auto [mu, nu] : {std::pair<Q, Q>{2, 2}, {2, 3}, {Q(5, 2), Q(7, 2)}})
      for (int t = 0; t < 4; ++t) {
        const auto f = draw.poly(mu, 8), g = draw.poly(nu, 8);
        const auto c = completeness(f, g, conv);
        if (c.total != c.expected) {
          if (failures == 0)
            r.outputs["first_failure"] = Json{{"f", poly_json(f)}, {"g", poly_json(g)},
                                              {"total", exact_json(c.total)},
                                              {"expected", exact_json(c.expected)}};
          ++failures;
        }
      }
    r.outputs["failures"] = failures;
    r.require(failures == 0);
  });

  run_case(out, "disc.q1_vanishing", cfg, [&](Report& r) {
    Draw draw(cfg.seed + 1);
    bool ok = true;
    for (int t = 0; t < 10; ++t) {
      const auto f = draw.poly(Q(draw.integer(3, 8), 2), 6);
      for (int n : {2, 3, 4})
        for (const auto& m : q1_tensor_power_masses(f, n)) ok = ok && m == 0;
    }
    r.inputs = Json{{"cases", 10}, {"n", {2, 3, 4}}};
    r.require(ok);
  });

  run_case(out, "disc.wehrl", cfg, [&](Report& r) {
    const auto w = wehrl_check(make_poly<Q>(2, {1, 1}), 2);
    r.compare_exact("lhs", w.lhs, Q(21, 10));
    r.compare_exact("rhs", w.rhs, Q(9, 4));
    const auto k = kernel_poly<Cd>(2, 0.3, 60);
    r.outputs["kernel_tail_bound"] = kernel_tail_bound(2, 0.3, 60);
    r.compare("kernel_slack", wehrl_check(k, 2).slack, 0.0, 1e-8, false);
  });

  run_case(out, "disc.improved", cfg, [&](Report& r) {
    const auto f = make_poly<Q>(2, {1, 1});
    const auto sharp = improved_check(f, 2, RemainderConstant::sharp);
    const auto paper = improved_check(f, 2, RemainderConstant::paper);
    r.compare_exact("sharp_remainder", sharp.remainder, Q(3, 20));
    r.compare_exact("sharp_slack", sharp.slack, 0);
    r.compare_exact("paper_remainder", paper.remainder, Q(9, 112));
    r.require(paper.slack >= 0);
    const auto k = kernel_poly<Cd>(Q(5, 2), std::polar(0.5, 0.7), 120);
    r.compare("kernel_remainder", improved_check(k, 3, RemainderConstant::sharp).remainder, 0.0,
              1e-10, false);
  });

  run_case(out, "disc.ode", cfg, [&](Report& r) {
    const auto f = ode_solve<Q>(2, 1, 5);
    const auto k = kernel_poly<Q>(2, Q(1, 2), 5);
    r.require(f.coeffs == k.coeffs);
    bool raised = false;
    try {
      ode_solve<Q>(3, 3, 4);
    } catch (const OutsideBergman&) {
      raised = true;
    }
    r.outputs["outside_bergman_raised"] = raised;
    r.require(raised);
  });

  run_case(out, "disc.norms", cfg, [&](Report& r) {
    r.compare("one_p4", norm_p_numeric(make_poly<Cd>(2, {1.0}), 4), 1.0, cfg.tolerance_rel);
    r.compare("z_p4", norm_p_numeric(make_poly<Cd>(2, {0.0, 1.0}), 4), 0.1, cfg.tolerance_rel);
    r.compare("one_plus_z_p4", norm_p_numeric(make_poly<Cd>(2, {1.0, 1.0}), 4), 2.1,
              cfg.tolerance_rel);
    r.compare("matrix_coeff_one_n1", matrix_coeff_lp(make_poly<Cd>(2, {1.0}), 1), 1.0, 1e-8);
    r.compare("matrix_coeff_one_plus_z_n2", matrix_coeff_lp(make_poly<Cd>(2, {1.0, 1.0}), 2), 0.7,
              1e-8);
  });

  run_case(out, "disc.profile", cfg, [&](Report& r) {
    const auto pts = eval_functional_profile(2, {0.0, 0.5, 0.9, 0.999999});
    for (const auto& p : pts)
      r.compare("radius_" + std::to_string(p.radius), p.norm_series, p.norm_closed, 1e-10);
  });

  run_case(out, "disc.maximize", cfg, [&](Report& r) {
    MaximizeOptions opt;
    opt.seed = cfg.seed;
    const auto res = maximize_wehrl(opt);
    r.inputs = Json{{"nu", 2}, {"n", 2}, {"degree", opt.degree}};
    r.outputs["iterations"] = res.iterations;
    r.outputs["stop_reason"] = res.stop_reason;
    r.outputs["fitted_w"] = Json::array({res.fitted_w.real(), res.fitted_w.imag()});
    r.compare("objective", res.objective, 1.0, 1e-6);
    r.compare("kernel_distance", res.kernel_distance, 0.0, 1e-4, false);
    r.require(res.monotone);
  });
}

void compact_battery(std::vector<Report>& out, const SuiteConfig& cfg) {
  run_case(out, "compact.haar_moments", cfg, [&](Report& r) {
    const auto grid = make_haar_grid(16);
    for (int n = 0; n <= 6; ++n)
      r.compare("k11_" + std::to_string(2 * n), haar_moment(n, 0, grid), 1.0 / (n + 1), 1e-6, false);
  });

  run_case(out, "compact.cg_example", cfg, [&](Report& r) {
    VectorX<Q> v(3);
    v << 1, 0, 1;
    const auto w = wehrl_compact_check(v, 2);
    r.inputs = Json{{"m", 2}, {"n", 2}, {"vector", "(e_2 + e_-2)/sqrt(2)"}};
    r.require(w.exact.has_value());
    if (w.exact) r.compare_exact("exact", *w.exact, Q(2, 15));
    r.compare("numeric", w.integral_numeric, 2.0 / 15, 1e-6, false);
  });

  run_case(out, "compact.casimir", cfg, [&](Report& r) {
    for (int m = 1; m <= 6; ++m) {
      Eigen::VectorXcd top = Eigen::VectorXcd::Zero(m + 1);
      top[0] = 1.0;
      const auto c = casimir_tensor_check(top);
      r.compare("residual_top_m" + std::to_string(m), c.residual, 0.0, cfg.tolerance_abs, false);
      r.compare("casimir_m" + std::to_string(m), c.casimir_deviation, 0.0, cfg.tolerance_abs, false);
    }
  });

  run_case(out, "compact.random_bound", cfg, [&](Report& r) {
    Draw draw(cfg.seed + 2);
    double worst_slack = 1.0, worst_gap = 0.0;
    for (int t = 0; t < 24; ++t) {
      const int m = 1 + t % 6, n = 2 + t % 2;
      const auto w = wehrl_compact_check(draw.unit_vector(m + 1), n);
      worst_slack = std::min(worst_slack, w.slack);
      worst_gap = std::max(worst_gap, std::abs(w.integral_numeric - w.integral_exact));
    }
    r.inputs = Json{{"cases", 24}};
    r.outputs["worst_slack"] = worst_slack;
    r.compare("route_gap", worst_gap, 0.0, 1e-6, false);
    r.require(worst_slack >= -1e-10);
  });
}

}  // namespace

std::vector<Report> run_suite(const std::string& name, const SuiteConfig& config) {
  config.validate();
  std::vector<Report> out;
  auto one = [&](const std::string& n) {
    if (n == "degrees") degrees_battery(out, config);
    else if (n == "selberg") selberg_battery(out, config);
    else if (n == "disc") disc_battery(out, config);
    else if (n == "compact") compact_battery(out, config);
    else throw ConfigError("unknown suite " + n + " (degrees|selberg|disc|compact|all)");
  };
  if (name == "all")
    for (const auto& n : suite_names()) one(n);
  else
    one(name);
  return out;
}

bool all_passed(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

void write_json_lines(std::ostream& os, const std::vector<Report>& reports) {
  for (const auto& r : reports) os << r.to_json().dump() << '\n';
}

void write_csv_summary(std::ostream& os, const std::vector<Report>& reports) {
  os << "index,command,verdict\n";
  for (std::size_t i = 0; i < reports.size(); ++i)
    os << i << ',' << reports[i].command << ',' << to_string(reports[i].verdict) << '\n';
}

ConstantsTable emit_constants_table(const std::vector<DomainParams>& domains,
                                    const std::vector<Rational>& lambdas, const std::vector<int>& ns) {
  ConstantsTable t;
  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "domain,r,a,b,lambda,n,d_lambda,d_lambda_float,c_G,c_G_float,d_H,d_H_float,"
         "wehrl_constant,wehrl_constant_float\n";
  for (const auto& d : domains)
    for (const auto& lambda : lambdas)
      for (int n : ns) {
        const std::string where = d.family_label + " lambda=" + to_string(lambda) + " n=" + std::to_string(n);
        if (!hc_admissible(d, lambda)) {
          t.skipped.push_back("INFO skipped " + where + ": not admissible");
          continue;
        }
        try {
          const PiScaledRational deg = scalar_formal_degree(d, lambda);
          const PiScaledRational cg = c_G(d);
          const Rational dh = hc_degree_scalar(d, lambda);
          const PiScaledRational w = wehrl_constant(d, lambda, n);
          csv << '"' << d.family_label << "\"," << d.r << ',' << d.a << ',' << d.b << ','
              << to_string(lambda) << ',' << n << ',' << deg.to_string() << ',' << deg.to_double()
              << ',' << cg.to_string() << ',' << cg.to_double() << ',' << to_string(dh) << ','
              << to_double(dh) << ',' << w.to_string() << ',' << w.to_double() << '\n';
        } catch (const Error& e) {
          t.skipped.push_back("INFO skipped " + where + ": " + e.what());
        }
      }
  t.csv = csv.str();
  return t;
}

}  // namespace wehrl
