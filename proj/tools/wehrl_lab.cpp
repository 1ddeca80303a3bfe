// wehrl-lab: command-line front end. Every command prints one JSON report per
// line; exit status is 0 unless a report FAILs (1) or the input is bad (2).
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wehrl/compact.hpp"
#include "wehrl/degrees.hpp"
#include "wehrl/disc/projection.hpp"
#include "wehrl/disc/wehrl.hpp"
#include "wehrl/selberg.hpp"
#include "wehrl/suite.hpp"

using namespace wehrl;
using Q = Rational;
using Cd = std::complex<double>;

namespace {

struct Globals {
  std::string out_dir;
  bool timestamp = false;
  bool pretty = false;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "a" or "a:b" (real:imaginary), each part an exact rational.
GaussianRational parse_complex(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) return {parse_rational(s)};
  return {parse_rational(s.substr(0, colon)), parse_rational(s.substr(colon + 1))};
}

PolyFun<GaussianRational> parse_poly(const Q& nu, const std::string& list) {
  const auto items = split(list);
  if (items.empty()) throw std::invalid_argument("empty coefficient list");
  PolyFun<GaussianRational> f{nu, VectorX<GaussianRational>(static_cast<Eigen::Index>(items.size()))};
  for (std::size_t i = 0; i < items.size(); ++i) f.coeffs[static_cast<Eigen::Index>(i)] = parse_complex(items[i]);
  return f;
}

PolyFun<Cd> to_float(const PolyFun<GaussianRational>& f) {
  PolyFun<Cd> g{f.nu, Eigen::VectorXcd(f.coeffs.size())};
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) g.coeffs[i] = to_complex(f.coeffs[i]);
  return g;
}

Json poly_json(const PolyFun<GaussianRational>& f) {
  Json c = Json::array();
  for (const auto& x : f.coeffs) {
    std::ostringstream os;
    os << x;
    c.push_back(os.str());
  }
  return Json{{"nu", to_string(f.nu)}, {"coeffs", c}};
}

std::string now_iso() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

int emit(const Globals& g, std::vector<Report> reports) {
  if (g.timestamp)
    for (auto& r : reports) r.timestamp = now_iso();
  std::ostringstream lines;
  for (const auto& r : reports) lines << (g.pretty ? r.to_json().dump(2) : r.to_json().dump()) << '\n';
  std::cout << lines.str();
  if (!g.out_dir.empty()) {
    std::filesystem::create_directories(g.out_dir);
    const std::string name = reports.empty() ? "empty" : reports.front().command;
    std::ofstream(std::filesystem::path(g.out_dir) / (name + ".jsonl")) << lines.str();
  }
  return all_passed(reports) ? 0 : 1;
}

int emit(const Globals& g, Report r) { return emit(g, std::vector<Report>{std::move(r)}); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks of Wehrl-type inequalities for holomorphic discrete series"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out-dir", g.out_dir, "Also write reports to <dir>/<command>.jsonl");
  app.add_flag("--timestamp", g.timestamp, "Stamp reports with the current UTC time");
  app.add_flag("--pretty", g.pretty, "Indent JSON output");
  std::function<int()> action;

  // domains ------------------------------------------------------------------
  auto* domains = app.add_subcommand("domains", "List the built-in domain presets");
  std::string domains_format = "csv";
  domains->add_option("--format", domains_format)->check(CLI::IsMember({"csv", "json"}));
  domains->callback([&] {
    action = [&] {
      if (domains_format == "csv") {
        std::cout << "key,family,r,a,b,p,N,n1\n";
        for (const auto& p : domain_presets()) {
          const auto inv = derived_invariants(p.params);
          std::cout << p.key << ",\"" << p.params.family_label << "\"," << p.params.r << ','
                    << p.params.a << ',' << p.params.b << ',' << inv.p << ',' << inv.N << ','
                    << inv.n1 << '\n';
        }
      } else {
        for (const auto& p : domain_presets()) {
          const auto inv = derived_invariants(p.params);
          std::cout << Json{{"key", p.key}, {"family", p.params.family_label}, {"r", p.params.r},
                            {"a", p.params.a}, {"b", p.params.b}, {"p", inv.p}, {"N", inv.N},
                            {"n1", inv.n1}}
                           .dump()
                    << '\n';
        }
      }
      return 0;
    };
  });

  // degrees ------------------------------------------------------------------
  auto* degrees = app.add_subcommand("degrees", "Formal degree, c_G, HC degree and Wehrl constant");
  std::string domain_text, lambda_text, formula = "proof";
  int degree_n = 0;
  degrees->add_option("--domain", domain_text, "Preset key/label or r,a,b")->required();
  degrees->add_option("--lambda", lambda_text, "Scalar weight (rational)")->required();
  degrees->add_option("--n", degree_n, "Tensor power for the Wehrl constant");
  degrees->add_option("--formula", formula, "c_G formula for Sp(r,R)")
      ->check(CLI::IsMember({"proof", "statement"}));
  degrees->callback([&] {
    action = [&] {
      const DomainParams d = parse_domain(domain_text);
      const Q lambda = parse_rational(lambda_text);
      const CgFormula f = formula == "proof" ? CgFormula::proof : CgFormula::statement;
      Report r;
      r.command = "degrees";
      const auto inv = derived_invariants(d);
      r.inputs = Json{{"domain", d.family_label}, {"r", d.r}, {"a", d.a}, {"b", d.b},
                      {"lambda", to_string(lambda)}, {"formula", formula}};
      r.outputs["p"] = inv.p;
      r.outputs["N"] = inv.N;
      r.outputs["admissible"] = hc_admissible(d, lambda);
      const PiScaledRational deg = scalar_formal_degree(d, lambda);
      const PiScaledRational cg = c_G(d, f);
      r.outputs["d_lambda"] = exact_json(deg);
      r.outputs["c_G"] = exact_json(cg);
      if (f == CgFormula::proof) {
        r.outputs["d_H"] = exact_json(hc_degree_scalar(d, lambda));
        if (degree_n >= 1) r.outputs["wehrl_constant"] = exact_json(wehrl_constant(d, lambda, degree_n));
      } else {
        const auto ratio = deg / cg;
        r.outputs["d_lambda_over_c_G"] = exact_json(ratio);
      }
      r.require(true);
      return emit(g, r);
    };
  });

  // selberg ------------------------------------------------------------------
  auto* selberg = app.add_subcommand("selberg", "Selberg integral: closed form and numerics");
  int sel_r = 1;
  std::string sel_a = "0", sel_b = "0", sel_gamma = "0", sel_method = "auto";
  long sel_budget = 0;
  std::uint64_t sel_seed = 1;
  selberg->add_option("--r", sel_r)->required();
  selberg->add_option("--a", sel_a)->required();
  selberg->add_option("--b", sel_b)->required();
  selberg->add_option("--gamma", sel_gamma)->required();
  selberg->add_option("--method", sel_method)
      ->check(CLI::IsMember({"auto", "gauss_jacobi", "ordered_simplex", "monte_carlo"}));
  selberg->add_option("--budget", sel_budget, "Nodes per axis or Monte Carlo samples (0: default)");
  selberg->add_option("--seed", sel_seed);
  selberg->callback([&] {
    action = [&] {
      const SelbergSpec spec{sel_r, parse_rational(sel_a), parse_rational(sel_b), parse_rational(sel_gamma)};
      const SelbergOptions opt{selberg_method_from_string(sel_method), sel_budget, sel_seed};
      Report r;
      r.command = "selberg";
      r.seed = sel_seed;
      r.inputs = Json{{"r", spec.r}, {"a", to_string(spec.a)}, {"b", to_string(spec.b)},
                      {"gamma", to_string(spec.gamma)}, {"method", sel_method}, {"budget", sel_budget}};
      const auto closed = selberg_closed(spec);
      if (closed.exact) r.outputs["closed_exact"] = exact_json(*closed.exact);
      r.outputs["closed"] = closed.value();
      const auto est = selberg_numeric(spec, opt);
      r.outputs["numeric"] = Json{{"value", est.value}, {"error", est.error},
                                  {"error_kind", est.error_is_stderr ? "stderr" : "abs_err_bound"},
                                  {"samples_or_nodes", est.samples_or_nodes},
                                  {"method", to_string(est.method)}};
      const double tol = est.error_is_stderr ? 3 * est.error : std::max(est.error, 1e-12 * closed.value());
      r.compare("numeric_vs_closed", est.value, closed.value(), tol, false);
      return emit(g, r);
    };
  });

  // disc ---------------------------------------------------------------------
  auto* disc = app.add_subcommand("disc", "Weighted Bergman spaces on the unit disc");
  disc->require_subcommand(1);
  std::string nu_text = "2", mu_text = "2", coeffs_text, f_text, g_text, convention = "corrected",
              c_text = "0", radii_text = "0,0.5,0.9,0.99,0.999", remainder;
  int disc_n = 2, disc_k = -1, disc_degree = 12, disc_p = 0, max_iters = 200000;
  std::uint64_t disc_seed = 1;
  double tol = 1e-10, kernel_w = -1;
  auto add_nu = [&](CLI::App* s) { s->add_option("--nu", nu_text, "Weight ν (rational > 1)"); };

  auto* d_norm = disc->add_subcommand("norm", "Exact norm and optional quadrature L^p norm");
  add_nu(d_norm);
  d_norm->add_option("--coeffs", coeffs_text, "Coefficients c0,c1,... (re or re:im)")->required();
  d_norm->add_option("--p", disc_p, "Even p for the quadrature route");
  d_norm->callback([&] {
    action = [&] {
      const auto f = parse_poly(parse_rational(nu_text), coeffs_text);
      Report r;
      r.command = "disc.norm";
      r.inputs = poly_json(f);
      r.outputs["norm2"] = exact_json(norm2_exact(f));
      if (disc_p > 0) {
        r.inputs["p"] = disc_p;
        const Q exact = norm2_exact(power(f, disc_p / 2));
        r.outputs["norm_p_exact"] = exact_json(exact);
        r.compare("norm_p_numeric", norm_p_numeric(to_float(f), disc_p), to_double(exact), 1e-10);
      }
      r.require(true);
      return emit(g, r);
    };
  });

  auto* d_project = disc->add_subcommand("project", "Q_k projections of f ⊗ g");
  d_project->add_option("--mu", mu_text);
  add_nu(d_project);
  d_project->add_option("--f", f_text, "Coefficients of f")->required();
  d_project->add_option("--g", g_text, "Coefficients of g")->required();
  d_project->add_option("--k", disc_k, "Single k (default: all, with completeness)");
  d_project->add_option("--convention", convention)->check(CLI::IsMember({"paper", "corrected"}));
  d_project->callback([&] {
    action = [&] {
      const auto f = parse_poly(parse_rational(mu_text), f_text);
      const auto h = parse_poly(parse_rational(nu_text), g_text);
      const auto conv = convention_from_string(convention);
      Report r;
      r.command = "disc.project";
      r.inputs = Json{{"f", poly_json(f)}, {"g", poly_json(h)}, {"convention", convention}};
      if (disc_k >= 0) {
        const auto q = qk_project(tensor(f, h), {f.nu, h.nu, disc_k, conv});
        r.inputs["k"] = disc_k;
        r.outputs["c_squared"] = exact_json(q.c_squared);
        r.outputs["unscaled"] = poly_json(q.unscaled);
        r.outputs["mass"] = exact_json(q.norm2());
        r.require(true);
      } else {
        const auto c = completeness(f, h, conv);
        Json masses = Json::array();
        for (const auto& m : c.masses) masses.push_back(exact_json(m));
        r.outputs["masses"] = masses;
        r.compare_exact("completeness", c.total, c.expected);
      }
      return emit(g, r);
    };
  });

  auto* d_wehrl = disc->add_subcommand("wehrl", "‖f^n‖² against ‖f‖^{2n}");
  add_nu(d_wehrl);
  d_wehrl->add_option("--n", disc_n);
  d_wehrl->add_option("--coeffs", coeffs_text);
  d_wehrl->add_option("--kernel-w", kernel_w, "Use the truncated kernel K_w (real w in [0,1))");
  d_wehrl->add_option("--degree", disc_degree, "Kernel truncation degree");
  d_wehrl->callback([&] {
    action = [&] {
      Report r;
      r.command = "disc.wehrl";
      const Q nu = parse_rational(nu_text);
      r.inputs = Json{{"nu", to_string(nu)}, {"n", disc_n}};
      if (kernel_w >= 0) {
        const auto k = kernel_poly<Cd>(nu, kernel_w, disc_degree);
        const auto w = wehrl_check(k, disc_n);
        r.inputs["kernel_w"] = kernel_w;
        r.inputs["degree"] = disc_degree;
        r.outputs["lhs"] = w.lhs;
        r.outputs["rhs"] = w.rhs;
        r.outputs["slack"] = w.slack;
        r.outputs["tail_bound"] = kernel_tail_bound(nu, kernel_w, disc_degree);
        r.compare("slack", w.slack, 0.0, 1e-8, false);
      } else {
        if (coeffs_text.empty()) throw std::invalid_argument("--coeffs or --kernel-w required");
        const auto f = parse_poly(nu, coeffs_text);
        const auto w = wehrl_check(f, disc_n);
        r.inputs["f"] = poly_json(f);
        r.outputs["lhs"] = exact_json(w.lhs);
        r.outputs["rhs"] = exact_json(w.rhs);
        r.outputs["slack"] = exact_json(w.slack);
        r.require(w.slack >= 0);
      }
      return emit(g, r);
    };
  });

  auto* d_improved = disc->add_subcommand("improved", "Wehrl inequality with the remainder term");
  add_nu(d_improved);
  d_improved->add_option("--n", disc_n);
  d_improved->add_option("--coeffs", coeffs_text)->required();
  d_improved->add_option("--convention", convention, "paper: (2ν+3)(2ν+4) remainder; corrected: sharp remainder")
      ->check(CLI::IsMember({"paper", "corrected"}));
  d_improved->add_option("--remainder", remainder, "Override: paper|sharp");
  d_improved->callback([&] {
    action = [&] {
      const auto f = parse_poly(parse_rational(nu_text), coeffs_text);
      const RemainderConstant which = !remainder.empty() ? remainder_from_string(remainder)
                                      : convention == "paper" ? RemainderConstant::paper
                                                              : RemainderConstant::sharp;
      const auto res = improved_check(f, disc_n, which);
      Report r;
      r.command = "disc.improved";
      r.inputs = Json{{"f", poly_json(f)}, {"n", disc_n}, {"remainder_constant", to_string(which)}};
      r.outputs["lhs"] = exact_json(res.lhs);
      r.outputs["rhs"] = exact_json(res.rhs);
      r.outputs["remainder"] = exact_json(res.remainder);
      r.outputs["slack"] = exact_json(res.slack);
      r.require(res.slack >= 0);
      return emit(g, r);
    };
  });

  auto* d_max = disc->add_subcommand("maximize", "Projected gradient ascent of ‖f^n‖² on the sphere");
  add_nu(d_max);
  d_max->add_option("--n", disc_n);
  d_max->add_option("--degree", disc_degree);
  d_max->add_option("--seed", disc_seed);
  d_max->add_option("--max-iters", max_iters);
  d_max->add_option("--tol", tol);
  d_max->callback([&] {
    action = [&] {
      MaximizeOptions opt;
      opt.nu = parse_rational(nu_text);
      opt.n = disc_n;
      opt.degree = disc_degree;
      opt.seed = disc_seed;
      opt.max_iters = max_iters;
      opt.tol = tol;
      const auto res = maximize_wehrl(opt);
      Report r;
      r.command = "disc.maximize";
      r.seed = disc_seed;
      r.inputs = Json{{"nu", to_string(opt.nu)}, {"n", opt.n}, {"degree", opt.degree},
                      {"max_iters", max_iters}, {"tol", tol}};
      r.outputs["iterations"] = res.iterations;
      r.outputs["gradient_norm"] = res.gradient_norm;
      r.outputs["stop_reason"] = res.stop_reason;
      r.outputs["monotone"] = res.monotone;
      r.outputs["fitted_w"] = Json::array({res.fitted_w.real(), res.fitted_w.imag()});
      r.compare("objective", res.objective, 1.0, 1e-6);
      r.compare("kernel_distance", res.kernel_distance, 0.0, 1e-4, false);
      return emit(g, r);
    };
  });

  auto* d_ode = disc->add_subcommand("ode", "Series solution of f''f = ((ν+1)/ν) f'^2");
  add_nu(d_ode);
  d_ode->add_option("--c", c_text, "f'(0) (re or re:im)");
  d_ode->add_option("--degree", disc_degree);
  d_ode->callback([&] {
    action = [&] {
      const Q nu = parse_rational(nu_text);
      const GaussianRational c = parse_complex(c_text);
      const auto f = ode_solve<GaussianRational>(nu, c, disc_degree);
      const auto k = kernel_poly<GaussianRational>(nu, ScalarTraits<GaussianRational>::conj(c) / nu,
                                                   disc_degree);
      Report r;
      r.command = "disc.ode";
      std::ostringstream cs;
      cs << c;
      r.inputs = Json{{"nu", to_string(nu)}, {"c", cs.str()}, {"degree", disc_degree}};
      r.outputs["solution"] = poly_json(f);
      r.outputs["kernel_conj_w"] = cs.str() + " / nu";
      r.outputs["matches_kernel"] = f.coeffs == k.coeffs;
      r.require(f.coeffs == k.coeffs);
      return emit(g, r);
    };
  });

  auto* d_profile = disc->add_subcommand("profile", "‖K_w‖ along radii");
  add_nu(d_profile);
  d_profile->add_option("--radii", radii_text);
  d_profile->callback([&] {
    action = [&] {
      std::vector<double> radii;
      for (const auto& s : split(radii_text)) radii.push_back(std::stod(s));
      Report r;
      r.command = "disc.profile";
      r.inputs = Json{{"nu", nu_text}, {"radii", radii}};
      Json pts = Json::array();
      for (const auto& p : eval_functional_profile(parse_rational(nu_text), radii)) {
        pts.push_back(Json{{"radius", p.radius}, {"norm", p.norm_series}, {"closed", p.norm_closed},
                           {"terms", p.terms}});
        r.compare("r=" + std::to_string(p.radius), p.norm_series, p.norm_closed, 1e-10);
      }
      r.outputs["profile"] = pts;
      return emit(g, r);
    };
  });

  // compact ------------------------------------------------------------------
  auto* compact = app.add_subcommand("compact", "SU(2) compact Wehrl integral");
  int cm = 1, cn = 2, grid_order = 0;
  std::string vector_text;
  bool random = false;
  std::uint64_t compact_seed = 1;
  compact->add_option("--m", cm, "Highest weight (dim m+1)")->required();
  compact->add_option("--n", cn, "Tensor power")->required();
  compact->add_option("--vector", vector_text, "Weight-basis coefficients e_m, e_{m-2}, ... (re or re:im)");
  compact->add_flag("--random", random, "Random unit vector");
  compact->add_option("--seed", compact_seed);
  compact->add_option("--grid-order", grid_order, "Haar grid order (0: 2nm+4)");
  compact->callback([&] {
    action = [&] {
      Eigen::VectorXcd v;
      std::optional<VectorX<Q>> exact_in;
      if (random) {
        v = random_unit_vector(cm, compact_seed);
      } else if (!vector_text.empty()) {
        const auto items = split(vector_text);
        if (static_cast<int>(items.size()) != cm + 1)
          throw std::invalid_argument("--vector needs m+1 entries");
        v.resize(cm + 1);
        VectorX<Q> re(cm + 1);
        bool real = true;
        for (int i = 0; i <= cm; ++i) {
          const auto z = parse_complex(items[i]);
          v[i] = to_complex(z);
          re[i] = z.re;
          real = real && z.im == 0;
        }
        if (real) exact_in = re;
      } else {
        v = Eigen::VectorXcd::Zero(cm + 1);
        v[0] = 1.0;
      }
      Report r = compact_report(v, cn, grid_order, compact_seed);
      if (exact_in)
        if (const auto w = wehrl_compact_check(*exact_in, cn, grid_order); w.exact)
          r.outputs["exact_rational"] = exact_json(*w.exact);
      return emit(g, r);
    };
  });

  // suite --------------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "Run verification batteries");
  std::string suite_name = "all", config_path, csv_path, suite_convention;
  SuiteConfig flags;
  suite->add_option("--name", suite_name)->check(CLI::IsMember({"all", "degrees", "selberg", "disc", "compact"}));
  suite->add_option("--config", config_path, "JSON config file (flags override it)");
  auto* o_seed = suite->add_option("--seed", flags.seed);
  auto* o_budget = suite->add_option("--mc-budget", flags.mc_budget);
  auto* o_nodes = suite->add_option("--nodes", flags.quadrature_nodes);
  auto* o_abs = suite->add_option("--tol-abs", flags.tolerance_abs);
  auto* o_rel = suite->add_option("--tol-rel", flags.tolerance_rel);
  auto* o_conv = suite->add_option("--convention", suite_convention)->check(CLI::IsMember({"paper", "corrected"}));
  suite->add_option("--csv", csv_path, "Write a CSV summary");
  suite->callback([&] {
    action = [&] {
      SuiteConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot read " + config_path);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const std::exception& e) {
          throw ConfigError(std::string("bad config JSON: ") + e.what());
        }
        cfg = SuiteConfig::from_json(j, cfg);
      }
      if (o_seed->count()) cfg.seed = flags.seed;
      if (o_budget->count()) cfg.mc_budget = flags.mc_budget;
      if (o_nodes->count()) cfg.quadrature_nodes = flags.quadrature_nodes;
      if (o_abs->count()) cfg.tolerance_abs = flags.tolerance_abs;
      if (o_rel->count()) cfg.tolerance_rel = flags.tolerance_rel;
      if (o_conv->count()) cfg.convention = convention_from_string(suite_convention);
      cfg.validate();
      const auto reports = run_suite(suite_name, cfg);
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        write_csv_summary(csv, reports);
      }
      return emit(g, reports);
    };
  });

  // table --------------------------------------------------------------------
  auto* table = app.add_subcommand("table", "CSV of Wehrl constants over a grid");
  std::string table_domains, table_lambdas, table_ns = "2";
  table->add_option("--domains", table_domains, "Comma-separated presets")->required();
  table->add_option("--lambdas", table_lambdas, "Comma-separated weights");
  table->add_option("--ns", table_ns, "Comma-separated tensor powers");
  table->callback([&] {
    action = [&] {
      std::vector<DomainParams> ds;
      for (const auto& s : split(table_domains, ';').size() > 1 ? split(table_domains, ';')
                                                                 : split(table_domains))
        ds.push_back(parse_domain(s));
      std::vector<Q> lambdas;
      for (const auto& s : split(table_lambdas)) lambdas.push_back(parse_rational(s));
      std::vector<int> ns;
      for (const auto& s : split(table_ns)) ns.push_back(std::stoi(s));
      const auto t = emit_constants_table(ds, lambdas, ns);
      std::cout << t.csv;
      for (const auto& s : t.skipped) std::cerr << s << '\n';
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 0;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", e.what()}}.dump() << '\n';
    return 2;
  }
}
