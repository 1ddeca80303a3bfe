#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "wehrl/suite.hpp"

using namespace wehrl;

TEST_CASE("report json round trip") {
  Report r;
  r.command = "disc.wehrl";
  r.seed = 42;
  r.inputs = Json{{"nu", "2"}};
  r.compare_exact("lhs", Rational(21, 10), Rational(21, 10));
  r.compare("x", 1.0, 1.0 + 1e-14, 1e-12);
  const Report back = Report::from_json(r.to_json());
  CHECK(back.to_json() == r.to_json());
  CHECK(back.verdict == Verdict::PASS);
}

TEST_CASE("compare and require set verdicts") {
  Report r;
  CHECK(r.verdict == Verdict::INFO);
  r.require(true);
  CHECK(r.verdict == Verdict::PASS);
  r.compare("off", 1.0, 2.0, 1e-3);
  CHECK(r.verdict == Verdict::FAIL);
  r.require(true);
  CHECK(r.verdict == Verdict::FAIL);
}

TEST_CASE("suite config") {
  const SuiteConfig base;
  const auto cfg = SuiteConfig::from_json(Json{{"seed", 9}, {"convention", "paper"}});
  CHECK(cfg.seed == 9);
  CHECK(cfg.convention == ConstantConvention::paper_plus_one);
  CHECK(cfg.mc_budget == base.mc_budget);
  CHECK(SuiteConfig::from_json(cfg.to_json()).to_json() == cfg.to_json());
  CHECK_THROWS_AS(SuiteConfig::from_json(Json{{"mc_budget", -1}}), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(Json{{"seed", "x"}}), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(Json{{"convention", "other"}}), ConfigError);
}

TEST_CASE("suites pass and are reproducible") {
  SuiteConfig cfg;
  cfg.mc_budget = 20000;
  for (const auto& name : {"degrees", "compact"}) {
    const auto a = run_suite(name, cfg), b = run_suite(name, cfg);
    CHECK(all_passed(a));
    std::ostringstream sa, sb;
    write_json_lines(sa, a);
    write_json_lines(sb, b);
    CHECK(sa.str() == sb.str());
  }
  CHECK_THROWS(run_suite("nope", cfg));
}

TEST_CASE("plus-one convention fails the disc battery") {
  SuiteConfig cfg;
  cfg.convention = ConstantConvention::paper_plus_one;
  CHECK_FALSE(all_passed(run_suite("disc", cfg)));
}

TEST_CASE("csv summary has one row per report") {
  SuiteConfig cfg;
  const auto reports = run_suite("degrees", cfg);
  std::ostringstream os;
  write_csv_summary(os, reports);
  const std::string s = os.str();
  CHECK(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')) == reports.size() + 1);
}
