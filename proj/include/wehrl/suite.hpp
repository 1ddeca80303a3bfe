// Verification batteries behind `wehrl-lab suite` and the constants table.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wehrl/disc/projection.hpp"
#include "wehrl/domain.hpp"
#include "wehrl/report.hpp"

namespace wehrl {

struct SuiteConfig {
  int quadrature_nodes = 0;  // 0: per-method automatic choice
  long mc_budget = 1000000;
  std::uint64_t seed = 1;
  double tolerance_abs = 1e-12;
  double tolerance_rel = 1e-10;
  ConstantConvention convention = ConstantConvention::corrected_minus_one;

  /// Throws ConfigError.
  void validate() const;
  Json to_json() const;
  /// Missing keys keep the values already in `base`.
  static SuiteConfig from_json(const Json& j, SuiteConfig base);
  static SuiteConfig from_json(const Json& j);
};

const std::vector<std::string>& suite_names();

/// Runs one battery ("degrees", "selberg", "disc", "compact") or "all", in a
/// fixed order. Individual failures become FAIL reports; unknown names throw
/// ConfigError.
std::vector<Report> run_suite(const std::string& name, const SuiteConfig& config);

bool all_passed(const std::vector<Report>& reports);
void write_json_lines(std::ostream& os, const std::vector<Report>& reports);
/// command, verdict, and a short key summary per report.
void write_csv_summary(std::ostream& os, const std::vector<Report>& reports);

struct ConstantsTable {
  std::string csv;
  std::vector<std::string> skipped;  // INFO lines for grid points left out
};

/// One row per admissible (domain, λ, n): d_λ, c_G, d^H_λ and the Wehrl
/// constant c_G^{n-1}(d^H_λ)^n / d^H_{nλ}, exact and as floats.
ConstantsTable emit_constants_table(const std::vector<DomainParams>& domains,
                                    const std::vector<Rational>& lambdas,
                                    const std::vector<int>& ns);

}  // namespace wehrl
