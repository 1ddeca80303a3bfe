// Serializable record of one verification run.
#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "wehrl/pi_scaled.hpp"
#include "wehrl/rational.hpp"

namespace wehrl {

using Json = nlohmann::ordered_json;

enum class Verdict { PASS, FAIL, INFO };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Verdict verdict = Verdict::INFO;
  std::string timestamp;  // empty unless the caller stamps it
  std::uint64_t seed = 0;

  Json to_json() const;
  static Report from_json(const Json& j);

  /// Records both compared values and the tolerance, and sets the verdict.
  Report& compare(const std::string& name, double actual, double expected, double tolerance,
                  bool relative = true);
  /// Exact comparison; values serialized as strings.
  Report& compare_exact(const std::string& name, const Rational& actual, const Rational& expected);
  Report& compare_exact(const std::string& name, const PiScaledRational& actual,
                        const PiScaledRational& expected);
  /// Downgrades PASS/INFO to FAIL when ok is false; INFO becomes PASS when true.
  Report& require(bool ok);

  bool passed() const { return verdict != Verdict::FAIL; }
};

/// {"num": "...", "den": "...", "float": x}
Json exact_json(const Rational& q);
/// {"num": "...", "den": "...", "pi_power": k, "float": x}
Json exact_json(const PiScaledRational& q);
/// {"num": "...", "den": "...", "sqrt_pi_power": k, "float": x}
Json exact_json(const HalfPiScaled& q);

Rational rational_from_json(const Json& j);
PiScaledRational pi_scaled_from_json(const Json& j);

}  // namespace wehrl
