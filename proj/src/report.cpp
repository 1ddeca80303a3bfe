#include "wehrl/report.hpp"

#include <cmath>
#include <stdexcept>

namespace wehrl {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS:
      return "PASS";
    case Verdict::FAIL:
      return "FAIL";
    case Verdict::INFO:
      return "INFO";
  }
  return "INFO";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "PASS") return Verdict::PASS;
  if (s == "FAIL") return Verdict::FAIL;
  if (s == "INFO") return Verdict::INFO;
  throw std::invalid_argument("unknown verdict " + s);
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  j["verdict"] = to_string(verdict);
  j["timestamp"] = timestamp;
  j["seed"] = seed;
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.outputs = j.at("outputs");
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.timestamp = j.value("timestamp", std::string{});
  r.seed = j.value("seed", std::uint64_t{0});
  return r;
}

Report& Report::require(bool ok) {
  if (!ok)
    verdict = Verdict::FAIL;
  else if (verdict == Verdict::INFO)
    verdict = Verdict::PASS;
  return *this;
}

Report& Report::compare(const std::string& name, double actual, double expected,
                        double tolerance, bool relative) {
  const double diff = std::abs(actual - expected);
  const double scale = relative ? std::max(std::abs(expected), 1e-300) : 1.0;
  const bool ok = std::isfinite(actual) && diff / scale <= tolerance;
  outputs[name] = Json{{"actual", actual},
                       {"expected", expected},
                       {"deviation", diff / scale},
                       {"tolerance", tolerance},
                       {"relative", relative},
                       {"ok", ok}};
  return require(ok);
}

Report& Report::compare_exact(const std::string& name, const Rational& actual,
                              const Rational& expected) {
  const bool ok = actual == expected;
  outputs[name] = Json{{"actual", exact_json(actual)},
                       {"expected", exact_json(expected)},
                       {"tolerance", 0},
                       {"ok", ok}};
  return require(ok);
}

Report& Report::compare_exact(const std::string& name, const PiScaledRational& actual,
                              const PiScaledRational& expected) {
  const bool ok = actual == expected;
  outputs[name] = Json{{"actual", exact_json(actual)},
                       {"expected", exact_json(expected)},
                       {"tolerance", 0},
                       {"ok", ok}};
  return require(ok);
}

Json exact_json(const Rational& q) {
  return Json{{"num", boost::multiprecision::numerator(q).str()},
              {"den", boost::multiprecision::denominator(q).str()},
              {"float", to_double(q)}};
}

Json exact_json(const PiScaledRational& q) {
  return Json{{"num", boost::multiprecision::numerator(q.coeff()).str()},
              {"den", boost::multiprecision::denominator(q.coeff()).str()},
              {"pi_power", q.pi_power()},
              {"float", q.to_double()}};
}

Json exact_json(const HalfPiScaled& q) {
  return Json{{"num", boost::multiprecision::numerator(q.coeff).str()},
              {"den", boost::multiprecision::denominator(q.coeff).str()},
              {"sqrt_pi_power", q.sqrt_pi_power},
              {"float", q.to_double()}};
}

Rational rational_from_json(const Json& j) {
  return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
}

PiScaledRational pi_scaled_from_json(const Json& j) {
  return {rational_from_json(j), j.at("pi_power").get<int>()};
}

}  // namespace wehrl
