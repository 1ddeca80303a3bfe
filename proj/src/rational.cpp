#include "wehrl/rational.hpp"

#include <stdexcept>

namespace wehrl {

Rational pochhammer(const Rational& x, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= x + i;
  return out;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return Rational(out);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    if (const auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos || s.find_first_of("eE") != std::string::npos)
        throw std::invalid_argument("bad rational literal: " + s);
      const bool negative = s.front() == '-';
      std::string whole = s.substr(0, dot);
      std::string fraction = s.substr(dot + 1);
      if (whole == "-" || whole == "+" || whole.empty()) whole += "0";
      BigInt scale = 1;
      for (std::size_t i = 0; i < fraction.size(); ++i) scale *= 10;
      Rational frac_part = fraction.empty() ? Rational(0) : Rational(BigInt(fraction), scale);
      Rational w{BigInt(whole)};
      return negative ? w - frac_part : w + frac_part;
    }
    if (const auto slash = s.find('/'); slash != std::string::npos) {
      const BigInt num(s.substr(0, slash));
      const BigInt den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator: " + s);
      return Rational(num, den);
    }
    return Rational(BigInt(s));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

std::string to_string(const Rational& q) {
  if (is_integer(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt floor(const Rational& q) {
  const BigInt n = boost::multiprecision::numerator(q);
  const BigInt d = boost::multiprecision::denominator(q);
  BigInt quotient = n / d;  // truncates toward zero
  if (n < 0 && quotient * d != n) quotient -= 1;
  return quotient;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  os << to_string(z.re);
  if (z.im != 0) os << (z.im > 0 ? "+" : "") << to_string(z.im) << "i";
  return os;
}

}  // namespace wehrl
