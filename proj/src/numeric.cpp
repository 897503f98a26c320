#include "plumbcalc/numeric.hpp"

#include <limits>
#include <stdexcept>

namespace plumbcalc {

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

std::int64_t to_int64(const BigInt& x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
  return x.convert_to<std::int64_t>();
}

BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

int sign(const BigInt& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

namespace {

BigInt parse_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(trim(text)));
  BigInt num = parse_integer(trim(text.substr(0, slash)));
  BigInt den = parse_integer(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace plumbcalc
