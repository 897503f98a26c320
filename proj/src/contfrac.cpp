#include "plumbcalc/contfrac.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plumbcalc {

HJExpansion hj_expand(std::int64_t p, std::int64_t q) {
  if (q < 1 || p <= q) throw std::invalid_argument("hj_expand needs p > q >= 1");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("hj_expand needs coprime p, q");
  HJExpansion out;
  while (q > 0) {
    const std::int64_t c = (p + q - 1) / q;
    out.push_back(c);
    const std::int64_t r = c * q - p;
    p = q;
    q = r;
  }
  return out;
}

Rational cf_eval(const HJExpansion& e) {
  if (e.empty()) throw std::domain_error("empty continued fraction");
  Rational x = e.back();
  for (auto it = e.rbegin() + 1; it != e.rend(); ++it) {
    if (x == 0) throw std::domain_error("malformed continued fraction: division by zero");
    x = Rational(*it) - 1 / x;
  }
  return x;
}

HJExpansion parse_expansion(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '[' && c != ']' && c != ' ') s += c;
  HJExpansion out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw std::invalid_argument("bad continued fraction entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty continued fraction");
  return out;
}

std::string format_expansion(const HJExpansion& e) {
  std::string s = "[";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + "]";
}

}  // namespace plumbcalc
