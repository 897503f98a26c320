#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

// Coefficients most significant first: p/q = c[0] - 1/(c[1] - 1/(...)).
using HJExpansion = std::vector<std::int64_t>;

// Requires p > q >= 1 and gcd(p, q) = 1; every entry of the result is >= 2.
HJExpansion hj_expand(std::int64_t p, std::int64_t q);

// Any integer entries are accepted; a vanishing tail throws std::domain_error.
Rational cf_eval(const HJExpansion& e);

// Parses "[a,b,c]" (brackets optional).
HJExpansion parse_expansion(const std::string& text);
std::string format_expansion(const HJExpansion& e);

}  // namespace plumbcalc
