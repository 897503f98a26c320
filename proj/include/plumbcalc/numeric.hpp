#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace plumbcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& x);
// "num/den", den > 0, reduced.
std::string to_string(const Rational& x);

std::int64_t to_int64(const BigInt& x);
BigInt abs(const BigInt& x);
int sign(const BigInt& x);
int sign(const Rational& x);

// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace plumbcalc
