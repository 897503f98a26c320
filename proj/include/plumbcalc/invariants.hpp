#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "plumbcalc/graph.hpp"
#include "plumbcalc/seifert.hpp"

namespace plumbcalc {

// Unique solution of M w = diag(M) mod 2; requires a ZHS.
std::vector<std::uint8_t> wu_class(const PlumbingGraph& g);
// (signature - w.M.w) / 8.
std::int64_t mu_bar(const PlumbingGraph& g);
int rokhlin(const PlumbingGraph& g);

struct LaurentPolynomial {
  std::map<std::int64_t, BigInt> coeff;  // exponent -> nonzero coefficient
  BigInt at_one() const;
  BigInt second_derivative_at_one() const;
  bool is_symmetric() const;
};

// Symmetrized (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
LaurentPolynomial alexander_torus(std::int64_t p, std::int64_t q);
// (p^2 - 1)(q^2 - 1) / 12.
BigInt torus_second_derivative_closed_form(std::int64_t p, std::int64_t q);

// lambda(S^3_{1/m}(T(p,q))) = (m/2) Delta''(1).
Rational casson_surgery(std::int64_t p, std::int64_t q, std::int64_t m);
std::int64_t milnor_signature(const BrieskornTriple& t);
// sigma(Milnor fiber) / 8.
std::int64_t casson_brieskorn(const BrieskornTriple& t);

struct InvariantReport {
  BigInt det;
  BigInt h1_order;
  int signature = 0;
  bool is_zhs = false;
  std::optional<std::int64_t> mu_bar;
  std::optional<int> rokhlin;
  std::optional<Rational> casson;
  std::optional<std::int64_t> d, dbar, dunder;
};

InvariantReport invariant_report(const PlumbingGraph& g);
nlohmann::json to_json(const InvariantReport& r);

// Three-leg negative-definite star with canonical legs, if g is one.
std::optional<BrieskornTriple> brieskorn_triple_of(const PlumbingGraph& g);

}  // namespace plumbcalc
