#include <doctest.h>

#include <random>

#include "fuzz_support.hpp"
#include "plumbcalc/invariants.hpp"
#include "plumbcalc/seifert.hpp"
#include "test_support.hpp"

using namespace plumbcalc;
using namespace testing_support;

namespace {

// Exhaustive search over {0,1}^n; returns all characteristic vectors.
std::vector<std::vector<std::uint8_t>> brute_wu(const PlumbingGraph& g) {
  const auto m = small_matrix(g);
  const std::size_t n = g.size();
  std::vector<std::vector<std::uint8_t>> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1) s += m[i][j];
      ok = ((s - m[i][i]) % 2 == 0);
    }
    if (!ok) continue;
    std::vector<std::uint8_t> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = mask >> j & 1;
    found.push_back(w);
  }
  return found;
}

std::int64_t oracle_mu_bar(const PlumbingGraph& g) {
  const auto ws = brute_wu(g);
  REQUIRE(ws.size() == 1);
  const auto m = small_matrix(g);
  std::int64_t wmw = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) wmw += ws[0][i] * ws[0][j] * m[i][j];
  const std::int64_t num = eigen_signature(g) - wmw;
  REQUIRE(num % 8 == 0);
  return num / 8;
}

// Sign count over the Milnor fiber lattice using integer comparisons only.
std::pair<std::int64_t, std::int64_t> oracle_milnor(std::int64_t p, std::int64_t q, std::int64_t r) {
  const std::int64_t P = p * q * r;
  std::int64_t plus = 0, minus = 0;
  for (std::int64_t i = 1; i < p; ++i)
    for (std::int64_t j = 1; j < q; ++j)
      for (std::int64_t k = 1; k < r; ++k) {
        const std::int64_t s = i * q * r + j * p * r + k * p * q;
        if (s % P == 0) continue;
        const std::int64_t band = s / P;
        if (band == 1) ++minus;
        else ++plus;
      }
  return {plus, minus};
}

PlumbingGraph splice_n(std::int64_t n) {
  return splice(sigma1(n), "K(" + std::to_string(n * n + 3 * n + 1) + ")", sigma2(n),
                "K(" + std::to_string(n * n + 3 * n + 3) + ")");
}

std::int64_t formula(std::int64_t n) { return n % 2 ? (n * n + 4 * n + 3) / 8 : (n * n + 2 * n) / 8; }

using Poly = std::map<std::int64_t, BigInt>;

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Poly binom(std::int64_t k) { return Poly{{k, 1}, {0, -1}}; }

}  // namespace

TEST_CASE("wu_class examples") {
  CHECK(wu_class(e8()) == std::vector<std::uint8_t>(8, 0));
  CHECK(wu_class(chain({-3})) == std::vector<std::uint8_t>{1});
  const auto s = star(-1, {{-2}, {-3}, {-7}});
  const auto brute = brute_wu(s);
  REQUIRE(brute.size() == 1);
  CHECK(wu_class(s) == brute[0]);
  CHECK_THROWS_AS(wu_class(e7()), std::invalid_argument);
}

TEST_CASE("wu_class against exhaustive search on move corpus") {
  std::mt19937_64 rng(77);
  const auto seeds = fuzz_seeds();
  for (int seq = 0; seq < 60; ++seq) {
    PlumbingGraph g = seeds[seq % seeds.size()];
    for (int step = 0; step < 4; ++step) g = random_move(g, rng, 14);
    if (g.empty()) continue;
    const auto brute = brute_wu(g);
    REQUIRE(brute.size() == 1);
    CHECK(wu_class(g) == brute[0]);
    CHECK(mu_bar(g) == oracle_mu_bar(g));
  }
}

TEST_CASE("mu_bar and rokhlin examples") {
  CHECK(mu_bar(star(-1, {{-2}, {-3}, {-7}})) == 1);
  CHECK(mu_bar(brieskorn_plumbing(BrieskornTriple::make(3, 4, 13))) == 1);
  CHECK(mu_bar(e8()) == -1);
  CHECK(oracle_mu_bar(e8()) == -1);
  CHECK(mu_bar(splice_n(1)) == 0);
  CHECK(oracle_mu_bar(splice_n(1)) == 0);
  CHECK(rokhlin(star(-1, {{-2}, {-3}, {-7}})) == 1);
  CHECK(rokhlin(splice_n(1)) == 0);
  CHECK(rokhlin(e8()) == 1);
  CHECK(rokhlin(splice_n(2)) == 0);
  CHECK_THROWS_AS(mu_bar(chain({-2, -2})), std::invalid_argument);
}

TEST_CASE("mu_bar closed formula, antisymmetry and splice additivity") {
  for (std::int64_t n = 1; n <= 30; ++n) {
    const auto m2 = mu_bar(sigma2(n));
    CHECK(m2 == formula(n));
    CHECK(mu_bar(sigma1(n)) == -m2);
    CHECK(mu_bar(splice_n(n)) == 0);
  }
}

TEST_CASE("alexander polynomial of torus knots") {
  const auto a23 = alexander_torus(2, 3);
  CHECK(a23.coeff == Poly{{-1, 1}, {0, -1}, {1, 1}});
  CHECK(a23.second_derivative_at_one() == 2);
  CHECK(alexander_torus(3, 4).second_derivative_at_one() == 10);
  CHECK(torus_second_derivative_closed_form(3, 4) == 10);
  CHECK_THROWS_AS(alexander_torus(2, 4), std::invalid_argument);

  for (std::int64_t p = 2; p <= 30; ++p)
    for (std::int64_t q = p + 1; q <= 30; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto a = alexander_torus(p, q);
      CHECK(a.at_one() == 1);
      CHECK(a.is_symmetric());
      CHECK(a.second_derivative_at_one() == torus_second_derivative_closed_form(p, q));
      const std::int64_t lo = a.coeff.begin()->first;
      Poly shifted;
      for (const auto& [k, c] : a.coeff) shifted[k - lo] = c;
      CHECK(mul(mul(shifted, binom(p)), binom(q)) == mul(binom(p * q), binom(1)));
    }
}

TEST_CASE("casson_surgery") {
  CHECK(casson_surgery(2, 3, -1) == Rational(-1));
  CHECK(casson_surgery(3, 4, -1) == Rational(-5));
  CHECK(casson_surgery(2, 3, 2) == Rational(2));
  CHECK_THROWS_AS(casson_surgery(2, 3, 0), std::invalid_argument);
}

TEST_CASE("milnor signature") {
  CHECK(milnor_signature(BrieskornTriple::make(2, 3, 5)) == -8);
  CHECK(casson_brieskorn(BrieskornTriple::make(2, 3, 5)) == -1);
  CHECK(oracle_milnor(2, 3, 7) == std::make_pair<std::int64_t, std::int64_t>(2, 10));
  CHECK(milnor_signature(BrieskornTriple::make(2, 3, 7)) == -8);
  CHECK(casson_brieskorn(BrieskornTriple::make(2, 3, 7)) == -1);
  for (auto t : {BrieskornTriple::make(2, 5, 7), BrieskornTriple::make(3, 4, 13), BrieskornTriple::make(2, 7, 15)}) {
    const auto [plus, minus] = oracle_milnor(t.p, t.q, t.r);
    CHECK(milnor_signature(t) == plus - minus);
  }
}

TEST_CASE("casson routes agree") {
  for (std::int64_t p = 2; p <= 12; ++p)
    for (std::int64_t q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto t = BrieskornTriple::make(p, q, p * q - 1);
      const auto lambda = casson_brieskorn(t);
      CHECK(Rational(lambda) == casson_surgery(p, q, -1));
      CHECK(((lambda % 2) + 2) % 2 == rokhlin(brieskorn_plumbing(t)));
    }
  for (std::int64_t n = 1; n <= 15; ++n) {
    const BigInt sum = casson_brieskorn(sigma1_triple(n)) + casson_brieskorn(sigma2_triple(n));
    CHECK(sum == -torus_second_derivative_closed_form(n + 1, n + 2));
  }
}

TEST_CASE("invariant report") {
  const auto r8 = invariant_report(e8());
  CHECK(r8.det == 1);
  CHECK(r8.h1_order == 1);
  CHECK(r8.signature == -8);
  CHECK(r8.is_zhs);
  CHECK(r8.mu_bar == -1);
  CHECK(r8.rokhlin == 1);
  REQUIRE(r8.casson.has_value());
  CHECK(*r8.casson == Rational(-1));
  CHECK(r8.d == 2);
  CHECK(r8.dbar == 2);
  CHECK(r8.dunder == 2);

  const auto r7 = invariant_report(e7());
  CHECK(r7.det == -2);
  CHECK(r7.h1_order == 2);
  CHECK_FALSE(r7.is_zhs);
  CHECK_FALSE(r7.mu_bar.has_value());
  CHECK_FALSE(r7.rokhlin.has_value());

  const auto rs = invariant_report(splice_n(1));
  CHECK(rs.is_zhs);
  CHECK(rs.mu_bar == 0);
  CHECK(rs.rokhlin == 0);
  CHECK_FALSE(rs.casson.has_value());

  const auto j = to_json(r8);
  CHECK(j["det"] == 1);
  CHECK(j["is_zhs"] == true);
  CHECK(j["casson"] == "-1/1");
  CHECK(j["mu_bar"] == -1);
  CHECK(to_json(r7)["mu_bar"].is_null());
}

TEST_CASE("brieskorn_triple_of") {
  CHECK(brieskorn_triple_of(e8()) == BrieskornTriple{2, 3, 5});
  CHECK(brieskorn_triple_of(star(-1, {{-2}, {-3}, {-7}})) == BrieskornTriple{2, 3, 7});
  CHECK_FALSE(brieskorn_triple_of(e7()).has_value());
  CHECK_FALSE(brieskorn_triple_of(splice_n(1)).has_value());
  CHECK_FALSE(brieskorn_triple_of(chain({-1})).has_value());
}
