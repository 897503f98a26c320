#include "plumbcalc/invariants.hpp"

#include <stdexcept>

#include "plumbcalc/graded_root.hpp"

namespace plumbcalc {

std::vector<std::uint8_t> wu_class(const PlumbingGraph& g) {
  // Unique exactly when det is odd; mu_bar below still demands a homology sphere.
  if (determinant(g) % 2 == 0) throw std::invalid_argument("wu_class requires an odd determinant");
  const std::size_t n = g.size();
  const std::size_t words = (n + 1 + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
  auto flip = [&](std::size_t r, std::size_t c) { rows[r][c / 64] ^= std::uint64_t(1) << (c % 64); };
  auto bit = [&](std::size_t r, std::size_t c) { return (rows[r][c / 64] >> (c % 64)) & 1; };
  for (std::size_t v = 0; v < n; ++v)
    if (g.weight(v) & 1) {
      flip(v, v);
      flip(v, n);
    }
  for (const auto& [a, b] : g.edges()) {
    flip(a, b);
    flip(b, a);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !bit(piv, col)) ++piv;
    if (piv == n) throw std::logic_error("wu_class: singular mod 2");
    std::swap(rows[piv], rows[col]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != col && bit(r, col))
        for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[col][k];
  }
  std::vector<std::uint8_t> w(n);
  for (std::size_t v = 0; v < n; ++v) w[v] = static_cast<std::uint8_t>(bit(v, n));
  return w;
}

std::int64_t mu_bar(const PlumbingGraph& g) {
  if (!is_homology_sphere(g)) throw std::invalid_argument("mu_bar requires a homology sphere");
  const auto w = wu_class(g);
  BigInt square = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (w[v]) square += g.weight(v);
  for (const auto& [a, b] : g.edges())
    if (w[a] && w[b]) square += 2;
  const BigInt num = BigInt(signature(g)) - square;
  if (num % 8 != 0) throw std::logic_error("mu_bar: sigma - w.w not divisible by 8");
  return to_int64(num / 8);
}

int rokhlin(const PlumbingGraph& g) {
  const auto m = mu_bar(g);
  return static_cast<int>(((m % 2) + 2) % 2);
}

BigInt LaurentPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& [k, c] : coeff) s += c;
  return s;
}

BigInt LaurentPolynomial::second_derivative_at_one() const {
  BigInt s = 0;
  for (const auto& [k, c] : coeff) s += c * k * (k - 1);
  return s;
}

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [k, c] : coeff) {
    auto it = coeff.find(-k);
    if (it == coeff.end() || it->second != c) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<BigInt>;  // ascending degree

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly t_power_minus_one(std::int64_t k) {
  Poly p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = -1;
  p[k] = 1;
  return p;
}

// Exact division by a monic polynomial.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const BigInt c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("polynomial division is not exact");
  return q;
}

}  // namespace

LaurentPolynomial alexander_torus(std::int64_t p, std::int64_t q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw std::invalid_argument("alexander_torus needs coprime p, q >= 2");
  const Poly num = multiply(t_power_minus_one(p * q), t_power_minus_one(1));
  const Poly den = multiply(t_power_minus_one(p), t_power_minus_one(q));
  const Poly delta = divide_exact(num, den);
  const std::int64_t shift = (p - 1) * (q - 1) / 2;
  LaurentPolynomial out;
  for (std::size_t k = 0; k < delta.size(); ++k)
    if (delta[k] != 0) out.coeff[static_cast<std::int64_t>(k) - shift] = delta[k];
  return out;
}

BigInt torus_second_derivative_closed_form(std::int64_t p, std::int64_t q) {
  return BigInt(p * p - 1) * (q * q - 1) / 12;
}

Rational casson_surgery(std::int64_t p, std::int64_t q, std::int64_t m) {
  if (m == 0) throw std::invalid_argument("casson_surgery: m must be nonzero");
  return Rational(m, 2) * Rational(alexander_torus(p, q).second_derivative_at_one());
}

std::int64_t milnor_signature(const BrieskornTriple& t) {
  const std::int64_t p = t.p, q = t.q, r = t.r, P = p * q * r;
  std::int64_t plus = 0, minus = 0;
  for (std::int64_t i = 1; i < p; ++i)
    for (std::int64_t j = 1; j < q; ++j) {
      const std::int64_t base = i * q * r + j * p * r;
      for (std::int64_t k = 1; k < r; ++k) {
        const std::int64_t s = base + k * p * q;  // sum scaled by P
        if (s < P || (s > 2 * P && s < 3 * P))
          ++plus;
        else
          ++minus;
      }
    }
  return plus - minus;
}

std::int64_t casson_brieskorn(const BrieskornTriple& t) {
  const auto s = milnor_signature(t);
  if (s % 8 != 0) throw std::logic_error("Milnor fiber signature not divisible by 8");
  return s / 8;
}

std::optional<BrieskornTriple> brieskorn_triple_of(const PlumbingGraph& g) {
  if (!g.is_tree() || g.size() < 4) return std::nullopt;
  StarShape star;
  try {
    star = star_shape(g);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (star.legs.size() != 3) return std::nullopt;
  for (const auto& leg : star.legs)
    for (std::size_t v : leg)
      if (g.weight(v) > -2) return std::nullopt;
  if (abs(determinant(g)) != 1 || !is_negative_definite(g)) return std::nullopt;
  const auto sd = seifert_data(g);
  try {
    return BrieskornTriple::make(sd.legs[0].alpha, sd.legs[1].alpha, sd.legs[2].alpha);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

InvariantReport invariant_report(const PlumbingGraph& g) {
  validate(g, true);
  InvariantReport r;
  r.det = determinant(g);
  r.h1_order = abs(r.det);
  r.signature = signature(g);
  r.is_zhs = is_homology_sphere(g);
  if (!r.is_zhs) return r;
  r.mu_bar = mu_bar(g);
  r.rokhlin = static_cast<int>(((*r.mu_bar % 2) + 2) % 2);
  if (auto t = brieskorn_triple_of(g)) {
    r.casson = Rational(casson_brieskorn(*t));
    const auto root = graded_root(tau_sequence(g));
    r.d = d_invariant(root);
    const auto ds = involutive_ds(root);
    r.dbar = ds.dbar;
    r.dunder = ds.dunder;
  }
  return r;
}

nlohmann::json to_json(const InvariantReport& r) {
  auto num = [](const BigInt& x) -> nlohmann::json {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
      return x.convert_to<std::int64_t>();
    return x.str();
  };
  nlohmann::json j;
  j["det"] = num(r.det);
  j["h1_order"] = num(r.h1_order);
  j["signature"] = r.signature;
  j["is_zhs"] = r.is_zhs;
  j["mu_bar"] = r.mu_bar ? nlohmann::json(*r.mu_bar) : nlohmann::json(nullptr);
  j["rokhlin"] = r.rokhlin ? nlohmann::json(*r.rokhlin) : nlohmann::json(nullptr);
  j["casson"] = r.casson ? nlohmann::json(to_string(*r.casson)) : nlohmann::json(nullptr);
  j["d"] = r.d ? nlohmann::json(*r.d) : nlohmann::json(nullptr);
  j["dbar"] = r.dbar ? nlohmann::json(*r.dbar) : nlohmann::json(nullptr);
  j["dunder"] = r.dunder ? nlohmann::json(*r.dunder) : nlohmann::json(nullptr);
  return j;
}

}  // namespace plumbcalc
