#include "plumbcalc/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "plumbcalc/contfrac.hpp"

namespace plumbcalc {

BrieskornTriple BrieskornTriple::make(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t v[3] = {a, b, c};
  std::sort(v, v + 3);
  if (v[0] < 2) throw std::invalid_argument("Brieskorn multiplicities must be >= 2");
  if (std::gcd(v[0], v[1]) != 1 || std::gcd(v[0], v[2]) != 1 || std::gcd(v[1], v[2]) != 1)
    throw std::invalid_argument("Brieskorn multiplicities must be pairwise coprime");
  return BrieskornTriple{v[0], v[1], v[2]};
}

std::string to_string(const BrieskornTriple& t) {
  return "(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ")";
}

Rational SeifertData::orbifold_euler() const {
  Rational e = e0;
  for (const auto& l : legs) e += Rational(l.omega, l.alpha);
  return e;
}

namespace {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::invalid_argument("not invertible");
  return ((x % m) + m) % m;
}

}  // namespace

PlumbingGraph brieskorn_plumbing(const BrieskornTriple& t) {
  const std::int64_t alpha[3] = {t.p, t.q, t.r};
  const char* names[3] = {"p", "q", "r"};
  const std::int64_t P = t.product();
  std::int64_t omega[3];
  BigInt num = -1;
  for (int i = 0; i < 3; ++i) {
    const std::int64_t co = P / alpha[i];
    omega[i] = (alpha[i] - mod_inverse(co, alpha[i])) % alpha[i];
    num -= BigInt(omega[i]) * co;
  }
  if (num % P != 0) throw std::logic_error("central weight is not integral");
  const auto e0 = to_int64(num / P);

  PlumbingGraph g;
  const std::size_t c = g.add_vertex("c", e0);
  for (int i = 0; i < 3; ++i) {
    const auto chain = hj_expand(alpha[i], omega[i]);
    std::size_t prev = c;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const std::size_t v = g.add_vertex(names[i] + std::to_string(k + 1), -chain[k]);
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

std::string leg_end(const PlumbingGraph& g, std::int64_t alpha) {
  const auto star = star_shape(g);
  for (const auto& leg : star.legs) {
    HJExpansion e;
    for (std::size_t v : leg) e.push_back(-g.weight(v));
    if (boost::multiprecision::numerator(cf_eval(e)) == alpha) return g.id(leg.back());
  }
  throw std::invalid_argument("no leg of multiplicity " + std::to_string(alpha));
}

StarShape star_shape(const PlumbingGraph& g) {
  if (g.empty()) throw std::invalid_argument("empty graph is not star-shaped");
  if (!g.is_tree()) throw std::invalid_argument("star-shaped graphs are trees");
  const auto adj = g.adjacency();
  StarShape s;
  std::size_t hubs = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (adj[v].size() >= 3) {
      s.center = v;
      ++hubs;
    }
  if (hubs > 1) throw std::invalid_argument("graph has more than one vertex of valence >= 3");
  // Chains use their first vertex as center.
  if (hubs == 0) s.center = 0;
  for (std::size_t start : adj[s.center]) {
    std::vector<std::size_t> leg{start};
    std::size_t prev = s.center, cur = start;
    for (;;) {
      std::size_t next = RootedForest::npos;
      for (std::size_t y : adj[cur])
        if (y != prev) next = y;
      if (next == RootedForest::npos) break;
      leg.push_back(next);
      prev = cur;
      cur = next;
    }
    s.legs.push_back(std::move(leg));
  }
  return s;
}

SeifertData seifert_data(const PlumbingGraph& g) {
  const auto star = star_shape(g);
  SeifertData sd;
  sd.e0 = g.weight(star.center);
  for (const auto& leg : star.legs) {
    HJExpansion e;
    for (std::size_t v : leg) e.push_back(-g.weight(v));
    const Rational x = cf_eval(e);
    BigInt a = boost::multiprecision::numerator(x), w = boost::multiprecision::denominator(x);
    if (a < 0) {
      a = -a;
      w = -w;
    }
    sd.legs.push_back(SeifertLeg{to_int64(a), to_int64(w)});
  }
  std::sort(sd.legs.begin(), sd.legs.end(), [](const SeifertLeg& x, const SeifertLeg& y) {
    return std::tie(x.alpha, x.omega) < std::tie(y.alpha, y.omega);
  });
  return sd;
}

BrieskornTriple torus_knot_surgery(std::int64_t p, std::int64_t q, int framing) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw std::invalid_argument("torus knot needs coprime p, q >= 2");
  if (framing != 1 && framing != -1) throw std::invalid_argument("framing must be +-1");
  return BrieskornTriple::make(p, q, p * q + framing);
}

namespace {

std::size_t arrowed_end(const PlumbingGraph& g, const std::string& label) {
  auto v = g.arrow_vertex(label);
  if (!v) throw std::invalid_argument("no arrow labelled '" + label + "'");
  if (g.size() > 1 && g.valence(*v) != 1)
    throw std::invalid_argument("arrow '" + label + "' is not on a leg end");
  return *v;
}

}  // namespace

std::int64_t splice_weight(const PlumbingGraph& g, const std::string& arrow) {
  const std::size_t end = arrowed_end(g, arrow);
  std::vector<bool> keep(g.size(), true);
  keep[end] = false;
  const PlumbingGraph g0 = g.induced(keep);
  // det(-M) = (-1)^n det(M).
  BigInt det = determinant(g0);
  if (g0.size() % 2 == 1) det = -det;
  return to_int64(-det);
}

PlumbingGraph splice_with_weights(const PlumbingGraph& g1, const std::string& arrow1,
                                  const PlumbingGraph& g2, const std::string& arrow2, std::int64_t x,
                                  std::int64_t y) {
  const std::size_t e1 = arrowed_end(g1, arrow1);
  const std::size_t e2 = arrowed_end(g2, arrow2);
  PlumbingGraph out;
  auto copy = [&](const PlumbingGraph& g, const std::string& prefix, const std::string& consumed) {
    const std::size_t base = out.size();
    for (const auto& v : g.vertices()) out.add_vertex(prefix + v.id, v.weight);
    for (const auto& [a, b] : g.edges()) out.add_edge(base + a, base + b);
    for (const auto& ar : g.arrows())
      if (ar.label != consumed) out.add_arrow(base + ar.at, ar.label);
    return base;
  };
  const std::size_t b1 = copy(g1, "a.", arrow1);
  const std::size_t b2 = copy(g2, "b.", arrow2);
  const std::size_t vx = out.add_vertex("X", x);
  const std::size_t vy = out.add_vertex("Y", y);
  out.add_edge(b1 + e1, vx);
  out.add_edge(vx, vy);
  out.add_edge(vy, b2 + e2);
  return out;
}

PlumbingGraph splice(const PlumbingGraph& g1, const std::string& arrow1, const PlumbingGraph& g2,
                     const std::string& arrow2) {
  if (!is_homology_sphere(g1) || !is_homology_sphere(g2))
    throw std::invalid_argument("splice inputs must be homology spheres");
  return splice_with_weights(g1, arrow1, g2, arrow2, splice_weight(g1, arrow1), splice_weight(g2, arrow2));
}

BrieskornTriple sigma1_triple(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return BrieskornTriple::make(n + 1, n + 2, n * n + 3 * n + 1);
}

BrieskornTriple sigma2_triple(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return BrieskornTriple::make(n + 1, n + 2, n * n + 3 * n + 3);
}

PlumbingGraph with_arrow(PlumbingGraph g, const std::string& at, const std::string& label) {
  g.add_arrow(g.index_of(at), label);
  return g;
}

namespace {

PlumbingGraph arrowed_on_r(const BrieskornTriple& t) {
  PlumbingGraph g = brieskorn_plumbing(t);
  const std::string end = leg_end(g, t.r);
  return with_arrow(std::move(g), end, "K(" + std::to_string(t.r) + ")");
}

}  // namespace

PlumbingGraph sigma1(std::int64_t n) { return arrowed_on_r(sigma1_triple(n)); }
PlumbingGraph sigma2(std::int64_t n) { return arrowed_on_r(sigma2_triple(n)); }

}  // namespace plumbcalc
