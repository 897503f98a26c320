#include "plumbcalc/calculus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "plumbcalc/invariants.hpp"

namespace plumbcalc {

bool can_blow_down(const PlumbingGraph& g, std::size_t v) {
  const auto w = g.weight(v);
  if ((w != 1 && w != -1) || g.has_arrow(v)) return false;
  std::vector<std::size_t> nb;
  for (const auto& [a, b] : g.edges()) {
    if (a == v) nb.push_back(b);
    if (b == v) nb.push_back(a);
  }
  return nb.size() < 2 || (nb.size() == 2 && nb[0] != nb[1]);
}

bool can_absorb(const PlumbingGraph& g, std::size_t v) {
  if (g.weight(v) != 0 || g.has_arrow(v)) return false;
  std::vector<std::size_t> nb;
  for (const auto& [a, b] : g.edges()) {
    if (a == v) nb.push_back(b);
    if (b == v) nb.push_back(a);
  }
  return nb.size() == 2 && nb[0] != nb[1];
}

namespace {

std::vector<std::size_t> neighbors(const PlumbingGraph& g, std::size_t v) {
  std::vector<std::size_t> nb;
  for (const auto& [a, b] : g.edges()) {
    if (a == v) nb.push_back(b);
    if (b == v) nb.push_back(a);
  }
  return nb;
}

// Copy of g without vertex v; ids are kept, so lookups go through ids.
PlumbingGraph drop_vertex(const PlumbingGraph& g, std::size_t v) {
  std::vector<bool> keep(g.size(), true);
  keep[v] = false;
  return g.induced(keep);
}

}  // namespace

PlumbingGraph blow_down(const PlumbingGraph& g, const std::string& id) {
  const std::size_t v = g.index_of(id);
  const auto w = g.weight(v);
  if (w != 1 && w != -1) throw std::invalid_argument("blow_down: '" + id + "' has weight " + std::to_string(w));
  if (g.has_arrow(v)) throw std::invalid_argument("blow_down: '" + id + "' carries an arrow");
  const auto nb = neighbors(g, v);
  if (nb.size() > 2) throw std::invalid_argument("blow_down: '" + id + "' has valence " + std::to_string(nb.size()));
  if (nb.size() == 2 && nb[0] == nb[1])
    throw std::invalid_argument("blow_down: both edges of '" + id + "' go to the same vertex");
  PlumbingGraph out = drop_vertex(g, v);
  std::vector<std::size_t> ids;
  for (std::size_t u : nb) {
    const std::size_t x = out.index_of(g.id(u));
    out.add_weight(x, -w);
    ids.push_back(x);
  }
  if (ids.size() == 2) out.add_edge(ids[0], ids[1]);
  return out;
}

PlumbingGraph blow_up_edge(const PlumbingGraph& g, const std::string& a, const std::string& b, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("blow_up: sign must be +-1");
  PlumbingGraph out = g;
  const std::size_t ia = out.index_of(a), ib = out.index_of(b);
  if (!out.remove_edge(ia, ib)) throw std::invalid_argument("blow_up: no edge " + a + "-" + b);
  const std::size_t e = out.add_vertex(out.fresh_id("e"), sign);
  out.add_edge(ia, e);
  out.add_edge(e, ib);
  out.add_weight(ia, sign);
  out.add_weight(ib, sign);
  return out;
}

PlumbingGraph blow_up_vertex(const PlumbingGraph& g, const std::string& v, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("blow_up: sign must be +-1");
  PlumbingGraph out = g;
  const std::size_t iv = out.index_of(v);
  const std::size_t e = out.add_vertex(out.fresh_id("e"), sign);
  out.add_edge(iv, e);
  out.add_weight(iv, sign);
  return out;
}

PlumbingGraph absorb_zero_chain(const PlumbingGraph& g, const std::string& id) {
  const std::size_t v = g.index_of(id);
  if (g.weight(v) != 0) throw std::invalid_argument("absorb: '" + id + "' has nonzero weight");
  if (g.has_arrow(v)) throw std::invalid_argument("absorb: '" + id + "' carries an arrow");
  const auto nb = neighbors(g, v);
  if (nb.size() != 2) throw std::invalid_argument("absorb: '" + id + "' does not have valence 2");
  if (nb[0] == nb[1]) throw std::invalid_argument("absorb: neighbors of '" + id + "' coincide");
  // Survivor keeps the smaller id.
  std::size_t keep = nb[0], gone = nb[1];
  if (g.id(gone) < g.id(keep)) std::swap(keep, gone);

  PlumbingGraph out;
  std::vector<std::size_t> map(g.size(), RootedForest::npos);
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (u == v || u == gone) continue;
    std::int64_t w = g.weight(u);
    if (u == keep) w += g.weight(gone);
    map[u] = out.add_vertex(g.id(u), w);
  }
  map[gone] = map[keep];
  for (const auto& [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    if (map[a] == map[b]) throw std::invalid_argument("absorb: merge would create a self-loop");
    out.add_edge(map[a], map[b]);
  }
  for (const auto& ar : g.arrows()) out.add_arrow(map[ar.at], ar.label);
  return out;
}

PlumbingGraph reduce(const PlumbingGraph& g) {
  PlumbingGraph cur = g;
  for (;;) {
    std::vector<std::size_t> order(cur.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return cur.id(x) < cur.id(y); });
    bool moved = false;
    for (std::size_t v : order) {
      if (can_blow_down(cur, v)) {
        cur = blow_down(cur, cur.id(v));
        moved = true;
        break;
      }
      if (can_absorb(cur, v)) {
        cur = absorb_zero_chain(cur, cur.id(v));
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::Distinct: return "Distinct";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

EquivalenceVerdict equivalent(const PlumbingGraph& g1, const PlumbingGraph& g2) {
  if (!is_homology_sphere(g1)) throw std::invalid_argument("equivalent: first graph is not a ZHS tree");
  if (!is_homology_sphere(g2)) throw std::invalid_argument("equivalent: second graph is not a ZHS tree");

  EquivalenceVerdict out;
  if (canonical_form(reduce(g1)) == canonical_form(reduce(g2))) {
    out.tag = Verdict::Equivalent;
    out.reason = "reduced graphs isomorphic";
    return out;
  }
  const auto m1 = mu_bar(g1), m2 = mu_bar(g2);
  if (m1 != m2) {
    out.tag = Verdict::Distinct;
    out.witness = Witness{"mu_bar", std::to_string(m1), std::to_string(m2)};
    return out;
  }
  std::string d1, d2;
  try {
    d1 = splice_diagram(g1).canonical();
    d2 = splice_diagram(g2).canonical();
  } catch (const std::invalid_argument& e) {
    out.tag = Verdict::Unknown;
    out.reason = std::string("splice diagram unavailable: ") + e.what();
    return out;
  }
  if (d1 == d2) {
    out.tag = Verdict::Equivalent;
    out.reason = "splice diagrams isomorphic";
  } else {
    out.tag = Verdict::Distinct;
    out.witness = Witness{"splice_diagram", d1, d2};
  }
  return out;
}

}  // namespace plumbcalc
