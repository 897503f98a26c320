#include "plumbcalc/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "plumbcalc/calculus.hpp"
#include "plumbcalc/contfrac.hpp"

namespace plumbcalc {

namespace {

void check_cut(CutData cut) {
  if (cut.a < 1 || cut.b < 1 || std::gcd(cut.a, cut.b) != 1)
    throw std::invalid_argument("cut data must be coprime positive integers");
}

}  // namespace

ExpandResult expand_edge(const PlumbingGraph& g, const std::string& vk, const std::string& vl, CutData cut) {
  check_cut(cut);
  PlumbingGraph out = g;
  const std::size_t k = out.index_of(vk), l = out.index_of(vl);
  if (!out.remove_edge(k, l)) throw std::invalid_argument("no edge " + vk + "-" + vl);
  const auto left = hj_expand(cut.a + cut.b, cut.b);
  const auto right = hj_expand(cut.a + cut.b, cut.a);
  const std::string stem = vk + "~" + vl + ".";

  std::size_t prev = k;
  for (std::size_t i = 1; i < left.size(); ++i) {
    const std::size_t v = out.add_vertex(out.fresh_id(stem + "a" + std::to_string(i)), -left[i]);
    out.add_edge(prev, v);
    prev = v;
  }
  const std::string e0 = out.fresh_id(stem + "E0");
  const std::size_t ev = out.add_vertex(e0, -1);
  out.add_edge(prev, ev);
  prev = ev;
  for (std::size_t i = right.size(); i-- > 1;) {
    const std::size_t v = out.add_vertex(out.fresh_id(stem + "b" + std::to_string(i)), -right[i]);
    out.add_edge(prev, v);
    prev = v;
  }
  out.add_edge(prev, l);
  out.add_weight(k, 1 - left[0]);
  out.add_weight(l, 1 - right[0]);
  return ExpandResult{std::move(out), e0};
}

PlumbingGraph cut_cycle(const PlumbingGraph& g, const std::string& vk, const std::string& vl, CutData cut) {
  const std::size_t k = g.index_of(vk), l = g.index_of(vl);
  if (g.edge_multiplicity(k, l) == 0) throw std::invalid_argument("no edge " + vk + "-" + vl);
  PlumbingGraph probe = g;
  probe.remove_edge(k, l);
  if (probe.component_count() != g.component_count())
    throw std::invalid_argument("edge " + vk + "-" + vl + " is not on a cycle");
  auto ex = expand_edge(g, vk, vl, cut);
  std::vector<bool> keep(ex.graph.size(), true);
  keep[ex.graph.index_of(ex.e0)] = false;
  return ex.graph.induced(keep);
}

PlumbingGraph contract_minus_ones(const PlumbingGraph& g) {
  PlumbingGraph cur = g;
  for (;;) {
    std::vector<std::size_t> order(cur.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return cur.id(x) < cur.id(y); });
    auto it = std::find_if(order.begin(), order.end(),
                           [&](std::size_t v) { return cur.weight(v) == -1 && can_blow_down(cur, v); });
    if (it == order.end()) return cur;
    cur = blow_down(cur, cur.id(*it));
  }
}

PlumbingGraph family_gm(std::int64_t k, CutData ab, CutData cd) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  check_cut(ab);
  check_cut(cd);
  const std::int64_t cond = ab.a * cd.a - ab.a * cd.b - ab.b * cd.a;
  if (cond != 1 && cond != -1) throw std::invalid_argument("cut data violates ac - ad - bc = +-1");

  PlumbingGraph g;
  const auto e = g.add_vertex("E", -1);
  const auto l1 = g.add_vertex("l1", 0);
  const auto l2 = g.add_vertex("l2", 0);
  const auto l3 = g.add_vertex("l3", 0);
  const auto l4 = g.add_vertex("l4", 1);
  for (auto l : {l1, l2, l3}) {
    g.add_edge(e, l);
    g.add_edge(l4, l);
  }
  g = cut_cycle(g, "l1", "l4", ab);
  g = cut_cycle(g, "l2", "l4", cd);
  // Smooth-point blow-ups on l3: the last (-1) curve is not part of the boundary.
  g.add_weight(g.index_of("l3"), -1);
  std::size_t prev = g.index_of("l3");
  for (std::int64_t i = 1; i < k; ++i) {
    const auto v = g.add_vertex("l3.t" + std::to_string(i), -2);
    g.add_edge(prev, v);
    prev = v;
  }
  return contract_minus_ones(g);
}

PlumbingGraph family_Z(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return family_gm(1, CutData{n + 2, 1}, CutData{n + 1, n});
}

PlumbingGraph family_X(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const CutData ab{4 * n + 1, 3 * n + 1};
  if (4 * ab.b - 3 * ab.a != 1 && 4 * ab.b - 3 * ab.a != -1) throw std::logic_error("4b - 3a != +-1");
  // Five lines with two triple points blown up: T6 = {L3, L4, L5}, T7 = {L1, L2, L5}.
  PlumbingGraph g;
  const auto L1 = g.add_vertex("L1", 0);
  const auto L2 = g.add_vertex("L2", 0);
  const auto L3 = g.add_vertex("L3", 0);
  const auto L4 = g.add_vertex("L4", 0);
  const auto L5 = g.add_vertex("L5", -1);
  const auto L6 = g.add_vertex("L6", -1);
  const auto L7 = g.add_vertex("L7", -1);
  for (auto v : {L3, L4, L5}) g.add_edge(L6, v);
  for (auto v : {L1, L2, L5}) g.add_edge(L7, v);
  g.add_edge(L1, L3);
  g.add_edge(L1, L4);
  g.add_edge(L2, L3);
  g.add_edge(L2, L4);
  g = cut_cycle(g, "L2", "L3", CutData{1, 1});
  g = cut_cycle(g, "L2", "L7", CutData{1, 1});
  g = cut_cycle(g, "L5", "L6", CutData{1, 1});
  g = cut_cycle(g, "L1", "L4", ab);
  return contract_minus_ones(g);
}

namespace {

PlumbingGraph zaidenberg(CutData first, CutData second) {
  PlumbingGraph g;
  const auto c = g.add_vertex("c", 0);
  const auto E1 = g.add_vertex("E1", -3);
  const auto E2 = g.add_vertex("E2", -2);
  const auto E3 = g.add_vertex("E3", -1);
  const auto F1 = g.add_vertex("F1", -3);
  const auto F2 = g.add_vertex("F2", -2);
  const auto F3 = g.add_vertex("F3", -1);
  const auto e0 = g.add_vertex("e0", -2);
  const auto e1 = g.add_vertex("e1", -1);
  const auto l1 = g.add_vertex("l1", 0);
  g.add_edge(c, E3);
  g.add_edge(c, F3);
  g.add_edge(c, l1);
  g.add_edge(c, l1);
  g.add_edge(E3, E1);
  g.add_edge(E3, E2);
  g.add_edge(F3, F1);
  g.add_edge(F3, F2);
  g.add_edge(F1, e1);
  g.add_edge(F2, e0);
  g.add_edge(e0, l1);
  if (std::abs(second.a - second.b) != 1) throw std::invalid_argument("Zaidenberg data needs |c - d| = 1");
  g = cut_cycle(g, "c", "l1", first);
  g = cut_cycle(g, "c", "l1", second);
  return contract_minus_ones(g);
}

}  // namespace

PlumbingGraph family_Y(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return zaidenberg(CutData{1, 1}, CutData{n + 1, n});
}

PlumbingGraph family_W(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return zaidenberg(CutData{1, 1}, CutData{n, n + 1});
}

HandleCounts expected_handle_counts(const std::string& family, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (family == "X") return {1, 1, 1};
  if (family == "Y" || family == "W") return {1, 2, 2};
  if (family == "Z") return {1, n + 1, n + 1};
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace plumbcalc
