#include <doctest.h>

#include "plumbcalc/calculus.hpp"
#include "plumbcalc/constructions.hpp"
#include "plumbcalc/contfrac.hpp"
#include "plumbcalc/invariants.hpp"
#include "plumbcalc/seifert.hpp"
#include "plumbcalc/sweep.hpp"
#include "test_support.hpp"

using namespace plumbcalc;
using namespace testing_support;

namespace {

// Weights along the path from `from` to `to` in a tree.
std::vector<std::int64_t> path_weights(const PlumbingGraph& g, const std::string& from, const std::string& to) {
  const auto adj = g.adjacency();
  const std::size_t s = g.index_of(from), t = g.index_of(to);
  std::vector<std::size_t> parent(g.size(), g.size());
  std::vector<std::size_t> queue{s};
  parent[s] = s;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto w : adj[queue[h]])
      if (parent[w] == g.size()) {
        parent[w] = queue[h];
        queue.push_back(w);
      }
  REQUIRE(parent[t] != g.size());
  std::vector<std::int64_t> out;
  for (std::size_t v = t;; v = parent[v]) {
    out.push_back(g.weight(v));
    if (v == s) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<BigInt> big(std::initializer_list<std::int64_t> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("expand_edge examples") {
  const auto r11 = expand_edge(chain({-2, -3}), "v0", "v1", {1, 1});
  CHECK(path_weights(r11.graph, "v0", "v1") == std::vector<std::int64_t>{-3, -1, -4});
  CHECK(r11.graph.weight(r11.graph.index_of(r11.e0)) == -1);

  const auto r21 = expand_edge(chain({-2, -3}), "v0", "v1", {2, 1});
  CHECK(path_weights(r21.graph, "v0", "v1") == std::vector<std::int64_t>{-4, -1, -2, -4});

  for (std::int64_t n = 1; n <= 8; ++n) {
    const auto r = expand_edge(chain({-2, -3}), "v0", "v1", {n, 1});
    std::vector<std::int64_t> expected{-2 - n, -1};
    for (std::int64_t i = 0; i < n - 1; ++i) expected.push_back(-2);
    expected.push_back(-4);
    CHECK(path_weights(r.graph, "v0", "v1") == expected);
  }
}

TEST_CASE("expand_edge follows the continued fraction recipe") {
  for (std::int64_t a = 1; a <= 9; ++a)
    for (std::int64_t b = 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto left = hj_expand(a + b, b);
      const auto right = hj_expand(a + b, a);
      std::vector<std::int64_t> expected{-3 - left[0] + 1};
      for (std::size_t i = 1; i < left.size(); ++i) expected.push_back(-left[i]);
      expected.push_back(-1);
      for (std::size_t i = right.size(); i-- > 1;) expected.push_back(-right[i]);
      expected.push_back(-5 - right[0] + 1);
      const auto r = expand_edge(chain({-3, -5}), "v0", "v1", {a, b});
      CHECK(path_weights(r.graph, "v0", "v1") == expected);
      // Blowing the chain back down recovers the edge.
      CHECK(canonical_form(contract_minus_ones(r.graph)) == canonical_form(chain({-3, -5})));
    }
}

TEST_CASE("expand_edge errors") {
  CHECK_THROWS_AS(expand_edge(chain({-2, -3, -4}), "v0", "v2", {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(expand_edge(chain({-2, -3}), "v0", "v1", {2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(expand_edge(chain({-2, -3}), "v0", "v1", {0, 1}), std::invalid_argument);
}

TEST_CASE("cut_cycle") {
  PlumbingGraph tri;
  tri.add_vertex("x", 0);
  tri.add_vertex("y", 0);
  tri.add_vertex("z", 1);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  CHECK(tri.cycle_rank() == 1);
  const auto cut = cut_cycle(tri, "x", "y", {1, 1});
  CHECK(cut.size() == 3);
  CHECK(cut.is_tree());
  CHECK(path_weights(cut, "x", "y") == std::vector<std::int64_t>{-1, 1, -1});

  PlumbingGraph two = tri;
  two.add_edge(0, 1);
  CHECK(two.cycle_rank() == 2);
  for (CutData d : {CutData{1, 1}, CutData{2, 1}, CutData{3, 5}}) {
    const auto c = cut_cycle(two, "x", "y", d);
    CHECK(c.cycle_rank() == 1);
    CHECK(c.is_connected());
    CHECK_FALSE(c.find(expand_edge(two, "x", "y", d).e0).has_value());
  }
  CHECK_THROWS_AS(cut_cycle(chain({0, 1}), "v0", "v1", {1, 1}), std::invalid_argument);
}

TEST_CASE("family_gm") {
  CHECK_THROWS_AS(family_gm(1, {2, 1}, {5, 1}), std::invalid_argument);
  CHECK_THROWS_AS(family_gm(0, {2, 1}, {3, 1}), std::invalid_argument);
  for (std::int64_t k = 1; k <= 4; ++k) {
    const auto g = family_gm(k, {2, 1}, {3, 1});
    CHECK(g.is_tree());
    CHECK(abs(determinant(g)) == 1);
  }
}

TEST_CASE("family Z splice diagram") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto g = family_Z(n);
    CHECK(g.is_tree());
    CHECK(abs(determinant(g)) == 1);
    CHECK(is_absolutely_minimal(g));
    const auto d = splice_diagram(g);
    REQUIRE(d.node_count() == 2);
    REQUIRE(d.edges.size() == 1);
    CHECK(d.leaf_weights[0] == big({n + 1, n + 2}));
    CHECK(d.leaf_weights[1] == big({n + 1, n + 2}));
    const auto& e = d.edges[0];
    const BigInt lo = std::min(e.weight_a, e.weight_b), hi = std::max(e.weight_a, e.weight_b);
    CHECK(lo == n * n + 3 * n + 1);
    CHECK(hi == n * n + 3 * n + 3);
    CHECK(d.canonical() == expected_splice_diagram(n).canonical());
  }
  const auto d1 = splice_diagram(family_Z(1));
  CHECK(d1.canonical() == splice_diagram(splice(sigma1(1), "K(5)", sigma2(1), "K(7)")).canonical());
}

TEST_CASE("family Z equivalent to the splice") {
  for (std::int64_t n = 1; n <= 4; ++n) {
    const auto s = splice(sigma1(n), "K(" + std::to_string(n * n + 3 * n + 1) + ")", sigma2(n),
                          "K(" + std::to_string(n * n + 3 * n + 3) + ")");
    CHECK(equivalent(family_Z(n), s).tag == Verdict::Equivalent);
  }
}

TEST_CASE("families X, Y, W gates") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    CHECK(4 * (3 * n + 1) - 3 * (4 * n + 1) == 1);
    for (const auto& g : {family_X(n), family_Y(n), family_W(n)}) {
      CHECK(g.is_tree());
      CHECK(abs(determinant(g)) == 1);
      CHECK(is_absolutely_minimal(g));
      CHECK(mu_bar(g) == 0);
    }
  }
  CHECK_THROWS_AS(family_X(0), std::invalid_argument);
  CHECK_THROWS_AS(family_Y(0), std::invalid_argument);
}

TEST_CASE("families are deterministic") {
  CHECK(canonical_form(family_X(3)) == canonical_form(family_X(3)));
  CHECK(family_Y(2).vertices().size() == family_Y(2).vertices().size());
  const auto a = family_W(4), b = family_W(4);
  CHECK(a.edges() == b.edges());
  for (std::size_t v = 0; v < a.size(); ++v) CHECK(a.id(v) == b.id(v));
}

TEST_CASE("expected handle counts") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    CHECK(expected_handle_counts("X", n) == HandleCounts{1, 1, 1});
    CHECK(expected_handle_counts("Y", n) == HandleCounts{1, 2, 2});
    CHECK(expected_handle_counts("Z", n) == HandleCounts{1, n + 1, n + 1});
    CHECK(expected_handle_counts("W", n) == HandleCounts{1, 2, 2});
  }
  CHECK_THROWS_AS(expected_handle_counts("Q", 1), std::invalid_argument);
}
