#include "plumbcalc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "plumbcalc/linalg.hpp"

namespace plumbcalc {

std::size_t PlumbingGraph::add_vertex(std::string id, std::int64_t weight) {
  if (index_.count(id)) throw std::invalid_argument("duplicate vertex id '" + id + "'");
  const std::size_t v = vertices_.size();
  index_.emplace(id, v);
  vertices_.push_back(Vertex{std::move(id), weight});
  return v;
}

void PlumbingGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw std::out_of_range("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("self-loop at '" + id(a) + "'");
  edges_.emplace_back(a, b);
}

bool PlumbingGraph::remove_edge(std::size_t a, std::size_t b) {
  for (auto it = edges_.begin(); it != edges_.end(); ++it) {
    if ((it->first == a && it->second == b) || (it->first == b && it->second == a)) {
      edges_.erase(it);
      return true;
    }
  }
  return false;
}

void PlumbingGraph::add_arrow(std::size_t at, std::string label) {
  if (at >= size()) throw std::out_of_range("arrow vertex out of range");
  arrows_.push_back(Arrow{at, std::move(label)});
}

std::optional<std::size_t> PlumbingGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PlumbingGraph::index_of(std::string_view id) const {
  auto v = find(id);
  if (!v) throw std::invalid_argument("unknown vertex id '" + std::string(id) + "'");
  return *v;
}

std::vector<std::vector<std::size_t>> PlumbingGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(size());
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::size_t PlumbingGraph::valence(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& [a, b] : edges_) n += (a == v) + (b == v);
  return n;
}

std::size_t PlumbingGraph::edge_multiplicity(std::size_t a, std::size_t b) const {
  std::size_t n = 0;
  for (const auto& [x, y] : edges_) n += (x == a && y == b) || (x == b && y == a);
  return n;
}

bool PlumbingGraph::has_arrow(std::size_t v) const {
  return std::any_of(arrows_.begin(), arrows_.end(), [v](const Arrow& a) { return a.at == v; });
}

std::vector<std::string> PlumbingGraph::arrow_labels(std::size_t v) const {
  std::vector<std::string> out;
  for (const auto& a : arrows_)
    if (a.at == v) out.push_back(a.label);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> PlumbingGraph::arrow_vertex(std::string_view label) const {
  for (const auto& a : arrows_)
    if (a.label == label) return a.at;
  return std::nullopt;
}

std::size_t PlumbingGraph::component_count() const {
  std::vector<std::size_t> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = size();
  for (const auto& [a, b] : edges_) {
    auto ra = root(a), rb = root(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

bool PlumbingGraph::is_connected() const { return size() <= 1 || component_count() == 1; }

std::size_t PlumbingGraph::cycle_rank() const {
  return edges_.size() + component_count() - size();
}

bool PlumbingGraph::is_tree() const {
  return is_connected() && edges_.size() + 1 == std::max<std::size_t>(size(), 1);
}

PlumbingGraph PlumbingGraph::induced(const std::vector<bool>& keep) const {
  PlumbingGraph out;
  std::vector<std::size_t> map(size(), RootedForest::npos);
  for (std::size_t v = 0; v < size(); ++v)
    if (keep[v]) map[v] = out.add_vertex(vertices_[v].id, vertices_[v].weight);
  for (const auto& [a, b] : edges_)
    if (keep[a] && keep[b]) out.add_edge(map[a], map[b]);
  for (const auto& ar : arrows_)
    if (keep[ar.at]) out.add_arrow(map[ar.at], ar.label);
  return out;
}

PlumbingGraph PlumbingGraph::with_prefix(std::string_view prefix) const {
  PlumbingGraph out;
  for (const auto& v : vertices_) out.add_vertex(std::string(prefix) + v.id, v.weight);
  for (const auto& [a, b] : edges_) out.add_edge(a, b);
  for (const auto& ar : arrows_) out.add_arrow(ar.at, ar.label);
  return out;
}

std::string PlumbingGraph::fresh_id(std::string_view stem) const {
  std::string s(stem);
  if (!find(s)) return s;
  for (std::size_t k = 1;; ++k) {
    std::string t = s + std::to_string(k);
    if (!find(t)) return t;
  }
}

void validate(const PlumbingGraph& g, bool allow_disconnected) {
  for (const auto& [a, b] : g.edges())
    if (a == b) throw std::invalid_argument("self-loop at '" + g.id(a) + "'");
  if (!allow_disconnected && !g.is_connected())
    throw std::invalid_argument("plumbing graph is disconnected");
}

IntegerMatrix intersection_matrix(const PlumbingGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  IntegerMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = 0;
  for (std::size_t v = 0; v < g.size(); ++v) m(v, v) = g.weight(v);
  for (const auto& [a, b] : g.edges()) {
    m(a, b) += 1;
    m(b, a) += 1;
  }
  return m;
}

RootedForest root_forest(const PlumbingGraph& g, std::size_t preferred_root) {
  const std::size_t n = g.size();
  RootedForest f;
  f.parent.assign(n, RootedForest::npos);
  f.children.assign(n, {});
  std::vector<bool> seen(n, false);
  const auto adj = g.adjacency();
  auto bfs = [&](std::size_t r) {
    seen[r] = true;
    std::size_t head = f.order.size();
    f.order.push_back(r);
    while (head < f.order.size()) {
      std::size_t v = f.order[head++];
      for (std::size_t u : adj[v]) {
        if (seen[u]) continue;
        seen[u] = true;
        f.parent[u] = v;
        f.children[v].push_back(u);
        f.order.push_back(u);
      }
    }
  };
  if (preferred_root < n) bfs(preferred_root);
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) bfs(v);
  return f;
}

BigInt leaf_elimination_determinant(const PlumbingGraph& g) {
  if (g.edges().size() + g.component_count() != g.size())
    throw std::invalid_argument("leaf elimination requires a forest");
  const auto f = root_forest(g);
  // d[v] = det(subtree v), e[v] = det(subtree v minus v).
  std::vector<BigInt> d(g.size()), e(g.size());
  BigInt total = 1;
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    const std::size_t v = *it;
    BigInt prod = 1, sum = 0;
    for (std::size_t c : f.children[v]) {
      sum = sum * d[c] + e[c] * prod;
      prod *= d[c];
    }
    e[v] = prod;
    d[v] = BigInt(g.weight(v)) * prod - sum;
    if (f.parent[v] == RootedForest::npos) total *= d[v];
  }
  return total;
}

BigInt determinant(const PlumbingGraph& g) {
  if (g.edges().size() + g.component_count() == g.size()) return leaf_elimination_determinant(g);
  return bareiss_determinant(intersection_matrix(g));
}

namespace {

// Rational leaf elimination. A zero pivot at child c of v makes {c, v} a
// hyperbolic pair that splits off with inertia (1, 1, 0).
Inertia forest_inertia(const PlumbingGraph& g) {
  const auto f = root_forest(g);
  std::vector<Rational> d(g.size());
  std::vector<bool> dead(g.size(), false);
  Inertia out;
  auto settle = [&](std::size_t v) {
    int s = sign(d[v]);
    if (s > 0)
      ++out.positive;
    else if (s < 0)
      ++out.negative;
    else
      ++out.zero;
  };
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    const std::size_t v = *it;
    std::size_t zero_child = RootedForest::npos;
    for (std::size_t c : f.children[v])
      if (!dead[c] && d[c] == 0) {
        zero_child = c;
        break;
      }
    if (zero_child != RootedForest::npos) {
      ++out.positive;
      ++out.negative;
      for (std::size_t c : f.children[v])
        if (!dead[c] && c != zero_child) settle(c);
      dead[v] = true;
      dead[zero_child] = true;
      continue;
    }
    Rational x = g.weight(v);
    for (std::size_t c : f.children[v])
      if (!dead[c]) {
        x -= 1 / d[c];
        settle(c);
      }
    d[v] = x;
    if (f.parent[v] == RootedForest::npos) settle(v);
  }
  return out;
}

}  // namespace

Inertia inertia(const PlumbingGraph& g) {
  if (g.edges().size() + g.component_count() == g.size()) return forest_inertia(g);
  return symmetric_inertia<Rational>(intersection_matrix(g));
}

int signature(const PlumbingGraph& g) { return inertia(g).signature(); }

bool is_negative_definite(const PlumbingGraph& g) {
  if (g.edges().size() + g.component_count() != g.size()) return inertia(g).negative == g.size();
  // Pivot at v is det(subtree v) / prod det(subtree c), so every subtree
  // determinant must have sign (-1)^|subtree|.
  const auto f = root_forest(g);
  std::vector<BigInt> d(g.size()), e(g.size());
  std::vector<std::size_t> size(g.size(), 1);
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    const std::size_t v = *it;
    BigInt prod = 1, sum = 0;
    for (std::size_t c : f.children[v]) {
      sum = sum * d[c] + e[c] * prod;
      prod *= d[c];
      size[v] += size[c];
    }
    e[v] = prod;
    d[v] = BigInt(g.weight(v)) * prod - sum;
    if (sign(d[v]) != (size[v] % 2 ? -1 : 1)) return false;
  }
  return true;
}

bool is_homology_sphere(const PlumbingGraph& g) {
  return g.is_tree() && abs(determinant(g)) == 1;
}

bool is_absolutely_minimal(const PlumbingGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.valence(v) <= 2 && g.weight(v) > -2) return false;
  return true;
}

namespace {

std::vector<std::size_t> centroids(const PlumbingGraph& g) {
  const std::size_t n = g.size();
  const auto f = root_forest(g);
  std::vector<std::size_t> sub(n, 1);
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it)
    if (f.parent[*it] != RootedForest::npos) sub[f.parent[*it]] += sub[*it];
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t largest = n - sub[v];
    for (std::size_t c : f.children[v]) largest = std::max(largest, sub[c]);
    if (2 * largest <= n) out.push_back(v);
  }
  return out;
}

std::string vertex_label(const PlumbingGraph& g, std::size_t v) {
  std::string s = std::to_string(g.weight(v));
  auto labels = g.arrow_labels(v);
  if (!labels.empty()) {
    s += "[";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
    s += "]";
  }
  return s;
}

std::string encode_from(const PlumbingGraph& g, std::size_t root) {
  const auto f = root_forest(g, root);
  std::vector<std::string> code(g.size());
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    const std::size_t v = *it;
    std::vector<std::string> kids;
    kids.reserve(f.children[v].size());
    for (std::size_t c : f.children[v]) kids.push_back(std::move(code[c]));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + vertex_label(g, v);
    for (auto& k : kids) s += k;
    s += ")";
    code[v] = std::move(s);
  }
  return code[root];
}

}  // namespace

std::string canonical_form(const PlumbingGraph& g) {
  if (g.empty()) return "()";
  if (!g.is_tree()) throw std::invalid_argument("canonical_form requires a tree");
  std::string best;
  for (std::size_t c : centroids(g)) {
    std::string s = encode_from(g, c);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace plumbcalc
