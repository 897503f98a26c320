#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "plumbcalc/calculus.hpp"

namespace plumbcalc {

namespace {

struct Direction {
  std::size_t first;   // neighbor of the node starting this branch
  BigInt weight;       // |det| of the branch
};

struct Candidate {
  std::size_t vertex;
  std::vector<Direction> dirs;
  std::vector<int> branch_of;  // per vertex: index into dirs, -1 for the node itself
};

Candidate analyse(const PlumbingGraph& g, std::size_t v) {
  const auto f = root_forest(g, v);
  Candidate c;
  c.vertex = v;
  std::vector<BigInt> d(g.size()), e(g.size());
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    const std::size_t x = *it;
    BigInt prod = 1, sum = 0;
    for (std::size_t ch : f.children[x]) {
      sum = sum * d[ch] + e[ch] * prod;
      prod *= d[ch];
    }
    e[x] = prod;
    d[x] = BigInt(g.weight(x)) * prod - sum;
  }
  c.branch_of.assign(g.size(), -1);
  for (std::size_t u : f.children[v]) {
    c.branch_of[u] = static_cast<int>(c.dirs.size());
    c.dirs.push_back(Direction{u, abs(d[u])});
  }
  for (std::size_t x : f.order)
    if (x != v && f.parent[x] != v) c.branch_of[x] = c.branch_of[f.parent[x]];
  return c;
}

struct Group {
  std::vector<BigInt> leaves;
  std::string rep;
  bool live = true;
};

BigInt product(const std::vector<BigInt>& xs) {
  BigInt p = 1;
  for (const auto& x : xs) p *= x;
  return p;
}

}  // namespace

SpliceDiagram splice_diagram(const PlumbingGraph& g) {
  if (!g.is_tree()) throw std::invalid_argument("splice_diagram requires a tree");
  if (abs(determinant(g)) != 1) throw std::invalid_argument("splice_diagram requires a homology sphere");

  const auto adj = g.adjacency();
  std::vector<Candidate> cands;
  std::vector<int> cand_of(g.size(), -1);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (adj[v].size() >= 3) {
      cand_of[v] = static_cast<int>(cands.size());
      cands.push_back(analyse(g, v));
    }

  // A node survives while it has three essential directions: weight != 1 or
  // containing another surviving node.
  std::vector<bool> alive(cands.size(), true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!alive[i]) continue;
      std::vector<bool> has_node(cands[i].dirs.size(), false);
      for (std::size_t j = 0; j < cands.size(); ++j)
        if (j != i && alive[j]) has_node[cands[i].branch_of[cands[j].vertex]] = true;
      std::size_t essential = 0;
      for (std::size_t k = 0; k < cands[i].dirs.size(); ++k)
        essential += has_node[k] || cands[i].dirs[k].weight != 1;
      if (essential < 3) {
        alive[i] = false;
        changed = true;
      }
    }
  }

  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (alive[i]) nodes.push_back(i);
  std::map<std::size_t, std::size_t> slot;  // candidate -> node index
  for (std::size_t k = 0; k < nodes.size(); ++k) slot[nodes[k]] = k;

  std::vector<Group> groups(nodes.size());
  struct RawEdge {
    std::size_t a, b;
    BigInt wa, wb;
  };
  std::vector<RawEdge> raw;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const Candidate& c = cands[nodes[k]];
    groups[k].rep = g.id(c.vertex);
    std::vector<BigInt> all;
    for (std::size_t dir = 0; dir < c.dirs.size(); ++dir) {
      // Nearest surviving node in this direction, if any.
      std::vector<std::size_t> hits;
      std::vector<bool> seen(g.size(), false);
      seen[c.vertex] = true;
      std::vector<std::size_t> stack{c.dirs[dir].first};
      seen[c.dirs[dir].first] = true;
      while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (cand_of[x] >= 0 && alive[cand_of[x]]) {
          hits.push_back(x);
          continue;
        }
        for (std::size_t y : adj[x])
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
      }
      if (hits.size() > 1) throw std::logic_error("splice_diagram: branching through a dead vertex");
      if (hits.empty()) {
        if (c.dirs[dir].weight != 1) {
          groups[k].leaves.push_back(c.dirs[dir].weight);
          all.push_back(c.dirs[dir].weight);
        }
        continue;
      }
      all.push_back(c.dirs[dir].weight);
      const std::size_t other = slot.at(static_cast<std::size_t>(cand_of[hits[0]]));
      if (k < other) {
        const Candidate& o = cands[nodes[other]];
        const BigInt wb = o.dirs[o.branch_of[c.vertex]].weight;
        raw.push_back(RawEdge{k, other, c.dirs[dir].weight, wb});
      }
    }
    for (std::size_t x = 0; x < all.size(); ++x)
      for (std::size_t y = x + 1; y < all.size(); ++y)
        if (boost::multiprecision::gcd(all[x], all[y]) != 1)
          throw std::invalid_argument("splice_diagram: non-coprime weights at node '" + groups[k].rep + "'");
  }

  // Merge nodes across edges with vanishing edge determinant.
  std::vector<std::size_t> owner(groups.size());
  std::iota(owner.begin(), owner.end(), 0);
  auto find = [&](std::size_t x) {
    while (owner[x] != x) x = owner[x] = owner[owner[x]];
    return x;
  };
  std::vector<bool> edge_live(raw.size(), true);
  auto others = [&](std::size_t grp, std::size_t skip) {
    BigInt p = product(groups[grp].leaves);
    for (std::size_t e = 0; e < raw.size(); ++e) {
      if (!edge_live[e] || e == skip) continue;
      if (find(raw[e].a) == grp) p *= raw[e].wa;
      if (find(raw[e].b) == grp) p *= raw[e].wb;
    }
    return p;
  };
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t e = 0; e < raw.size(); ++e) {
      if (!edge_live[e]) continue;
      const std::size_t ga = find(raw[e].a), gb = find(raw[e].b);
      const BigInt det = raw[e].wa * raw[e].wb - others(ga, e) * others(gb, e);
      if (det != 0) continue;
      edge_live[e] = false;
      owner[gb] = ga;
      auto& la = groups[ga].leaves;
      la.insert(la.end(), groups[gb].leaves.begin(), groups[gb].leaves.end());
      groups[ga].rep = std::min(groups[ga].rep, groups[gb].rep);
      groups[gb].live = false;
      merged = true;
    }
  }

  SpliceDiagram out;
  std::vector<std::size_t> final_index(groups.size(), 0);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (!groups[k].live) continue;
    final_index[k] = out.node_ids.size();
    auto leaves = groups[k].leaves;
    std::sort(leaves.begin(), leaves.end());
    out.node_ids.push_back(groups[k].rep);
    out.leaf_weights.push_back(std::move(leaves));
  }
  for (std::size_t e = 0; e < raw.size(); ++e) {
    if (!edge_live[e]) continue;
    out.edges.push_back(SpliceEdge{final_index[find(raw[e].a)], final_index[find(raw[e].b)], raw[e].wa, raw[e].wb});
  }
  return out;
}

BigInt edge_determinant(const SpliceDiagram& d, std::size_t edge) {
  const SpliceEdge& e = d.edges.at(edge);
  auto others = [&](std::size_t node) {
    BigInt p = product(d.leaf_weights[node]);
    for (std::size_t k = 0; k < d.edges.size(); ++k) {
      if (k == edge) continue;
      if (d.edges[k].a == node) p *= d.edges[k].weight_a;
      if (d.edges[k].b == node) p *= d.edges[k].weight_b;
    }
    return p;
  };
  return e.weight_a * e.weight_b - others(e.a) * others(e.b);
}

std::vector<BigInt> edge_determinants(const SpliceDiagram& d) {
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < d.edges.size(); ++k) out.push_back(edge_determinant(d, k));
  return out;
}

std::string SpliceDiagram::canonical() const {
  const std::size_t n = node_count();
  if (n == 0) return "()";
  struct Arc {
    std::size_t to;
    BigInt near, far;
  };
  std::vector<std::vector<Arc>> adj(n);
  for (const auto& e : edges) {
    adj[e.a].push_back(Arc{e.b, e.weight_a, e.weight_b});
    adj[e.b].push_back(Arc{e.a, e.weight_b, e.weight_a});
  }
  auto label = [&](std::size_t v) {
    std::string s;
    for (std::size_t i = 0; i < leaf_weights[v].size(); ++i) s += (i ? "," : "") + leaf_weights[v][i].str();
    return s;
  };
  auto encode = [&](std::size_t root) {
    std::vector<std::size_t> order{root}, parent(n, n);
    std::vector<std::string> arc_label(n);
    for (std::size_t h = 0; h < order.size(); ++h)
      for (const auto& a : adj[order[h]])
        if (a.to != parent[order[h]]) {
          parent[a.to] = order[h];
          arc_label[a.to] = "<" + a.near.str() + ":" + a.far.str() + ">";
          order.push_back(a.to);
        }
    std::vector<std::vector<std::string>> kids(n);
    std::string result;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto& ks = kids[*it];
      std::sort(ks.begin(), ks.end());
      std::string s = "{" + label(*it) + "|";
      for (auto& k : ks) s += k;
      s += "}";
      if (*it == root)
        result = std::move(s);
      else
        kids[parent[*it]].push_back(arc_label[*it] + s);
    }
    return result;
  };
  // Centroid(s) of the node tree.
  std::vector<std::size_t> sub(n, 1), order{0}, parent(n, n);
  for (std::size_t h = 0; h < order.size(); ++h)
    for (const auto& a : adj[order[h]])
      if (a.to != parent[order[h]]) {
        parent[a.to] = order[h];
        order.push_back(a.to);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] != n) sub[parent[*it]] += sub[*it];
  std::string best;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t largest = n - sub[v];
    for (const auto& a : adj[v])
      if (a.to != parent[v]) largest = std::max(largest, sub[a.to]);
    if (2 * largest > n) continue;
    std::string s = encode(v);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace plumbcalc
