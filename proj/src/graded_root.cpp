#include "plumbcalc/graded_root.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "plumbcalc/invariants.hpp"

namespace plumbcalc {

std::int64_t TauSequence::min_raw() const { return *std::min_element(raw.begin(), raw.end()); }

namespace {

// Solves M k = b on a tree by leaf elimination rooted at `root`.
std::vector<Rational> tree_solve(const PlumbingGraph& g, std::size_t root, const std::vector<Rational>& b) {
  const auto f = root_forest(g, root);
  std::vector<Rational> d(g.size()), y(g.size()), k(g.size());
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    const std::size_t v = *it;
    d[v] = g.weight(v);
    y[v] = b[v];
    for (std::size_t c : f.children[v]) {
      d[v] -= 1 / d[c];
      y[v] -= y[c] / d[c];
    }
    if (d[v] == 0) throw std::invalid_argument("tree_solve: singular pivot");
  }
  for (std::size_t v : f.order) {
    const Rational up = f.parent[v] == RootedForest::npos ? Rational(0) : k[f.parent[v]];
    k[v] = (y[v] - up) / d[v];
  }
  return k;
}

}  // namespace

TauSequence tau_sequence(const PlumbingGraph& g) {
  const auto triple = brieskorn_triple_of(g);
  if (!triple) throw std::invalid_argument("tau_sequence needs a negative-definite three-leg star ZHS");
  const std::size_t center = star_shape(g).center;
  const std::size_t n = g.size();

  std::vector<Rational> b(n);
  for (std::size_t v = 0; v < n; ++v) b[v] = -g.weight(v) - 2;
  const auto k = tree_solve(g, center, b);
  Rational k2 = 0;
  for (std::size_t v = 0; v < n; ++v) k2 += k[v] * b[v];
  const Rational offset = (k2 + Rational(static_cast<std::int64_t>(n))) / 8;
  if (boost::multiprecision::denominator(offset) != 1) throw std::logic_error("K^2 + s not divisible by 8");

  TauSequence tau;
  tau.shift = to_int64(boost::multiprecision::numerator(offset));
  tau.center = triple->tau_center();
  if (tau.center < 0) throw std::logic_error("negative tau center");
  const std::int64_t window = tau.center + triple->product();

  const auto adj = g.adjacency();
  std::vector<std::int64_t> x(n, 0), pairing(n, 0);
  std::int64_t chi = 0;
  auto add = [&](std::size_t u) {
    chi += 1 - pairing[u];
    ++x[u];
    pairing[u] += g.weight(u);
    for (std::size_t y : adj[u]) ++pairing[y];
  };
  tau.raw.reserve(static_cast<std::size_t>(window) + 1);
  tau.raw.push_back(0);
  std::vector<std::size_t> work;
  const std::int64_t budget = std::int64_t(1) << 40;
  std::int64_t steps = 0;
  for (std::int64_t i = 0; i < window; ++i) {
    add(center);
    work.assign(adj[center].begin(), adj[center].end());
    while (!work.empty()) {
      const std::size_t u = work.back();
      work.pop_back();
      if (u == center) continue;
      while (pairing[u] > 0) {
        add(u);
        if (++steps > budget) throw std::invalid_argument("Laufer step does not terminate");
        for (std::size_t y : adj[u])
          if (y != center && pairing[y] > 0) work.push_back(y);
      }
    }
    tau.raw.push_back(chi);
  }

  const auto c = static_cast<std::size_t>(tau.center);
  tau.symmetric = true;
  for (std::size_t i = 0; i <= c; ++i)
    if (tau.raw[i] != tau.raw[c - i]) tau.symmetric = false;
  tau.certified = true;
  for (std::size_t i = c; i + 1 < tau.raw.size(); ++i)
    if (tau.raw[i + 1] < tau.raw[i]) tau.certified = false;
  const std::int64_t head_min = *std::min_element(tau.raw.begin(), tau.raw.begin() + c + 1);
  if (tau.min_raw() != head_min) tau.certified = false;
  return tau;
}

TauSequence tau_sequence(const BrieskornTriple& t) { return tau_sequence(brieskorn_plumbing(t)); }

std::size_t local_minimum_count(const TauSequence& tau) {
  const std::size_t c = static_cast<std::size_t>(tau.center);
  std::vector<std::int64_t> runs;
  for (std::size_t i = 0; i <= c; ++i)
    if (runs.empty() || runs.back() != tau.raw[i]) runs.push_back(tau.raw[i]);
  std::size_t count = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const bool left = i == 0 || runs[i - 1] > runs[i];
    const bool right = i + 1 == runs.size() || runs[i + 1] > runs[i];
    count += left && right;
  }
  return count;
}

std::vector<std::size_t> GradedRoot::leaves() const {
  std::vector<bool> has_child(vertices.size(), false);
  for (const auto& v : vertices)
    if (v.parent != RootVertex::npos) has_child[v.parent] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!has_child[i]) out.push_back(i);
  return out;
}

std::size_t GradedRoot::top() const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].parent == RootVertex::npos) return i;
  throw std::logic_error("graded root without top vertex");
}

GradedRoot graded_root(const TauSequence& tau) {
  const std::size_t c = static_cast<std::size_t>(tau.center);
  const std::size_t len = c + 1;
  GradedRoot root;
  root.shift = tau.shift;
  auto value = [&](std::size_t i) { return tau.raw[i] - tau.shift; };

  std::vector<std::size_t> idx(len);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return value(a) < value(b); });

  std::vector<std::size_t> uf(len), lo(len), hi(len), vert(len, RootVertex::npos);
  std::vector<bool> active(len, false);
  auto find = [&](std::size_t a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    uf[b] = a;
    lo[a] = std::min(lo[a], lo[b]);
    hi[a] = std::max(hi[a], hi[b]);
  };

  const std::size_t mid = c / 2;
  const std::int64_t sym_level = std::max(value(mid), value(c - mid));
  auto make = [&](std::int64_t level, std::size_t l, std::size_t h) {
    root.vertices.push_back(RootVertex{level, level + tau.shift, RootVertex::npos, RootVertex::npos, l, h});
    return root.vertices.size() - 1;
  };

  for (std::size_t s = 0; s < len;) {
    const std::int64_t h = value(idx[s]);
    std::size_t e = s;
    while (e < len && value(idx[e]) == h) ++e;
    std::vector<std::pair<std::size_t, std::size_t>> pending;  // new index, old vertex
    for (std::size_t k = s; k < e; ++k) {
      const std::size_t i = idx[k];
      active[i] = true;
      uf[i] = i;
      lo[i] = hi[i] = i;
      for (std::size_t nb : {i - 1, i + 1})
        if (nb < len && active[nb] && value(nb) < h) pending.emplace_back(i, vert[find(nb)]);
    }
    for (std::size_t k = s; k < e; ++k) {
      const std::size_t i = idx[k];
      for (std::size_t nb : {i - 1, i + 1})
        if (nb < len && active[nb]) unite(i, nb);
    }
    std::map<std::size_t, std::vector<std::size_t>> olds;  // keyed by lo for a stable order
    std::map<std::size_t, std::size_t> root_at;
    for (std::size_t k = s; k < e; ++k) {
      const std::size_t r = find(idx[k]);
      root_at[lo[r]] = r;
      olds[lo[r]];
    }
    for (const auto& [i, v] : pending) olds[lo[find(i)]].push_back(v);
    for (auto& [key, vs] : olds) {
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      const std::size_t r = root_at[key];
      const bool on_axis = h == sym_level && find(mid) == r;
      std::size_t v;
      if (vs.size() == 1 && !on_axis) {
        v = vs[0];
      } else {
        v = make(h, lo[r], hi[r]);
        for (std::size_t child : vs) root.vertices[child].parent = v;
      }
      if (on_axis) root.axis = v;
      vert[r] = v;
    }
    s = e;
  }

  std::map<std::tuple<std::int64_t, std::size_t, std::size_t>, std::size_t> by_key;
  for (std::size_t i = 0; i < root.vertices.size(); ++i) {
    const auto& v = root.vertices[i];
    by_key[{v.grading, v.lo, v.hi}] = i;
  }
  root.symmetric = tau.symmetric;
  for (auto& v : root.vertices) {
    auto it = by_key.find({v.grading, c - v.hi, c - v.lo});
    if (it == by_key.end()) {
      root.symmetric = false;
      continue;
    }
    v.mirror = it->second;
  }
  return root;
}

std::int64_t d_invariant(const GradedRoot& r) {
  std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
  for (std::size_t v : r.leaves()) lowest = std::min(lowest, r.vertices[v].grading);
  return -2 * lowest;
}

namespace {

void require_symmetric(const GradedRoot& r) {
  if (!r.symmetric || r.axis == RootVertex::npos) throw std::invalid_argument("graded root is not symmetric");
}

}  // namespace

GradedRoot monotone_subroot(const GradedRoot& r) {
  require_symmetric(r);
  const std::size_t n = r.vertices.size();
  std::vector<bool> on_axis(n, false);
  for (std::size_t v = r.axis; v != RootVertex::npos; v = r.vertices[v].parent) on_axis[v] = true;
  const std::int64_t axis_level = r.vertices[r.axis].grading;

  struct Cand {
    std::size_t leaf;
    std::int64_t a, b;
  };
  std::vector<Cand> cands;
  for (std::size_t leaf : r.leaves()) {
    if (r.vertices[leaf].grading >= axis_level) continue;
    std::size_t v = leaf;
    while (!on_axis[v]) v = r.vertices[v].parent;
    cands.push_back(Cand{leaf, r.vertices[leaf].grading, r.vertices[v].grading});
  }
  std::vector<bool> keep(n, false);
  for (std::size_t v = r.axis; v != RootVertex::npos; v = r.vertices[v].parent) keep[v] = true;
  for (const auto& x : cands) {
    const bool dominated = std::any_of(cands.begin(), cands.end(), [&](const Cand& y) {
      return y.a <= x.a && y.b <= x.b && (y.a < x.a || y.b < x.b);
    });
    if (dominated) continue;
    for (std::size_t v = x.leaf; v != RootVertex::npos && !keep[v]; v = r.vertices[v].parent) keep[v] = true;
  }

  GradedRoot out;
  out.shift = r.shift;
  out.symmetric = r.symmetric;
  std::vector<std::size_t> map(n, RootVertex::npos);
  for (std::size_t v = 0; v < n; ++v)
    if (keep[v]) {
      map[v] = out.vertices.size();
      out.vertices.push_back(r.vertices[v]);
    }
  for (auto& v : out.vertices) {
    if (v.parent != RootVertex::npos) v.parent = map[v.parent];
    v.mirror = map[v.mirror];
    if (v.mirror == RootVertex::npos) out.symmetric = false;
  }
  out.axis = map[r.axis];
  return out;
}

InvolutiveDs involutive_ds(const GradedRoot& r) {
  require_symmetric(r);
  const GradedRoot sub = monotone_subroot(r);
  InvolutiveDs out;
  out.dbar = d_invariant(sub);
  out.dunder = -2 * r.vertices[r.axis].grading;
  return out;
}

bool is_subroot(const GradedRoot& sub, const GradedRoot& r) {
  using Key = std::tuple<std::int64_t, std::size_t, std::size_t>;
  auto key = [](const RootVertex& v) { return Key{v.grading, v.lo, v.hi}; };
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < r.vertices.size(); ++i) index[key(r.vertices[i])] = i;
  for (const auto& v : sub.vertices) {
    auto it = index.find(key(v));
    if (it == index.end()) return false;
    const auto& w = r.vertices[it->second];
    const bool sub_top = v.parent == RootVertex::npos;
    const bool r_top = w.parent == RootVertex::npos;
    if (sub_top != r_top) return false;
    if (!sub_top && key(sub.vertices[v.parent]) != key(r.vertices[w.parent])) return false;
  }
  return true;
}

nlohmann::json to_json(const GradedRoot& r) {
  nlohmann::json vs = nlohmann::json::array();
  auto ref = [](std::size_t x) { return x == RootVertex::npos ? nlohmann::json(nullptr) : nlohmann::json(x); };
  for (std::size_t i = 0; i < r.vertices.size(); ++i) {
    const auto& v = r.vertices[i];
    vs.push_back({{"index", i},
                  {"grading", v.grading},
                  {"raw", v.raw},
                  {"parent", ref(v.parent)},
                  {"mirror", ref(v.mirror)},
                  {"span", {v.lo, v.hi}}});
  }
  nlohmann::json j{{"format", "graded-root-v1"},
                   {"shift", r.shift},
                   {"vertices", vs},
                   {"leaves", r.leaves()},
                   {"axis", ref(r.axis)},
                   {"symmetric", r.symmetric},
                   {"d", d_invariant(r)}};
  if (r.symmetric) {
    const auto ds = involutive_ds(r);
    j["dbar"] = ds.dbar;
    j["dunder"] = ds.dunder;
    j["monotone_trivial"] = monotone_subroot(r).is_trivial();
  }
  return j;
}

std::string to_dot(const GradedRoot& r) {
  std::ostringstream os;
  os << "digraph graded_root {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < r.vertices.size(); ++i) {
    os << "  n" << i << " [label=\"" << r.vertices[i].grading << "\"";
    if (i == r.axis) os << ", shape=box";
    os << "];\n";
  }
  for (std::size_t i = 0; i < r.vertices.size(); ++i)
    if (r.vertices[i].parent != RootVertex::npos) os << "  n" << i << " -> n" << r.vertices[i].parent << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace plumbcalc
