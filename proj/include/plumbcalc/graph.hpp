#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "plumbcalc/numeric.hpp"

namespace plumbcalc {

struct Vertex {
  std::string id;
  std::int64_t weight = 0;
};

struct Arrow {
  std::size_t at = 0;
  std::string label;
};

using Edge = std::pair<std::size_t, std::size_t>;

// Weighted multigraph of genus-0 vertices. Vertex order is insertion order and
// is preserved by serialization.
class PlumbingGraph {
 public:
  std::size_t add_vertex(std::string id, std::int64_t weight);
  void add_edge(std::size_t a, std::size_t b);
  // Removes one copy of the edge; returns false if absent.
  bool remove_edge(std::size_t a, std::size_t b);
  void add_arrow(std::size_t at, std::string label);
  void set_weight(std::size_t v, std::int64_t w) { vertices_[v].weight = w; }
  void add_weight(std::size_t v, std::int64_t dw) { vertices_[v].weight += dw; }

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const Vertex& vertex(std::size_t v) const { return vertices_[v]; }
  std::int64_t weight(std::size_t v) const { return vertices_[v].weight; }
  const std::string& id(std::size_t v) const { return vertices_[v].id; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<std::size_t> find(std::string_view id) const;
  // Throws std::invalid_argument for unknown ids.
  std::size_t index_of(std::string_view id) const;

  // Neighbor lists; a neighbor appears once per parallel edge.
  std::vector<std::vector<std::size_t>> adjacency() const;
  std::size_t valence(std::size_t v) const;
  std::size_t edge_multiplicity(std::size_t a, std::size_t b) const;
  bool has_arrow(std::size_t v) const;
  std::vector<std::string> arrow_labels(std::size_t v) const;
  std::optional<std::size_t> arrow_vertex(std::string_view label) const;

  bool is_connected() const;
  bool is_tree() const;
  std::size_t component_count() const;
  // First Betti number: |E| - |V| + #components.
  std::size_t cycle_rank() const;

  // Induced subgraph on vertices with keep[v]; arrows on dropped vertices go too.
  PlumbingGraph induced(const std::vector<bool>& keep) const;
  // Same graph with every id prefixed.
  PlumbingGraph with_prefix(std::string_view prefix) const;
  // Unused id of the form stem, stem1, stem2, ...
  std::string fresh_id(std::string_view stem) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> index_;
};

using IntegerMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

// Throws std::invalid_argument on self-loops or, unless allowed, disconnection.
void validate(const PlumbingGraph& g, bool allow_disconnected = false);

IntegerMatrix intersection_matrix(const PlumbingGraph& g);

// Trees and forests use leaf elimination, everything else Bareiss.
BigInt determinant(const PlumbingGraph& g);
// Fraction-free rooted leaf elimination; g must be a forest.
BigInt leaf_elimination_determinant(const PlumbingGraph& g);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  int signature() const { return static_cast<int>(positive) - static_cast<int>(negative); }
};

Inertia inertia(const PlumbingGraph& g);
int signature(const PlumbingGraph& g);
bool is_negative_definite(const PlumbingGraph& g);

bool is_homology_sphere(const PlumbingGraph& g);
bool is_absolutely_minimal(const PlumbingGraph& g);

// AHU encoding rooted at the centroid; throws on non-trees.
std::string canonical_form(const PlumbingGraph& g);

// Rooted BFS order of a forest: order[0..n), parent (npos for roots).
struct RootedForest {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order;
  std::vector<std::size_t> parent;
  std::vector<std::vector<std::size_t>> children;
};
RootedForest root_forest(const PlumbingGraph& g, std::size_t preferred_root = 0);

}  // namespace plumbcalc
