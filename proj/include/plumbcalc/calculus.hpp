#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plumbcalc/graph.hpp"

namespace plumbcalc {

// Removes a +-1 vertex of valence <= 2; neighbors shift by -weight(v).
PlumbingGraph blow_down(const PlumbingGraph& g, const std::string& v);
// Inserts a vertex of weight `sign` on one copy of edge a-b; a, b shift by sign.
PlumbingGraph blow_up_edge(const PlumbingGraph& g, const std::string& a, const std::string& b,
                           int sign = -1);
// Attaches a leaf of weight `sign` to v; v shifts by sign.
PlumbingGraph blow_up_vertex(const PlumbingGraph& g, const std::string& v, int sign = -1);
// Removes a 0-weight valence-2 vertex and merges its neighbors.
PlumbingGraph absorb_zero_chain(const PlumbingGraph& g, const std::string& v);

bool can_blow_down(const PlumbingGraph& g, std::size_t v);
bool can_absorb(const PlumbingGraph& g, std::size_t v);

// Applies the first applicable move in id order until none applies.
PlumbingGraph reduce(const PlumbingGraph& g);

struct SpliceEdge {
  std::size_t a = 0, b = 0;
  BigInt weight_a, weight_b;  // weight at a (resp. b) toward the edge
};

struct SpliceDiagram {
  std::vector<std::string> node_ids;               // representative vertex per node
  std::vector<std::vector<BigInt>> leaf_weights;   // sorted per node
  std::vector<SpliceEdge> edges;

  std::size_t node_count() const { return leaf_weights.size(); }
  // Isomorphism-invariant encoding.
  std::string canonical() const;
};

// Throws std::invalid_argument for non-trees, non-ZHS, or non-coprime nodes.
SpliceDiagram splice_diagram(const PlumbingGraph& g);
BigInt edge_determinant(const SpliceDiagram& d, std::size_t edge);
std::vector<BigInt> edge_determinants(const SpliceDiagram& d);

enum class Verdict { Equivalent, Distinct, Unknown };

struct Witness {
  std::string invariant;
  std::string left, right;
};

struct EquivalenceVerdict {
  Verdict tag = Verdict::Unknown;
  std::optional<Witness> witness;
  std::string reason;
};

std::string to_string(Verdict v);

// Both graphs must be ZHS trees (std::invalid_argument otherwise).
EquivalenceVerdict equivalent(const PlumbingGraph& g1, const PlumbingGraph& g2);

}  // namespace plumbcalc
