#pragma once

#include <cstdint>
#include <string>

#include "plumbcalc/graph.hpp"

namespace plumbcalc {

struct CutData {
  std::int64_t a = 1, b = 1;
};

struct ExpandResult {
  PlumbingGraph graph;
  std::string e0;  // id of the inserted (-1) vertex
};

// Replaces one copy of edge vk-vl by the chain for (a+b)/b on the vk side, a
// (-1) vertex E0, and the chain for (a+b)/a on the vl side.
ExpandResult expand_edge(const PlumbingGraph& g, const std::string& vk, const std::string& vl, CutData cut);
// expand_edge followed by deleting E0; the edge must lie on a cycle.
PlumbingGraph cut_cycle(const PlumbingGraph& g, const std::string& vk, const std::string& vl, CutData cut);

// Blows down unarrowed (-1) vertices of valence <= 2 in id order until none remain.
PlumbingGraph contract_minus_ones(const PlumbingGraph& g);

PlumbingGraph family_gm(std::int64_t k, CutData ab, CutData cd);
PlumbingGraph family_X(std::int64_t n);
PlumbingGraph family_Y(std::int64_t n);
PlumbingGraph family_Z(std::int64_t n);
PlumbingGraph family_W(std::int64_t n);

struct HandleCounts {
  std::int64_t h0 = 0, h1 = 0, h2 = 0;
  bool operator==(const HandleCounts&) const = default;
};

// family in {"X", "Y", "Z", "W"}.
HandleCounts expected_handle_counts(const std::string& family, std::int64_t n);

}  // namespace plumbcalc
