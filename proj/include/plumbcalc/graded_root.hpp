#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "plumbcalc/graph.hpp"
#include "plumbcalc/seifert.hpp"

namespace plumbcalc {

struct TauSequence {
  std::vector<std::int64_t> raw;  // raw[0] = 0
  std::int64_t shift = 0;         // (K^2 + s) / 8
  std::int64_t center = 0;        // symmetry center c
  bool symmetric = false;         // raw[i] == raw[c - i] on [0, c]
  bool certified = false;         // increments >= 0 on one full period past c

  std::int64_t normalized(std::size_t i) const { return raw[i] - shift; }
  std::int64_t min_raw() const;
  std::int64_t min_normalized() const { return min_raw() - shift; }
};

// Laufer sequence on the canonical plumbing.
TauSequence tau_sequence(const BrieskornTriple& t);
// Same on any negative-definite three-leg star with |det| = 1.
TauSequence tau_sequence(const PlumbingGraph& star);

struct RootVertex {
  std::int64_t grading = 0;  // normalized
  std::int64_t raw = 0;
  std::size_t parent = npos;
  std::size_t mirror = npos;
  std::size_t lo = 0, hi = 0;  // span of the sublevel component at creation
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  bool operator==(const RootVertex&) const = default;
};

struct GradedRoot {
  std::vector<RootVertex> vertices;
  std::size_t axis = RootVertex::npos;  // lowest involution-fixed vertex
  std::int64_t shift = 0;
  bool symmetric = false;

  std::vector<std::size_t> leaves() const;
  std::size_t top() const;
  bool is_trivial() const { return leaves().size() == 1; }
  bool operator==(const GradedRoot&) const = default;
};

// Merge tree of sublevel sets of tau on [0, c].
GradedRoot graded_root(const TauSequence& tau);
// -2 * lowest leaf grading.
std::int64_t d_invariant(const GradedRoot& r);

struct InvolutiveDs {
  std::int64_t dbar = 0, dunder = 0;
};
InvolutiveDs involutive_ds(const GradedRoot& r);
GradedRoot monotone_subroot(const GradedRoot& r);
// Every vertex of sub appears in r with the same grading, span and parent.
bool is_subroot(const GradedRoot& sub, const GradedRoot& r);

// Strict local minima of tau on [0, c], plateaus counted once.
std::size_t local_minimum_count(const TauSequence& tau);

nlohmann::json to_json(const GradedRoot& r);
std::string to_dot(const GradedRoot& r);

}  // namespace plumbcalc
