#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plumbcalc/graph.hpp"

namespace plumbcalc {

struct BrieskornTriple {
  std::int64_t p = 0, q = 0, r = 0;
  // Sorts and checks pairwise coprimality (std::invalid_argument).
  static BrieskornTriple make(std::int64_t a, std::int64_t b, std::int64_t c);
  std::int64_t product() const { return p * q * r; }
  // Symmetry center of the tau sequence: pqr - pq - qr - pr + 1.
  std::int64_t tau_center() const { return p * q * r - p * q - q * r - p * r + 1; }
  bool operator==(const BrieskornTriple&) const = default;
};

std::string to_string(const BrieskornTriple& t);

struct SeifertLeg {
  std::int64_t alpha = 1, omega = 0;
  bool operator==(const SeifertLeg&) const = default;
};

struct SeifertData {
  std::int64_t e0 = 0;
  std::vector<SeifertLeg> legs;
  Rational orbifold_euler() const;
};

// Negative-definite star, |det| = 1. Vertex ids: "c" and "<p|q|r><k>" along each leg.
PlumbingGraph brieskorn_plumbing(const BrieskornTriple& t);
// Id of the far end of the leg of multiplicity alpha.
std::string leg_end(const PlumbingGraph& g, std::int64_t alpha);

struct StarShape {
  std::size_t center = 0;
  std::vector<std::vector<std::size_t>> legs;  // each ordered outward from the center
};
// Throws for graphs with more than one vertex of valence >= 3 or cycles.
StarShape star_shape(const PlumbingGraph& g);

// Legs decode to alpha/omega by evaluating the negated weights.
SeifertData seifert_data(const PlumbingGraph& g);

// framing -1 gives (p, q, pq - 1), framing +1 gives (p, q, pq + 1).
BrieskornTriple torus_knot_surgery(std::int64_t p, std::int64_t q, int framing);

// Joins g1 and g2 by a chain e_n - X - Y - e_m at the arrowed leg ends.
PlumbingGraph splice(const PlumbingGraph& g1, const std::string& arrow1, const PlumbingGraph& g2,
                     const std::string& arrow2);
// Same assembly with caller-supplied inserted weights.
PlumbingGraph splice_with_weights(const PlumbingGraph& g1, const std::string& arrow1,
                                  const PlumbingGraph& g2, const std::string& arrow2, std::int64_t x,
                                  std::int64_t y);
// Weight inserted next to an arrowed end: -det(-M(g minus the end)).
std::int64_t splice_weight(const PlumbingGraph& g, const std::string& arrow);

BrieskornTriple sigma1_triple(std::int64_t n);
BrieskornTriple sigma2_triple(std::int64_t n);
// Brieskorn plumbings with an arrow "K(r)" on the leg of the largest multiplicity.
PlumbingGraph sigma1(std::int64_t n);
PlumbingGraph sigma2(std::int64_t n);
PlumbingGraph with_arrow(PlumbingGraph g, const std::string& at, const std::string& label);

}  // namespace plumbcalc
