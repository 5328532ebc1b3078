#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coulomb/intmat.hpp"
#include "coulomb/rational.hpp"

namespace coulomb {

// Coweight of the maximal torus: one integer per gauge coordinate.
using Coweight = std::vector<Int>;

// Gauge group ∏_b GL(n_b) × (ℂ^×)^torus_rank acting on a sum of weight
// lines.  Coordinates are laid out gl blocks first (declaration order),
// then torus coordinates.  Weight vectors use the same layout.
struct GaugeTheory {
  std::vector<int> gl_factors;            // block ranks, each >= 2 once validated
  int torus_rank = 0;
  std::vector<std::vector<Int>> weights;  // rows of length total_rank(), sorted

  int total_rank() const;
  int num_gl() const { return static_cast<int>(gl_factors.size()); }
  int block_start(int b) const;           // first coordinate of gl block b
  int torus_start() const;                // first torus coordinate
  // One component per gl block plus one per torus coordinate.
  int pi1_rank() const { return num_gl() + torus_rank; }
  bool is_abelian() const { return gl_factors.empty(); }
};

// Checks invariants and canonicalizes: GL(1) blocks become torus
// coordinates (identical groups, and the abelian machinery keys on
// gl_factors being empty), weight rows are sorted lexicographically.
GaugeTheory validate_theory(GaugeTheory raw);

// Dominance: entries within each gl block are nonincreasing.
bool is_dominant(const GaugeTheory& th, const Coweight& m);

// Topological charge: per gl block the entry sum, torus entries verbatim.
std::vector<Int> pi1_class(const GaugeTheory& th, const Coweight& m);

struct QuiverVertex {
  std::string name;
  int dim_v = 0;
  int dim_w = 0;
};

struct QuiverSpec {
  std::vector<QuiverVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // (out-vertex, in-vertex) indices, loops allowed
};

// Gauge group ∏ GL(V_i) with the edge and framing weight lines.
GaugeTheory from_quiver(const QuiverSpec& q);

// Exact sequence of tori 1 → T → T̃ → T_F → 1 presented by an inclusion
// (d × (d−n)) and a projection (n × d) matrix.
struct TorusSequence {
  IntMat inclusion;
  IntMat projection;
};

// Enforces projection·inclusion = 0 and unit invariant factors on both
// matrices (genuine exactness with torsion-free cokernels).
void validate_sequence(const TorusSequence& s);

// Swaps the roles of the two ends: inclusion' = projectionᵀ,
// projection' = inclusionᵀ.  An involution.
TorusSequence dualize_torus(const TorusSequence& s);

// The torus theory of T acting on ℂ^d through the inclusion; by default the
// ambient weights are the standard characters of T̃ = (ℂ^×)^d.
GaugeTheory restrict_to_subtorus(const TorusSequence& s,
                                 const std::vector<std::vector<Int>>& ambient_weights = {});

}  // namespace coulomb
