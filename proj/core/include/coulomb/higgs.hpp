#pragma once

#include <vector>

#include "coulomb/rational.hpp"
#include "coulomb/theory.hpp"

namespace coulomb {

// Hypermultiplet side of an abelian mirror pair: a torus (ℂ^×)^torus_rank
// acting on D hyper pairs (x_j, y_j) with charges (q_j, −q_j).  degree_cap
// guards the brute-force monomial enumeration.
struct HiggsProblem {
  int torus_rank = 0;
  std::vector<std::vector<Int>> charges;  // q_j, one row per hyper
  int degree_cap = 0;
};

// The flavor torus of an exact sequence acting on ℂ^d: q_j is the j-th
// column of the projection matrix.
HiggsProblem higgs_from_sequence(const TorusSequence& s, int degree_cap);

// Dimension of the degree-d piece of the hyperkähler quotient coordinate
// ring: charge-zero monomials of degree d, minus the rank of the span of
// μ_i·m over charge-zero monomials m of degree d−2, where
// μ_i = Σ_j (q_j)_i x_j y_j.  Exact rational linear algebra throughout;
// deliberately shares no code with the Coulomb side.
long long higgs_graded_dimension(const HiggsProblem& p, int degree);

// All degrees 0..degree in one pass; reuses monomial tables across degrees.
std::vector<long long> higgs_dimensions_up_to(const HiggsProblem& p, int degree);

struct DualityReport {
  bool match = true;
  int order = 0;
  int mismatch_degree = -1;  // first mismatch; set when !match
  long long coulomb_coeff = 0;
  long long higgs_coeff = 0;
  std::vector<long long> coulomb_dims;
  std::vector<long long> higgs_dims;
};

// Coulomb branch of the sub-torus gauge theory vs the Higgs construction of
// the flavor torus on the same hypers, compared degree by degree through
// t^order.  Validates the sequence first; a divergent Coulomb side throws.
DualityReport check_toric_duality(const TorusSequence& s, int order);

}  // namespace coulomb
