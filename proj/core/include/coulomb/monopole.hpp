#pragma once

#include <vector>

#include "coulomb/rational.hpp"
#include "coulomb/series.hpp"
#include "coulomb/theory.hpp"

namespace coulomb {

// Dimension exponent of a dominant coweight:
//   Δ(m) = −Σ_{α∈Δ⁺} |⟨α,m⟩| + ½ Σ_{ρ∈weights} |⟨ρ,m⟩|
// with Δ⁺ the positive roots e_a − e_b (a < b) of the gl blocks.
Rational delta(const GaugeTheory& th, const Coweight& m);

// Classical dressing factor P(t;m) = ∏ 1/(1−t^{2d}) over the Casimir
// degrees of the stabilizer of m: degrees 1..k per gl(k) stabilizer block,
// degree 1 per torus coordinate.
TruncatedSeries dressing_factor(const GaugeTheory& th, const Coweight& m, int order);

struct MonopoleTerm {
  Coweight coweight;
  Rational delta;
  TruncatedSeries dressing;
  std::vector<Int> pi1;
};

MonopoleTerm monopole_term(const GaugeTheory& th, const Coweight& m, int order);

struct ConvergenceVerdict {
  bool good = true;
  Coweight witness;           // primitive generator with exponent <= 0 when divergent
  Rational witness_delta;     // Δ at the witness
  Rational witness_exponent;  // 2Δ + <shift, π₁>; equals 2Δ when unshifted
};

// Decomposes the dominant cone by the weight hyperplanes; the theory is
// good iff every subcone is pointed and the exponent is positive on every
// generator.  Total function.
ConvergenceVerdict check_convergence(const GaugeTheory& th);

// Same with the exponent 2Δ(m) + <shift, π₁(m)>; shift has length
// th.pi1_rank().
ConvergenceVerdict check_convergence_shifted(const GaugeTheory& th,
                                             const std::vector<Int>& shift);

// The error text for a divergent verdict, e.g.
// "divergent: Coulomb branch is not a cone (witness coweight m=1, Δ=0)".
std::string divergence_message(const GaugeTheory& th, const ConvergenceVerdict& v);

// All dominant m with Δ(m) <= delta_bound, in lexicographic order.
// Throws DomainError when the set is infinite.
std::vector<Coweight> enumerate_coweights(const GaugeTheory& th, const Rational& delta_bound);

struct HilbertOptions {
  int order = 0;
  bool refined = false;
  std::vector<Int> shift;  // optional π₁ character; empty = no shift
  int threads = 1;
};

// Monopole formula H(t) = Σ_m t^{2Δ(m)} P(t;m), truncated at opt.order;
// refined series carry the fugacity monomial z^{π₁(m)}.  Deterministic for
// every thread count.
TruncatedSeries hilbert_series(const GaugeTheory& th, const HilbertOptions& opt);
TruncatedSeries hilbert_series(const GaugeTheory& th, int order, bool refined = false);

}  // namespace coulomb
