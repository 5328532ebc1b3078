#pragma once

#include <map>
#include <string>
#include <vector>

#include "coulomb/rational.hpp"
#include "coulomb/theory.hpp"

namespace coulomb {

// Polynomial in w_1..w_rank and ħ with rational coefficients.  The exponent
// key stores the w-exponents followed by the ħ-exponent.
class CoefficientPoly {
 public:
  explicit CoefficientPoly(int rank) : rank_(rank) {}

  static CoefficientPoly constant(int rank, const Rational& c);
  static CoefficientPoly variable_w(int rank, int i);
  static CoefficientPoly variable_hbar(int rank);
  // Linear form Σ coeffs_i w_i + (hbar_mult) ħ.
  static CoefficientPoly linear_form(const std::vector<Int>& coeffs, Int hbar_mult);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  void add_term(std::vector<int> exps, const Rational& c);

  CoefficientPoly operator+(const CoefficientPoly& rhs) const;
  CoefficientPoly operator-(const CoefficientPoly& rhs) const;
  CoefficientPoly operator*(const CoefficientPoly& rhs) const;
  CoefficientPoly operator*(const Rational& c) const;
  bool operator==(const CoefficientPoly& rhs) const;

  bool uses_hbar() const;
  // Substitution w_i ↦ w_i + ħ λ_i.
  CoefficientPoly shifted_by(const std::vector<Int>& lambda) const;
  CoefficientPoly at_hbar_zero() const;
  // Exact division by ħ; false return means some term had no ħ factor.
  bool divided_by_hbar(CoefficientPoly& out) const;

 private:
  int rank_;
  std::map<std::vector<int>, Rational> terms_;  // exponents: w_1..w_rank, ħ
};

// Element of the (quantized) abelian Coulomb branch algebra in normal form:
// a finite sum of p(w, ħ) · e^λ over lattice points λ.
class AbelianElement {
 public:
  explicit AbelianElement(int rank) : rank_(rank) {}

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<Int>, CoefficientPoly>& terms() const { return terms_; }

  void add(const std::vector<Int>& lambda, const CoefficientPoly& p);

  AbelianElement operator+(const AbelianElement& rhs) const;
  AbelianElement operator-(const AbelianElement& rhs) const;
  AbelianElement operator*(const Rational& c) const;
  bool operator==(const AbelianElement& rhs) const;

  bool uses_hbar() const;
  AbelianElement at_hbar_zero() const;

 private:
  int rank_;
  std::map<std::vector<Int>, CoefficientPoly> terms_;
};

struct PresentationTerm {
  Rational coeff;
  std::vector<int> exponents;  // parallel to Presentation::generators
};

struct PresentationGenerator {
  std::string name;
  int t_degree = 0;
  std::vector<Int> pi1;        // λ for lattice generators, zero for w-variables
  bool is_lattice = false;
  std::vector<Int> lattice;    // λ; empty for w-variables
  Rational scale = 1;          // generator element = (1/scale) e^λ
  int w_index = -1;
};

struct PresentationRelation {
  int lhs_a = 0, lhs_b = 0;  // generator indices: lhs = gen[lhs_a] * gen[lhs_b]
  std::vector<PresentationTerm> rhs;
};

struct Presentation {
  std::vector<PresentationGenerator> generators;
  std::vector<PresentationRelation> relations;
};

struct LocalizationWitness {
  std::vector<Int> lambda;
  AbelianElement lhs;  // e^λ ∗ e^{−λ} through the generic product
  AbelianElement rhs;  // ∏_j ρ_j(w)^{|ρ_j(λ)|} e^0 built directly
  bool verified = false;
};

// The Coulomb branch algebra of a torus gauge theory.
class AbelianAlgebra {
 public:
  // Requires gl_factors empty (run the theory through validate_theory
  // first: GL(1) factors fold into the torus).
  static AbelianAlgebra from_theory(const GaugeTheory& th);

  int rank() const { return rank_; }
  const std::vector<std::vector<Int>>& weights() const { return weights_; }
  const GaugeTheory& theory() const { return theory_; }

  AbelianElement zero() const { return AbelianElement(rank_); }
  AbelianElement one() const;
  AbelianElement constant(const Rational& c) const;
  AbelianElement e(const std::vector<Int>& lambda) const;
  AbelianElement w(int i) const;
  AbelianElement hbar() const;

  // ½ Σ_j |ρ_j(λ)|; the t-degree of e^λ is 2Δ(λ).
  Rational delta_of(const std::vector<Int>& lambda) const;

  // Commutative product: e^λ ∗ e^μ = ∏_j ρ_j(w)^{d_j} e^{λ+μ}.  Rejects ħ.
  AbelianElement multiply_classical(const AbelianElement& a, const AbelianElement& b) const;

  // Noncommutative normal-form product; ħ=0 recovers the classical one.
  AbelianElement multiply_quantized(const AbelianElement& a, const AbelianElement& b) const;

  // (ab − ba)/ħ at ħ=0 for ħ-free a, b.
  AbelianElement poisson_bracket(const AbelianElement& a, const AbelianElement& b) const;

  // Dimension of the degree-d piece on the monomial basis {w^a e^λ},
  // deg_t = 2Σa + 2Δ(λ).  The independent oracle for the monopole series.
  long long graded_dimension(int d) const;
  std::map<std::vector<Int>, long long> graded_dimension_refined(int d) const;
  // Single scan serving all degrees 0..d.
  std::vector<long long> graded_dimensions_up_to(int d) const;

  // Generators and machine-verified relations; emitted for divergent torus
  // theories too (Laurent-type answers are finite data).
  Presentation presentation() const;

  LocalizationWitness localization_units(const std::vector<Int>& lambda) const;

 private:
  AbelianAlgebra(GaugeTheory th);

  void check_element(const AbelianElement& x) const;
  CoefficientPoly classical_pair_factor(const std::vector<Int>& lambda,
                                        const std::vector<Int>& mu) const;
  CoefficientPoly quantized_pair_factor(const std::vector<Int>& lambda,
                                        const std::vector<Int>& mu) const;

  GaugeTheory theory_;
  int rank_;
  std::vector<std::vector<Int>> weights_;
};

// Evaluates coeff * ∏ generators^exponents with multiply_classical.
AbelianElement evaluate_presentation_term(const AbelianAlgebra& alg, const Presentation& pres,
                                          const PresentationTerm& term);

// Re-checks every relation under multiply_classical.
bool verify_presentation(const AbelianAlgebra& alg, const Presentation& pres);

// Dimensions of the spans of degree-d products of presentation generators,
// d = 0..max_degree.  For a good theory these must equal graded_dimension.
std::vector<long long> dimensions_from_presentation(const AbelianAlgebra& alg,
                                                    const Presentation& pres, int max_degree);

}  // namespace coulomb
