#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

// Exponent key of one term: t-exponent first, then the fugacity exponent
// vector compared lexicographically.  Map order is display order.
using SeriesKey = std::pair<int, std::vector<Int>>;

// Power series in t with coefficients in the Laurent ring of `fugacity_rank`
// variables, truncated above t^order.  Coefficients are exact rationals.
// Binary operations truncate to the smaller order and require equal ranks.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int order, int fugacity_rank = 0)
      : order_(order), rank_(fugacity_rank) {}

  static TruncatedSeries constant(const Rational& c, int order, int fugacity_rank = 0);

  int order() const { return order_; }
  int fugacity_rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<SeriesKey, Rational>& terms() const { return terms_; }

  // Adds c * t^t_exp * z^fug, dropping the term if it lands above the
  // truncation order or cancels to zero.  An empty fug means z^0.
  void add_term(int t_exp, std::vector<Int> fug, const Rational& c);
  void add_term(int t_exp, const Rational& c) { add_term(t_exp, {}, c); }

  // Coefficient of t^t_exp * z^fug; zero if absent.  Empty fug means z^0.
  Rational coeff(int t_exp, std::vector<Int> fug = {}) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const Rational& c) const;

  bool operator==(const TruncatedSeries& rhs) const;

  // Forgets the fugacity grading: sets every z to 1.
  TruncatedSeries evaluate_fugacities_at_one() const;

  std::string str() const;

 private:
  int order_ = 0;
  int rank_ = 0;
  std::map<SeriesKey, Rational> terms_;

  std::vector<Int> normalize_fug(std::vector<Int> fug) const;
};

inline TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
  a += b;
  return a;
}
inline TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
  a -= b;
  return a;
}

// Truncated expansion of 1 / (1 - t^k), k >= 1.
TruncatedSeries geometric_factor(int k, int order);

// Multiplicative inverse.  The t^0 slice must be a single nonzero term.
TruncatedSeries inverse_unit(const TruncatedSeries& a);

}  // namespace coulomb
