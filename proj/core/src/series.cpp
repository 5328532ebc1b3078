#include "coulomb/series.hpp"

#include <sstream>

#include "coulomb/errors.hpp"

namespace coulomb {

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.fugacity_rank() != b.fugacity_rank()) {
    throw DomainError("fugacity rank mismatch: " + std::to_string(a.fugacity_rank()) +
                      " vs " + std::to_string(b.fugacity_rank()));
  }
}

std::string fugacity_name(int rank, int i) {
  return rank == 1 ? "z" : "z" + std::to_string(i + 1);
}

}  // namespace

std::vector<Int> TruncatedSeries::normalize_fug(std::vector<Int> fug) const {
  if (fug.empty()) return std::vector<Int>(rank_, 0);
  if (static_cast<int>(fug.size()) != rank_) {
    throw DomainError("fugacity vector length " + std::to_string(fug.size()) +
                      " does not match rank " + std::to_string(rank_));
  }
  return fug;
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order, int fugacity_rank) {
  TruncatedSeries s(order, fugacity_rank);
  s.add_term(0, c);
  return s;
}

void TruncatedSeries::add_term(int t_exp, std::vector<Int> fug, const Rational& c) {
  if (t_exp > order_ || c == 0) return;
  SeriesKey key{t_exp, normalize_fug(std::move(fug))};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TruncatedSeries::coeff(int t_exp, std::vector<Int> fug) const {
  auto it = terms_.find(SeriesKey{t_exp, normalize_fug(std::move(fug))});
  return it == terms_.end() ? Rational(0) : it->second;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  check_compatible(*this, rhs);
  int new_order = std::min(order_, rhs.order_);
  if (new_order < order_) {
    order_ = new_order;
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = it->first.first > order_ ? terms_.erase(it) : std::next(it);
    }
  }
  for (const auto& [key, c] : rhs.terms_) {
    if (key.first > order_) continue;
    add_term(key.first, key.second, c);
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  return *this += rhs * Rational(-1);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  check_compatible(*this, rhs);
  TruncatedSeries out(std::min(order_, rhs.order_), rank_);
  for (const auto& [ka, ca] : terms_) {
    if (ka.first > out.order_) continue;
    for (const auto& [kb, cb] : rhs.terms_) {
      int t = ka.first + kb.first;
      if (t > out.order_) break;  // rhs map is ordered by t-exponent first
      std::vector<Int> fug(rank_);
      for (int i = 0; i < rank_; ++i) fug[i] = ka.second[i] + kb.second[i];
      out.add_term(t, std::move(fug), ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
  TruncatedSeries out(order_, rank_);
  if (c == 0) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
  return out;
}

bool TruncatedSeries::operator==(const TruncatedSeries& rhs) const {
  return order_ == rhs.order_ && rank_ == rhs.rank_ && terms_ == rhs.terms_;
}

TruncatedSeries TruncatedSeries::evaluate_fugacities_at_one() const {
  TruncatedSeries out(order_, 0);
  for (const auto& [key, c] : terms_) out.add_term(key.first, c);
  return out;
}

std::string TruncatedSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::vector<std::string> parts;
    if (key.first != 0) {
      parts.push_back(key.first == 1 ? "t" : "t^" + std::to_string(key.first));
    }
    for (int i = 0; i < rank_; ++i) {
      Int e = key.second[i];
      if (e == 0) continue;
      std::string p = fugacity_name(rank_, i);
      if (e != 1) p += "^" + std::to_string(e);
      parts.push_back(std::move(p));
    }
    if (parts.empty() || mag != 1) {
      os << to_string(mag);
      for (const auto& p : parts) os << "*" << p;
    } else {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << "*";
        os << parts[i];
      }
    }
  }
  return os.str();
}

TruncatedSeries geometric_factor(int k, int order) {
  if (k < 1) throw DomainError("geometric_factor requires k >= 1");
  TruncatedSeries s(order, 0);
  for (int e = 0; e <= order; e += k) s.add_term(e, Rational(1));
  return s;
}

TruncatedSeries inverse_unit(const TruncatedSeries& a) {
  // Slice the series by t-degree; each slice is a Laurent polynomial in the
  // fugacities.  b_0 = a_0^{-1} needs the t^0 slice to be one term.
  using Slice = std::map<std::vector<Int>, Rational>;
  std::map<int, Slice> slices;
  for (const auto& [key, c] : a.terms()) slices[key.first][key.second] = c;

  auto it0 = slices.find(0);
  if (it0 == slices.end() || it0->second.size() != 1 ||
      it0->second.begin()->first != std::vector<Int>(a.fugacity_rank(), 0)) {
    throw DomainError("inverse_unit: constant slot is not a nonzero fugacity-free rational");
  }
  if (!slices.empty() && slices.begin()->first < 0) {
    throw DomainError("inverse_unit: negative t-exponents are not supported");
  }
  const std::vector<Int>& v0 = it0->second.begin()->first;
  const Rational& c0 = it0->second.begin()->second;

  const int rank = a.fugacity_rank();
  std::vector<Int> v0_neg(v0.size());
  for (std::size_t i = 0; i < v0.size(); ++i) v0_neg[i] = -v0[i];

  auto mul_slice = [&](const Slice& x, const Slice& y) {
    Slice out;
    for (const auto& [vx, cx] : x)
      for (const auto& [vy, cy] : y) {
        std::vector<Int> v(rank);
        for (int i = 0; i < rank; ++i) v[i] = vx[i] + vy[i];
        Rational& dst = out[v];
        dst += cx * cy;
        if (dst == 0) out.erase(v);
      }
    return out;
  };
  auto inv0_times = [&](const Slice& x) {  // multiply by a_0^{-1} = (1/c0) z^{-v0}
    Slice out;
    for (const auto& [v, c] : x) {
      std::vector<Int> w(rank);
      for (int i = 0; i < rank; ++i) w[i] = v[i] - v0[i];
      out[w] = c / c0;
    }
    return out;
  };

  std::map<int, Slice> b;
  b[0] = Slice{{std::vector<Int>(rank, 0), Rational(1)}};
  b[0] = inv0_times(b[0]);
  for (int n = 1; n <= a.order(); ++n) {
    Slice acc;
    for (const auto& [k, ak] : slices) {
      if (k <= 0 || k > n) continue;
      auto bit = b.find(n - k);
      if (bit == b.end()) continue;
      for (auto& [v, c] : mul_slice(ak, bit->second)) {
        Rational& dst = acc[v];
        dst += c;
        if (dst == 0) acc.erase(v);
      }
    }
    if (acc.empty()) continue;
    Slice bn;
    for (auto& [v, c] : inv0_times(acc)) bn[v] = -c;
    if (!bn.empty()) b[n] = std::move(bn);
  }

  TruncatedSeries out(a.order(), rank);
  for (const auto& [n, slice] : b)
    for (const auto& [v, c] : slice) out.add_term(n, v, c);
  return out;
}

}  // namespace coulomb
