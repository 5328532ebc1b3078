#include "coulomb/higgs.hpp"

#include <map>
#include <stdexcept>

#include "coulomb/errors.hpp"
#include "coulomb/monopole.hpp"

namespace coulomb {

namespace {

// Exact-degree monomials in x_1..x_D, y_1..y_D with zero total charge.
// Exponent layout: a_1..a_D, b_1..b_D.
std::vector<std::vector<int>> charge_zero_monomials(const HiggsProblem& p, int degree) {
  const int D = static_cast<int>(p.charges.size());
  const int n = p.torus_rank;
  std::vector<std::vector<int>> out;
  if (D == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  std::vector<int> exps(2 * D, 0);
  std::vector<Int> charge(n, 0);

  // Depth-first over exponent positions; x_j adds q_j, y_j subtracts it.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == 2 * D) {
      if (remaining != 0) return;
      for (Int c : charge) {
        if (c != 0) return;
      }
      out.push_back(exps);
      return;
    }
    const std::vector<Int>& q = p.charges[pos % D];
    const int sign = pos < D ? 1 : -1;
    for (int e = 0; e <= remaining; ++e) {
      exps[pos] = e;
      const bool last = pos == 2 * D - 1;
      if (!last || e == remaining) self(self, pos + 1, remaining - e);
      if (e < remaining) {
        for (int i = 0; i < n; ++i) charge[i] += sign * q[i];
      }
    }
    for (int i = 0; i < n; ++i) charge[i] -= sign * q[i] * remaining;
    exps[pos] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

using SparseRow = std::map<int, Rational>;

// Rank over Q by incremental reduction against normalized pivot rows.
long long sparse_rank(std::vector<SparseRow> rows) {
  std::map<int, SparseRow> pivots;  // leading column -> row with leading 1
  long long rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      const int lead = row.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        const Rational inv = Rational(1) / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(lead, std::move(row));
        ++rank;
        break;
      }
      const Rational f = row.begin()->second;
      for (const auto& [c, v] : it->second) {
        auto rit = row.find(c);
        if (rit == row.end()) {
          row.emplace(c, -f * v);
        } else {
          rit->second -= f * v;
          if (rit->second == 0) row.erase(rit);
        }
      }
    }
  }
  return rank;
}

void check_problem(const HiggsProblem& p) {
  if (p.torus_rank < 0) throw DomainError("torus rank must be nonnegative");
  if (p.degree_cap < 0) throw DomainError("degree cap must be nonnegative");
  for (const auto& q : p.charges) {
    if (static_cast<int>(q.size()) != p.torus_rank) {
      throw DomainError("charge vector length does not match the torus rank");
    }
  }
}

}  // namespace

HiggsProblem higgs_from_sequence(const TorusSequence& s, int degree_cap) {
  validate_sequence(s);
  HiggsProblem p;
  p.torus_rank = s.projection.rows;
  p.degree_cap = degree_cap;
  const int d = s.projection.cols;
  for (int j = 0; j < d; ++j) {
    std::vector<BigInt> col(p.torus_rank);
    for (int i = 0; i < p.torus_rank; ++i) col[i] = s.projection.at(i, j);
    p.charges.push_back(to_int_vector(col));
  }
  return p;
}

std::vector<long long> higgs_dimensions_up_to(const HiggsProblem& p, int degree) {
  check_problem(p);
  if (degree < 0) throw DomainError("degree must be nonnegative");
  if (degree > p.degree_cap) {
    throw DomainError("degree " + std::to_string(degree) + " exceeds the degree cap " +
                      std::to_string(p.degree_cap));
  }
  const int D = static_cast<int>(p.charges.size());
  std::vector<std::vector<std::vector<int>>> mons(degree + 1);
  for (int d = 0; d <= degree; ++d) mons[d] = charge_zero_monomials(p, d);

  std::vector<long long> dims(degree + 1, 0);
  for (int d = 0; d <= degree; ++d) {
    const auto& basis = mons[d];
    const long long count = static_cast<long long>(basis.size());
    if (d < 2 || p.torus_rank == 0 || basis.empty()) {
      dims[d] = count;
      continue;
    }
    std::map<std::vector<int>, int> index;
    for (const auto& m : basis) index.emplace(m, static_cast<int>(index.size()));

    std::vector<SparseRow> rows;
    for (const auto& m : mons[d - 2]) {
      for (int i = 0; i < p.torus_rank; ++i) {
        SparseRow row;
        for (int j = 0; j < D; ++j) {
          if (p.charges[j][i] == 0) continue;
          std::vector<int> prod = m;
          ++prod[j];
          ++prod[D + j];
          row[index.at(prod)] += Rational(p.charges[j][i]);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    dims[d] = count - sparse_rank(std::move(rows));
  }
  return dims;
}

long long higgs_graded_dimension(const HiggsProblem& p, int degree) {
  return higgs_dimensions_up_to(p, degree)[degree];
}

DualityReport check_toric_duality(const TorusSequence& s, int order) {
  validate_sequence(s);
  if (order < 0) throw DomainError("order must be nonnegative");
  DualityReport rep;
  rep.order = order;

  GaugeTheory coul = restrict_to_subtorus(s);
  TruncatedSeries hs = hilbert_series(coul, order, false);
  HiggsProblem hig = higgs_from_sequence(s, order);
  rep.higgs_dims = higgs_dimensions_up_to(hig, order);

  rep.coulomb_dims.resize(order + 1, 0);
  for (int d = 0; d <= order; ++d) {
    Rational c = hs.coeff(d);
    if (!is_integer(c)) throw std::logic_error("non-integer Hilbert coefficient");
    rep.coulomb_dims[d] = static_cast<long long>(numerator(c));
    if (rep.match && rep.coulomb_dims[d] != rep.higgs_dims[d]) {
      rep.match = false;
      rep.mismatch_degree = d;
      rep.coulomb_coeff = rep.coulomb_dims[d];
      rep.higgs_coeff = rep.higgs_dims[d];
    }
  }
  return rep;
}

}  // namespace coulomb
