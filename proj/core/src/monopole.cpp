#include "coulomb/monopole.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "coulomb/cones.hpp"
#include "coulomb/errors.hpp"
#include "coulomb/parallel.hpp"

namespace coulomb {

namespace {

void require_dominant(const GaugeTheory& th, const Coweight& m) {
  if (!is_dominant(th, m)) {
    std::ostringstream os;
    os << "coweight (";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ") is not dominant";
    throw DomainError(os.str());
  }
}

// 2Δ(m) as a machine integer; valid for the small lattice boxes scanned
// here.  Dominance is assumed, so root terms need no absolute value.
Int two_delta_int(const GaugeTheory& th, const Coweight& m) {
  Int roots = 0;
  for (int b = 0; b < th.num_gl(); ++b) {
    int s = th.block_start(b), n = th.gl_factors[b];
    for (int a = 0; a < n; ++a)
      for (int c = a + 1; c < n; ++c) roots += m[s + a] - m[s + c];
  }
  Int wsum = 0;
  for (const auto& rho : th.weights) {
    Int v = 0;
    for (std::size_t i = 0; i < rho.size(); ++i) v += rho[i] * m[i];
    wsum += v < 0 ? -v : v;
  }
  return -2 * roots + wsum;
}

Int shift_term(const GaugeTheory& th, const std::vector<Int>& shift, const Coweight& m) {
  if (shift.empty()) return 0;
  std::vector<Int> cls = pi1_class(th, m);
  Int acc = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) acc += shift[i] * cls[i];
  return acc;
}

std::vector<Vec> dominance_rows(const GaugeTheory& th) {
  std::vector<Vec> rows;
  const int rank = th.total_rank();
  for (int b = 0; b < th.num_gl(); ++b) {
    int s = th.block_start(b);
    for (int i = 1; i < th.gl_factors[b]; ++i) {
      Vec row(rank, 0);
      row[s + i - 1] = 1;
      row[s + i] = -1;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// Exponent 2Δ + <shift,π₁> evaluated exactly on a cone generator.
Rational exponent_on(const GaugeTheory& th, const std::vector<Int>& shift, const Vec& g) {
  Coweight m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m[i] = static_cast<Int>(g[i]);
  Rational d = delta(th, m);
  return d * 2 + shift_term(th, shift, m);
}

struct SubconeScan {
  bool divergent = false;
  std::vector<Coweight> witnesses;  // generators with exponent <= 0
  std::vector<std::pair<Vec, Rational>> positive_rays;  // generator, exponent
};

// Visits every subcone of the dominant cone cut by the weight hyperplanes.
SubconeScan scan_subcones(const GaugeTheory& th, const std::vector<Int>& shift) {
  SubconeScan out;
  const int rank = th.total_rank();
  std::vector<Vec> base = dominance_rows(th);
  std::vector<Vec> normals = hyperplane_normals(th.weights);
  const std::size_t nsig = normals.size();

  auto consider = [&](const Vec& g) {
    Rational e = exponent_on(th, shift, g);
    if (e <= 0) {
      out.divergent = true;
      Coweight m(rank);
      for (int i = 0; i < rank; ++i) m[i] = static_cast<Int>(g[i]);
      out.witnesses.push_back(std::move(m));
    } else {
      out.positive_rays.emplace_back(g, e);
    }
  };

  for (std::uint64_t mask = 0; mask < (1ull << nsig); ++mask) {
    std::vector<Vec> ineqs = base;
    for (std::size_t j = 0; j < nsig; ++j) {
      Vec row = normals[j];
      if (mask & (1ull << j)) {
        for (BigInt& e : row) e = -e;
      }
      ineqs.push_back(std::move(row));
    }
    ConeGenerators cg = dual_description(ineqs, rank);
    for (const Vec& l : cg.lineality) {
      // A contained line forces a generator with nonpositive exponent on
      // one of its two ends (the exponent is linear and odd on the line).
      Vec lp = primitive(l);
      Rational e = exponent_on(th, shift, lp);
      if (e <= 0) {
        consider(lp);
      }
      Vec ln(lp.size());
      for (std::size_t i = 0; i < lp.size(); ++i) ln[i] = -lp[i];
      Rational en = exponent_on(th, shift, ln);
      if (en <= 0) consider(ln);
    }
    for (const Vec& r : cg.rays) consider(r);
  }
  return out;
}

ConvergenceVerdict verdict_from_scan(const GaugeTheory& th, const std::vector<Int>& shift,
                                     const SubconeScan& scan) {
  ConvergenceVerdict v;
  if (!scan.divergent) return v;
  v.good = false;
  // Canonical witness: lexicographically greatest nonpositive generator.
  v.witness = *std::max_element(scan.witnesses.begin(), scan.witnesses.end());
  v.witness_delta = delta(th, v.witness);
  v.witness_exponent = v.witness_delta * 2 + shift_term(th, shift, v.witness);
  return v;
}

std::string format_coweight(const Coweight& m) {
  std::ostringstream os;
  if (m.size() == 1) {
    os << m[0];
  } else {
    os << "(";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ")";
  }
  return os.str();
}

// Box bounds certified by the subcone rays: every dominant m with exponent
// <= bound is a nonnegative combination of some subcone's generators, so
// |m_k| <= bound * max_g |g_k| / E(g).
std::vector<Int> box_bounds(const SubconeScan& scan, int rank, const Rational& bound) {
  std::vector<Int> box(rank, 0);
  if (bound <= 0) return box;
  for (const auto& [g, e] : scan.positive_rays) {
    for (int k = 0; k < rank; ++k) {
      BigInt mag = abs(g[k]);
      if (mag == 0) continue;
      Rational b = bound * Rational(mag) / e;
      Int cap = static_cast<Int>(ceil_rational(b));
      box[k] = std::max(box[k], cap);
    }
  }
  return box;
}

std::vector<Coweight> enumerate_by_exponent(const GaugeTheory& th,
                                            const std::vector<Int>& shift,
                                            const Rational& bound) {
  SubconeScan scan = scan_subcones(th, shift);
  if (scan.divergent) {
    throw DomainError(divergence_message(th, verdict_from_scan(th, shift, scan)));
  }
  const int rank = th.total_rank();
  std::vector<Coweight> out;
  if (rank == 0) {
    if (bound >= 0) out.push_back(Coweight{});
    return out;
  }
  if (bound < 0) return out;

  std::vector<Int> box = box_bounds(scan, rank, bound);
  Coweight m(rank);
  for (int k = 0; k < rank; ++k) m[k] = -box[k];
  // Odometer with the last coordinate fastest: emits in lexicographic order.
  while (true) {
    if (is_dominant(th, m)) {
      Int e = two_delta_int(th, m) + shift_term(th, shift, m);
      if (Rational(e) <= bound) out.push_back(m);
    }
    int k = rank - 1;
    while (k >= 0 && m[k] == box[k]) {
      m[k] = -box[k];
      --k;
    }
    if (k < 0) break;
    ++m[k];
  }
  return out;
}

}  // namespace

Rational delta(const GaugeTheory& th, const Coweight& m) {
  require_dominant(th, m);
  BigInt roots = 0;
  for (int b = 0; b < th.num_gl(); ++b) {
    int s = th.block_start(b), n = th.gl_factors[b];
    for (int a = 0; a < n; ++a)
      for (int c = a + 1; c < n; ++c) roots += BigInt(m[s + a]) - m[s + c];
  }
  BigInt wsum = 0;
  for (const auto& rho : th.weights) {
    BigInt v = 0;
    for (std::size_t i = 0; i < rho.size(); ++i) v += BigInt(rho[i]) * m[i];
    wsum += abs(v);
  }
  return Rational(-roots) + Rational(wsum) / 2;
}

TruncatedSeries dressing_factor(const GaugeTheory& th, const Coweight& m, int order) {
  require_dominant(th, m);
  TruncatedSeries p = TruncatedSeries::constant(1, order);
  for (int b = 0; b < th.num_gl(); ++b) {
    int s = th.block_start(b), n = th.gl_factors[b];
    int run = 1;
    for (int i = 1; i <= n; ++i) {
      if (i < n && m[s + i] == m[s + i - 1]) {
        ++run;
        continue;
      }
      for (int d = 1; d <= run; ++d) p = p * geometric_factor(2 * d, order);
      run = 1;
    }
  }
  for (int i = 0; i < th.torus_rank; ++i) p = p * geometric_factor(2, order);
  return p;
}

MonopoleTerm monopole_term(const GaugeTheory& th, const Coweight& m, int order) {
  MonopoleTerm t;
  t.coweight = m;
  t.delta = delta(th, m);
  t.dressing = dressing_factor(th, m, order);
  t.pi1 = pi1_class(th, m);
  return t;
}

ConvergenceVerdict check_convergence(const GaugeTheory& th) {
  return check_convergence_shifted(th, {});
}

ConvergenceVerdict check_convergence_shifted(const GaugeTheory& th,
                                             const std::vector<Int>& shift) {
  if (!shift.empty() && static_cast<int>(shift.size()) != th.pi1_rank()) {
    throw DomainError("shift character length " + std::to_string(shift.size()) +
                      " does not match pi1 rank " + std::to_string(th.pi1_rank()));
  }
  SubconeScan scan = scan_subcones(th, shift);
  return verdict_from_scan(th, shift, scan);
}

std::string divergence_message(const GaugeTheory& th, const ConvergenceVerdict& v) {
  (void)th;
  std::ostringstream os;
  os << "divergent: Coulomb branch is not a cone (witness coweight m="
     << format_coweight(v.witness) << ", Δ=" << v.witness_delta << ")";
  return os.str();
}

std::vector<Coweight> enumerate_coweights(const GaugeTheory& th, const Rational& delta_bound) {
  return enumerate_by_exponent(th, {}, delta_bound * 2);
}

TruncatedSeries hilbert_series(const GaugeTheory& th, const HilbertOptions& opt) {
  if (opt.order < 0) throw DomainError("order must be nonnegative");
  if (!opt.shift.empty() && static_cast<int>(opt.shift.size()) != th.pi1_rank()) {
    throw DomainError("shift character length " + std::to_string(opt.shift.size()) +
                      " does not match pi1 rank " + std::to_string(th.pi1_rank()));
  }
  std::vector<Coweight> ms = enumerate_by_exponent(th, opt.shift, Rational(opt.order));

  // 2Δ parity is constant on each π₁ class; a violation means the weight
  // data is not invariant under the gl Weyl groups and the formula does not
  // define a graded ring.
  std::map<std::vector<Int>, int> parity;
  for (const Coweight& m : ms) {
    int p = static_cast<int>(((two_delta_int(th, m) % 2) + 2) % 2);
    auto [it, fresh] = parity.emplace(pi1_class(th, m), p);
    if (!fresh && it->second != p) {
      throw DomainError("weight data mixes parities of 2Δ within a π₁ class; "
                        "gl-block weight multisets must be Weyl-symmetric");
    }
  }

  const int rank = opt.refined ? th.pi1_rank() : 0;
  TruncatedSeries zero(opt.order, rank);
  auto chunk = [&](std::size_t lo, std::size_t hi) {
    TruncatedSeries acc(opt.order, rank);
    for (std::size_t i = lo; i < hi; ++i) {
      const Coweight& m = ms[i];
      Int e = two_delta_int(th, m) + shift_term(th, opt.shift, m);
      TruncatedSeries p = dressing_factor(th, m, opt.order - static_cast<int>(e));
      std::vector<Int> fug;
      if (opt.refined) fug = pi1_class(th, m);
      for (const auto& [key, c] : p.terms()) {
        acc.add_term(key.first + static_cast<int>(e), fug, c);
      }
    }
    return acc;
  };
  auto merge = [](TruncatedSeries a, TruncatedSeries b) {
    a += b;
    return a;
  };
  TruncatedSeries h =
      map_reduce_chunks<TruncatedSeries>(ms.size(), zero, chunk, merge, opt.threads);

  for (const auto& [key, c] : h.terms()) {
    if (!is_integer(c) || c < 0) {
      throw DomainError("internal: non-integral Hilbert coefficient at t^" +
                        std::to_string(key.first));
    }
  }
  return h;
}

TruncatedSeries hilbert_series(const GaugeTheory& th, int order, bool refined) {
  HilbertOptions opt;
  opt.order = order;
  opt.refined = refined;
  opt.threads = thread_budget();
  return hilbert_series(th, opt);
}

}  // namespace coulomb
