#include "coulomb/abelian.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

#include "coulomb/cones.hpp"
#include "coulomb/errors.hpp"
#include "coulomb/intmat.hpp"

namespace coulomb {

namespace {

Rational binom_rat(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * Rational(n - i) / Rational(i + 1);
  return r;
}

long long binom_ll(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Rational pow_rat(const Rational& base, Int exp) {
  Rational r = 1;
  for (Int i = 0; i < exp; ++i) r *= base;
  return r;
}

Int eval_weight(const std::vector<Int>& rho, const std::vector<Int>& lambda) {
  Int acc = 0;
  for (std::size_t i = 0; i < rho.size(); ++i) acc += rho[i] * lambda[i];
  return acc;
}

Int abs_int(Int v) { return v < 0 ? -v : v; }

}  // namespace

// ---------------------------------------------------------------------------
// CoefficientPoly

CoefficientPoly CoefficientPoly::constant(int rank, const Rational& c) {
  CoefficientPoly p(rank);
  p.add_term(std::vector<int>(rank + 1, 0), c);
  return p;
}

CoefficientPoly CoefficientPoly::variable_w(int rank, int i) {
  CoefficientPoly p(rank);
  std::vector<int> e(rank + 1, 0);
  e[i] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

CoefficientPoly CoefficientPoly::variable_hbar(int rank) {
  CoefficientPoly p(rank);
  std::vector<int> e(rank + 1, 0);
  e[rank] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

CoefficientPoly CoefficientPoly::linear_form(const std::vector<Int>& coeffs, Int hbar_mult) {
  const int rank = static_cast<int>(coeffs.size());
  CoefficientPoly p(rank);
  for (int i = 0; i < rank; ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<int> e(rank + 1, 0);
    e[i] = 1;
    p.add_term(std::move(e), Rational(coeffs[i]));
  }
  if (hbar_mult != 0) {
    std::vector<int> e(rank + 1, 0);
    e[rank] = 1;
    p.add_term(std::move(e), Rational(hbar_mult));
  }
  return p;
}

void CoefficientPoly::add_term(std::vector<int> exps, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CoefficientPoly CoefficientPoly::operator+(const CoefficientPoly& rhs) const {
  CoefficientPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

CoefficientPoly CoefficientPoly::operator-(const CoefficientPoly& rhs) const {
  CoefficientPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

CoefficientPoly CoefficientPoly::operator*(const CoefficientPoly& rhs) const {
  CoefficientPoly out(rank_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      std::vector<int> e(rank_ + 1);
      for (int i = 0; i <= rank_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

CoefficientPoly CoefficientPoly::operator*(const Rational& c) const {
  CoefficientPoly out(rank_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

bool CoefficientPoly::operator==(const CoefficientPoly& rhs) const {
  return rank_ == rhs.rank_ && terms_ == rhs.terms_;
}

bool CoefficientPoly::uses_hbar() const {
  for (const auto& [e, c] : terms_) {
    if (e[rank_] != 0) return true;
  }
  return false;
}

CoefficientPoly CoefficientPoly::shifted_by(const std::vector<Int>& lambda) const {
  CoefficientPoly out(rank_);
  for (const auto& [e, c] : terms_) {
    // Expand ∏_i (w_i + ħλ_i)^{e_i} term by term.
    std::vector<std::pair<std::vector<int>, Rational>> partial;
    std::vector<int> base = e;
    for (int i = 0; i < rank_; ++i) {
      if (lambda[i] != 0) base[i] = 0;  // rebuilt by the expansion below
    }
    partial.emplace_back(std::move(base), c);
    for (int i = 0; i < rank_; ++i) {
      if (lambda[i] == 0 || e[i] == 0) continue;
      std::vector<std::pair<std::vector<int>, Rational>> next;
      for (const auto& [pe, pc] : partial) {
        for (int k = 0; k <= e[i]; ++k) {
          std::vector<int> ne = pe;
          ne[i] += e[i] - k;
          ne[rank_] += k;
          next.emplace_back(std::move(ne), pc * binom_rat(e[i], k) * pow_rat(Rational(lambda[i]), k));
        }
      }
      partial = std::move(next);
    }
    for (auto& [pe, pc] : partial) out.add_term(std::move(pe), pc);
  }
  return out;
}

CoefficientPoly CoefficientPoly::at_hbar_zero() const {
  CoefficientPoly out(rank_);
  for (const auto& [e, c] : terms_) {
    if (e[rank_] == 0) out.add_term(e, c);
  }
  return out;
}

bool CoefficientPoly::divided_by_hbar(CoefficientPoly& out) const {
  out = CoefficientPoly(rank_);
  for (const auto& [e, c] : terms_) {
    if (e[rank_] < 1) return false;
    std::vector<int> ne = e;
    --ne[rank_];
    out.add_term(std::move(ne), c);
  }
  return true;
}

// ---------------------------------------------------------------------------
// AbelianElement

void AbelianElement::add(const std::vector<Int>& lambda, const CoefficientPoly& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, p);
  } else {
    CoefficientPoly sum = it->second + p;
    if (sum.is_zero()) {
      terms_.erase(it);
    } else {
      it->second = std::move(sum);
    }
  }
}

AbelianElement AbelianElement::operator+(const AbelianElement& rhs) const {
  AbelianElement out = *this;
  for (const auto& [l, p] : rhs.terms_) out.add(l, p);
  return out;
}

AbelianElement AbelianElement::operator-(const AbelianElement& rhs) const {
  AbelianElement out = *this;
  for (const auto& [l, p] : rhs.terms_) out.add(l, p * Rational(-1));
  return out;
}

AbelianElement AbelianElement::operator*(const Rational& c) const {
  AbelianElement out(rank_);
  if (c == 0) return out;
  for (const auto& [l, p] : terms_) out.add(l, p * c);
  return out;
}

bool AbelianElement::operator==(const AbelianElement& rhs) const {
  return rank_ == rhs.rank_ && terms_ == rhs.terms_;
}

bool AbelianElement::uses_hbar() const {
  for (const auto& [l, p] : terms_) {
    if (p.uses_hbar()) return true;
  }
  return false;
}

AbelianElement AbelianElement::at_hbar_zero() const {
  AbelianElement out(rank_);
  for (const auto& [l, p] : terms_) out.add(l, p.at_hbar_zero());
  return out;
}

// ---------------------------------------------------------------------------
// AbelianAlgebra

AbelianAlgebra::AbelianAlgebra(GaugeTheory th)
    : theory_(std::move(th)), rank_(theory_.torus_rank), weights_(theory_.weights) {}

AbelianAlgebra AbelianAlgebra::from_theory(const GaugeTheory& th) {
  GaugeTheory v = validate_theory(th);
  if (!v.is_abelian()) {
    throw DomainError("abelian algebra requires a torus gauge theory (gl factors present)");
  }
  return AbelianAlgebra(std::move(v));
}

AbelianElement AbelianAlgebra::one() const { return constant(1); }

AbelianElement AbelianAlgebra::constant(const Rational& c) const {
  AbelianElement x(rank_);
  if (c != 0) x.add(std::vector<Int>(rank_, 0), CoefficientPoly::constant(rank_, c));
  return x;
}

AbelianElement AbelianAlgebra::e(const std::vector<Int>& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_) {
    throw DomainError("lattice point length " + std::to_string(lambda.size()) +
                      " does not match rank " + std::to_string(rank_));
  }
  AbelianElement x(rank_);
  x.add(lambda, CoefficientPoly::constant(rank_, 1));
  return x;
}

AbelianElement AbelianAlgebra::w(int i) const {
  if (i < 0 || i >= rank_) throw DomainError("w index out of range");
  AbelianElement x(rank_);
  x.add(std::vector<Int>(rank_, 0), CoefficientPoly::variable_w(rank_, i));
  return x;
}

AbelianElement AbelianAlgebra::hbar() const {
  AbelianElement x(rank_);
  x.add(std::vector<Int>(rank_, 0), CoefficientPoly::variable_hbar(rank_));
  return x;
}

Rational AbelianAlgebra::delta_of(const std::vector<Int>& lambda) const {
  BigInt acc = 0;
  for (const auto& rho : weights_) acc += abs_int(eval_weight(rho, lambda));
  return Rational(acc) / 2;
}

void AbelianAlgebra::check_element(const AbelianElement& x) const {
  if (x.rank() != rank_) {
    throw DomainError("algebra mismatch: element rank " + std::to_string(x.rank()) +
                      " vs algebra rank " + std::to_string(rank_));
  }
}

CoefficientPoly AbelianAlgebra::classical_pair_factor(const std::vector<Int>& lambda,
                                                      const std::vector<Int>& mu) const {
  CoefficientPoly f = CoefficientPoly::constant(rank_, 1);
  for (const auto& rho : weights_) {
    Int a = eval_weight(rho, lambda), b = eval_weight(rho, mu);
    Int d = (abs_int(a) + abs_int(b) - abs_int(a + b)) / 2;
    if (d == 0) continue;
    CoefficientPoly form = CoefficientPoly::linear_form(rho, 0);
    for (Int i = 0; i < d; ++i) f = f * form;
  }
  return f;
}

CoefficientPoly AbelianAlgebra::quantized_pair_factor(const std::vector<Int>& lambda,
                                                      const std::vector<Int>& mu) const {
  // The ladder below is the unique normal form consistent with writing
  // e^λ = Φ_λ(w)·u^λ for commuting shift operators u^λ; associativity is
  // inherited from that model and pinned by the property suite.
  CoefficientPoly f = CoefficientPoly::constant(rank_, 1);
  for (const auto& rho : weights_) {
    Int a = eval_weight(rho, lambda), b = eval_weight(rho, mu);
    Int lo = 1, hi = 0;
    if (a >= 0 && b < 0) {
      lo = std::max<Int>(1, a + b + 1);
      hi = a;
    } else if (a < 0 && b >= 0) {
      lo = a + 1;
      hi = std::min<Int>(0, a + b);
    }
    for (Int k = lo; k <= hi; ++k) {
      f = f * CoefficientPoly::linear_form(rho, k);
    }
  }
  return f;
}

AbelianElement AbelianAlgebra::multiply_classical(const AbelianElement& a,
                                                  const AbelianElement& b) const {
  check_element(a);
  check_element(b);
  if (a.uses_hbar() || b.uses_hbar()) {
    throw DomainError("classical product requires ħ-free elements");
  }
  AbelianElement out(rank_);
  for (const auto& [la, pa] : a.terms()) {
    for (const auto& [lb, pb] : b.terms()) {
      std::vector<Int> sum(rank_);
      for (int i = 0; i < rank_; ++i) sum[i] = la[i] + lb[i];
      out.add(sum, pa * pb * classical_pair_factor(la, lb));
    }
  }
  return out;
}

AbelianElement AbelianAlgebra::multiply_quantized(const AbelianElement& a,
                                                  const AbelianElement& b) const {
  check_element(a);
  check_element(b);
  AbelianElement out(rank_);
  for (const auto& [la, pa] : a.terms()) {
    for (const auto& [lb, pb] : b.terms()) {
      std::vector<Int> sum(rank_);
      for (int i = 0; i < rank_; ++i) sum[i] = la[i] + lb[i];
      // p_a(w) e^λ · p_b(w) e^μ = p_a(w) p_b(w+ħλ) F_{λ,μ}(w) e^{λ+μ}
      out.add(sum, pa * pb.shifted_by(la) * quantized_pair_factor(la, lb));
    }
  }
  return out;
}

AbelianElement AbelianAlgebra::poisson_bracket(const AbelianElement& a,
                                               const AbelianElement& b) const {
  check_element(a);
  check_element(b);
  if (a.uses_hbar() || b.uses_hbar()) {
    throw DomainError("poisson bracket requires ħ-free elements");
  }
  AbelianElement comm = multiply_quantized(a, b) - multiply_quantized(b, a);
  AbelianElement out(rank_);
  for (const auto& [l, p] : comm.terms()) {
    CoefficientPoly q(rank_);
    if (!p.divided_by_hbar(q)) {
      throw std::logic_error("commutator of ħ-free elements is not divisible by ħ");
    }
    out.add(l, q.at_hbar_zero());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graded dimensions

namespace {

// Per-coordinate bounds |λ_k| <= d * Σ_j |inv_kj| from the best invertible
// square subset of the weight rows; requires full-rank weights.
std::vector<Int> lattice_box(const std::vector<std::vector<Int>>& weights, int rank, int d) {
  if (rank == 0) return {};
  std::vector<std::vector<Int>> distinct;
  {
    std::set<std::vector<Int>> seen;
    for (const auto& w : weights) {
      if (seen.insert(w).second) distinct.push_back(w);
    }
  }
  const int n = static_cast<int>(distinct.size());
  std::vector<int> idx(rank, 0);
  std::vector<Rational> best_score;
  bool found = false;

  // Enumerate rank-subsets of the distinct weights.
  std::vector<int> sel(rank);
  for (int i = 0; i < rank; ++i) sel[i] = i;
  if (n >= rank) {
    while (true) {
      std::vector<std::vector<Int>> rows;
      for (int i = 0; i < rank; ++i) rows.push_back(distinct[sel[i]]);
      auto inv = rational_inverse(rows);
      if (inv) {
        std::vector<Rational> score(rank, 0);
        for (int k = 0; k < rank; ++k) {
          for (int j = 0; j < rank; ++j) {
            Rational a = (*inv)[k][j];
            score[k] += a < 0 ? Rational(-a) : a;
          }
        }
        if (!found || *std::max_element(score.begin(), score.end()) <
                          *std::max_element(best_score.begin(), best_score.end())) {
          best_score = std::move(score);
          found = true;
        }
      }
      int i = rank - 1;
      while (i >= 0 && sel[i] == n - rank + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < rank; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  if (!found) {
    throw DomainError("graded dimension is infinite: weights do not span the character lattice");
  }
  std::vector<Int> box(rank);
  for (int k = 0; k < rank; ++k) {
    box[k] = static_cast<Int>(floor_rational(best_score[k] * d));
  }
  return box;
}

}  // namespace

std::vector<long long> AbelianAlgebra::graded_dimensions_up_to(int d) const {
  if (d < 0) throw DomainError("degree must be nonnegative");
  std::vector<long long> dims(d + 1, 0);
  if (rank_ == 0) {
    dims[0] = 1;
    return dims;
  }
  std::vector<Int> box = lattice_box(weights_, rank_, d);
  std::vector<Int> lambda(rank_);
  for (int k = 0; k < rank_; ++k) lambda[k] = -box[k];
  while (true) {
    Int t2 = 0;
    for (const auto& rho : weights_) t2 += abs_int(eval_weight(rho, lambda));
    if (t2 <= d) {
      for (int dd = static_cast<int>(t2); dd <= d; dd += 2) {
        long long s = (dd - t2) / 2;
        dims[dd] += binom_ll(s + rank_ - 1, rank_ - 1);
      }
    }
    int k = rank_ - 1;
    while (k >= 0 && lambda[k] == box[k]) {
      lambda[k] = -box[k];
      --k;
    }
    if (k < 0) break;
    ++lambda[k];
  }
  return dims;
}

long long AbelianAlgebra::graded_dimension(int d) const { return graded_dimensions_up_to(d)[d]; }

std::map<std::vector<Int>, long long> AbelianAlgebra::graded_dimension_refined(int d) const {
  if (d < 0) throw DomainError("degree must be nonnegative");
  std::map<std::vector<Int>, long long> out;
  if (rank_ == 0) {
    if (d == 0) out[{}] = 1;
    return out;
  }
  std::vector<Int> box = lattice_box(weights_, rank_, d);
  std::vector<Int> lambda(rank_);
  for (int k = 0; k < rank_; ++k) lambda[k] = -box[k];
  while (true) {
    Int t2 = 0;
    for (const auto& rho : weights_) t2 += abs_int(eval_weight(rho, lambda));
    if (t2 <= d && (d - t2) % 2 == 0) {
      long long s = (d - t2) / 2;
      out[lambda] += binom_ll(s + rank_ - 1, rank_ - 1);
    }
    int k = rank_ - 1;
    while (k >= 0 && lambda[k] == box[k]) {
      lambda[k] = -box[k];
      --k;
    }
    if (k < 0) break;
    ++lambda[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presentation

namespace {

// Signed content g and primitive form ρ̂ with ρ = g·ρ̂ and the first nonzero
// entry of ρ̂ positive.
std::pair<Int, std::vector<Int>> signed_content(const std::vector<Int>& rho) {
  Int g = 0;
  for (Int v : rho) {
    Int a = abs_int(v);
    while (a != 0) {
      Int t = g % a;
      g = a;
      a = t;
    }
  }
  if (g == 0) return {0, rho};  // zero weight; caller skips
  std::vector<Int> hat(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) hat[i] = rho[i] / g;
  for (Int v : hat) {
    if (v != 0) {
      if (v < 0) {
        g = -g;
        for (auto& x : hat) x = -x;
      }
      break;
    }
  }
  return {g, hat};
}

Int n_exponent(Int a) { return a < 0 ? -a : 0; }  // max(0, −a)

}  // namespace

Presentation AbelianAlgebra::presentation() const {
  Presentation pres;
  const int L = rank_;

  for (int i = 0; i < L; ++i) {
    PresentationGenerator g;
    g.name = L == 1 ? "w" : "w" + std::to_string(i + 1);
    g.t_degree = 2;
    g.pi1.assign(L, 0);
    g.w_index = i;
    pres.generators.push_back(std::move(g));
  }
  if (L == 0) return pres;

  // Lineality: the saturated kernel of the weight pairing.  Its ± basis
  // vectors are Laurent generators (present even when the series diverges).
  IntMat wm = IntMat::from_rows(weights_, L);
  std::vector<Vec> lin = integer_kernel(wm);
  const int k = static_cast<int>(lin.size());
  const int qdim = L - k;

  // Quotient by the lineality lattice: q(x) = (U x)[k..L−1] and the section
  // ȳ ↦ U⁻¹(0,ȳ), from the Smith form of the kernel basis.
  IntMat U = IntMat::identity(L), Uinv = IntMat::identity(L);
  if (k > 0) {
    IntMat B(L, k);
    for (int c = 0; c < k; ++c)
      for (int r = 0; r < L; ++r) B.at(r, c) = lin[c][r];
    SmithResult snf = smith_normal_form(B);
    if (snf.rank() != k) throw std::logic_error("kernel basis is not independent");
    for (const BigInt& f : snf.invariants) {
      if (f != 1) throw std::logic_error("kernel lattice is not saturated");
    }
    U = snf.u;
    Uinv = snf.uinv;
  }
  auto qmap = [&](const Vec& x) {
    Vec y(qdim);
    for (int r = 0; r < qdim; ++r) {
      BigInt acc = 0;
      for (int c = 0; c < L; ++c) acc += U.at(k + r, c) * x[c];
      y[r] = acc;
    }
    return y;
  };
  auto section = [&](const Vec& ybar) {
    Vec x(L, BigInt(0));
    for (int r = 0; r < L; ++r) {
      BigInt acc = 0;
      for (int j = 0; j < qdim; ++j) acc += Uinv.at(r, k + j) * ybar[j];
      x[r] = acc;
    }
    return x;
  };

  std::vector<Vec> normals = hyperplane_normals(weights_);
  const std::size_t nsig = normals.size();

  struct ConeRec {
    std::vector<Vec> ineqs_full;
    std::vector<Vec> ineqs_q;
    std::vector<std::pair<Vec, std::vector<Int>>> hb;  // (quotient point, lifted λ)
  };
  std::vector<ConeRec> cones;

  std::set<std::vector<Int>> gen_points;
  for (std::uint64_t mask = 0; mask < (1ull << nsig); ++mask) {
    ConeRec rec;
    for (std::size_t j = 0; j < nsig; ++j) {
      Vec row = normals[j];
      if (mask & (1ull << j)) {
        for (BigInt& v : row) v = -v;
      }
      // In quotient coordinates: ā_j = a · (section basis vector j).
      Vec aq(qdim);
      for (int c = 0; c < qdim; ++c) {
        BigInt acc = 0;
        for (int r = 0; r < L; ++r) acc += row[r] * Uinv.at(r, k + c);
        aq[c] = acc;
      }
      rec.ineqs_full.push_back(std::move(row));
      rec.ineqs_q.push_back(std::move(aq));
    }
    if (qdim > 0) {
      ConeGenerators cg = dual_description(rec.ineqs_q, qdim);
      if (!cg.pointed()) {
        throw std::logic_error("weight-hyperplane cone not pointed in the quotient");
      }
      std::vector<Vec> hb = hilbert_basis_pointed(cg.rays, rec.ineqs_q, qdim);
      for (Vec& h : hb) {
        std::vector<Int> lift = to_int_vector(section(h));
        gen_points.insert(lift);
        rec.hb.emplace_back(std::move(h), std::move(lift));
      }
    }
    cones.push_back(std::move(rec));
  }
  for (const Vec& b : lin) {
    std::vector<Int> plus = to_int_vector(b), minus(L);
    for (int i = 0; i < L; ++i) minus[i] = -plus[i];
    gen_points.insert(plus);
    gen_points.insert(minus);
  }

  // Generator scaling 1/s_λ with s_λ = ∏_j g_j^{max(0,−ρ_j(λ))}: turns every
  // pair relation monic over the primitive weight forms.
  auto scale_of = [&](const std::vector<Int>& lambda) {
    Rational s = 1;
    for (const auto& rho : weights_) {
      Int g = signed_content(rho).first;
      if (g == 0) continue;
      s *= pow_rat(Rational(g), n_exponent(eval_weight(rho, lambda)));
    }
    return s;
  };

  std::vector<std::vector<Int>> order(gen_points.begin(), gen_points.end());
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    Rational da = delta_of(a), db = delta_of(b);
    if (da != db) return da < db;
    return a < b;
  });
  if (L == 1) {
    // Canonical rank-1 names x = e¹, y = e⁻¹.
    order = {{1}, {-1}};
  }

  std::map<std::vector<Int>, int> gen_index;
  int xcount = 0;
  for (const auto& lam : order) {
    PresentationGenerator g;
    if (L == 1) {
      g.name = xcount == 0 ? "x" : "y";
    } else {
      g.name = "x" + std::to_string(xcount + 1);
    }
    ++xcount;
    Rational two_delta = delta_of(lam) * 2;
    if (!is_integer(two_delta)) throw std::logic_error("2Δ not integral");
    g.t_degree = static_cast<int>(numerator(two_delta));
    g.pi1 = lam;
    g.is_lattice = true;
    g.lattice = lam;
    g.scale = scale_of(lam);
    gen_index[lam] = static_cast<int>(pres.generators.size());
    pres.generators.push_back(std::move(g));
  }

  // Greedy decomposition of a lattice point over the generators of the
  // first cone containing it: Hilbert-basis part in the quotient, then the
  // lineality coordinates.
  auto decompose = [&](const std::vector<Int>& nu) {
    std::vector<int> gens;
    Vec nub = to_bigvec(nu);
    for (const ConeRec& rec : cones) {
      if (!in_cone(rec.ineqs_full, nub)) continue;
      Vec nbar = qmap(nub);
      std::vector<Int> used(L, 0);
      bool zero = std::all_of(nbar.begin(), nbar.end(), [](const BigInt& v) { return v == 0; });
      while (!zero) {
        bool progressed = false;
        for (const auto& [h, lift] : rec.hb) {
          Vec diff(qdim);
          for (int i = 0; i < qdim; ++i) diff[i] = nbar[i] - h[i];
          if (!in_cone(rec.ineqs_q, diff)) continue;
          nbar = std::move(diff);
          gens.push_back(gen_index.at(lift));
          for (int i = 0; i < L; ++i) used[i] += lift[i];
          progressed = true;
          break;
        }
        if (!progressed) throw std::logic_error("Hilbert basis decomposition stalled");
        zero = std::all_of(nbar.begin(), nbar.end(), [](const BigInt& v) { return v == 0; });
      }
      // Remainder lies in the lineality lattice.
      Vec r(L);
      for (int i = 0; i < L; ++i) r[i] = BigInt(nu[i]) - used[i];
      if (k > 0) {
        std::vector<Vec> cols(lin.begin(), lin.end());
        auto coords = solve_independent_columns(cols, r);
        if (!coords) throw std::logic_error("lineality remainder outside the kernel lattice");
        for (int i = 0; i < k; ++i) {
          const Rational& c = (*coords)[i];
          if (!is_integer(c)) throw std::logic_error("non-integral lineality coordinate");
          Int ci = static_cast<Int>(numerator(c));
          std::vector<Int> bv = to_int_vector(lin[i]);
          if (ci >= 0) {
            for (Int t = 0; t < ci; ++t) gens.push_back(gen_index.at(bv));
          } else {
            std::vector<Int> neg(L);
            for (int j = 0; j < L; ++j) neg[j] = -bv[j];
            for (Int t = 0; t < -ci; ++t) gens.push_back(gen_index.at(neg));
          }
        }
      } else {
        for (int i = 0; i < L; ++i) {
          if (r[i] != 0) throw std::logic_error("nonzero remainder without lineality");
        }
      }
      std::sort(gens.begin(), gens.end());
      return gens;
    }
    throw std::logic_error("lattice point escaped every sign cone");
  };

  // Pair relations e^λ e^μ = ∏ ρ̂_j(w)^{d_j} · (decomposition of λ+μ).
  const int ngen = static_cast<int>(pres.generators.size());
  for (int ia = L; ia < ngen; ++ia) {
    for (int ib = ia; ib < ngen; ++ib) {
      const auto& lam = pres.generators[ia].lattice;
      const auto& mu = pres.generators[ib].lattice;
      std::vector<Int> nu(L);
      for (int i = 0; i < L; ++i) nu[i] = lam[i] + mu[i];

      CoefficientPoly wpoly = CoefficientPoly::constant(L, 1);
      Rational content_factor = 1;
      bool any_d = false;
      for (const auto& rho : weights_) {
        Int a = eval_weight(rho, lam), b = eval_weight(rho, mu);
        Int d = (abs_int(a) + abs_int(b) - abs_int(a + b)) / 2;
        if (d == 0) continue;
        any_d = true;
        auto [g, hat] = signed_content(rho);
        content_factor *= pow_rat(Rational(g), d);
        CoefficientPoly form = CoefficientPoly::linear_form(hat, 0);
        for (Int i = 0; i < d; ++i) wpoly = wpoly * form;
      }

      std::vector<int> decomp = decompose(nu);
      std::vector<int> pair = {ia, ib};
      if (!any_d && decomp == pair) continue;  // trivial identity

      // Cocycle check: the scales absorb the weight contents exactly.
      Rational lhs_scale = pres.generators[ia].scale * pres.generators[ib].scale;
      Rational rhs_scale = content_factor;
      for (int gi : decomp) rhs_scale *= pres.generators[gi].scale;
      if (lhs_scale != rhs_scale) throw std::logic_error("scale cocycle violated");

      PresentationRelation rel;
      rel.lhs_a = ia;
      rel.lhs_b = ib;
      for (const auto& [exps, c] : wpoly.terms()) {
        PresentationTerm term;
        term.coeff = c;
        term.exponents.assign(ngen, 0);
        for (int i = 0; i < L; ++i) term.exponents[i] = exps[i];
        for (int gi : decomp) term.exponents[gi] += 1;
        rel.rhs.push_back(std::move(term));
      }
      std::sort(rel.rhs.begin(), rel.rhs.end(), [](const auto& a, const auto& b) {
        return a.exponents > b.exponents;
      });

      // Homogeneity in both gradings.
      int lhs_deg = pres.generators[ia].t_degree + pres.generators[ib].t_degree;
      for (const auto& term : rel.rhs) {
        int deg = 0;
        std::vector<Int> cls(L, 0);
        for (int gi = 0; gi < ngen; ++gi) {
          deg += term.exponents[gi] * pres.generators[gi].t_degree;
          for (int i = 0; i < L; ++i) cls[i] += term.exponents[gi] * pres.generators[gi].pi1[i];
        }
        if (deg != lhs_deg) throw std::logic_error("relation not t-homogeneous");
        if (cls != nu) throw std::logic_error("relation not π₁-homogeneous");
      }
      pres.relations.push_back(std::move(rel));
    }
  }

  if (!verify_presentation(*this, pres)) {
    throw std::logic_error("presentation failed classical re-verification");
  }
  return pres;
}

LocalizationWitness AbelianAlgebra::localization_units(const std::vector<Int>& lambda) const {
  std::vector<Int> neg(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) neg[i] = -lambda[i];
  AbelianElement lhs = multiply_classical(e(lambda), e(neg));

  CoefficientPoly poly = CoefficientPoly::constant(rank_, 1);
  for (const auto& rho : weights_) {
    Int a = abs_int(eval_weight(rho, lambda));
    CoefficientPoly form = CoefficientPoly::linear_form(rho, 0);
    for (Int i = 0; i < a; ++i) poly = poly * form;
  }
  AbelianElement rhs(rank_);
  rhs.add(std::vector<Int>(rank_, 0), poly);
  const bool ok = lhs == rhs;
  return LocalizationWitness{lambda, std::move(lhs), std::move(rhs), ok};
}

// ---------------------------------------------------------------------------
// Presentation helpers

namespace {

AbelianElement generator_element(const AbelianAlgebra& alg, const PresentationGenerator& g) {
  if (g.is_lattice) return alg.e(g.lattice) * (Rational(1) / g.scale);
  return alg.w(g.w_index);
}

}  // namespace

AbelianElement evaluate_presentation_term(const AbelianAlgebra& alg, const Presentation& pres,
                                          const PresentationTerm& term) {
  AbelianElement acc = alg.constant(term.coeff);
  for (std::size_t gi = 0; gi < term.exponents.size(); ++gi) {
    for (int rep = 0; rep < term.exponents[gi]; ++rep) {
      acc = alg.multiply_classical(acc, generator_element(alg, pres.generators[gi]));
    }
  }
  return acc;
}

bool verify_presentation(const AbelianAlgebra& alg, const Presentation& pres) {
  for (const auto& rel : pres.relations) {
    AbelianElement lhs = alg.multiply_classical(
        generator_element(alg, pres.generators[rel.lhs_a]),
        generator_element(alg, pres.generators[rel.lhs_b]));
    AbelianElement rhs = alg.zero();
    for (const auto& term : rel.rhs) {
      rhs = rhs + evaluate_presentation_term(alg, pres, term);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::vector<long long> dimensions_from_presentation(const AbelianAlgebra& alg,
                                                    const Presentation& pres, int max_degree) {
  // Rank of the span of evaluated generator monomials in each degree.
  // Elements are homogeneous, so degrees never mix.
  const int ngen = static_cast<int>(pres.generators.size());
  std::vector<std::map<std::pair<std::vector<Int>, std::vector<int>>, int>> basis_index(
      max_degree + 1);
  std::vector<std::vector<std::vector<Rational>>> rows(max_degree + 1);

  // DFS over generator exponent vectors with degree <= max_degree.
  auto record = [&](int degree, const AbelianElement& val) {
    if (val.is_zero()) return;
    std::vector<Rational> row;
    auto& idx = basis_index[degree];
    std::vector<std::pair<int, Rational>> entries;
    for (const auto& [lam, poly] : val.terms()) {
      for (const auto& [we, c] : poly.terms()) {
        auto it = idx.emplace(std::make_pair(lam, we), static_cast<int>(idx.size())).first;
        entries.emplace_back(it->second, c);
      }
    }
    int width = static_cast<int>(idx.size());
    row.assign(width, 0);
    for (auto& [col, c] : entries) row[col] = c;
    rows[degree].push_back(std::move(row));
  };

  std::function<void(int, int, const AbelianElement&)> visit =
      [&](int gi, int degree, const AbelianElement& val) {
        record(degree, val);
        for (int g = gi; g < ngen; ++g) {
          int d = pres.generators[g].t_degree;
          if (d <= 0) throw DomainError(
              "presentation has degree-0 generators (divergent theory); "
              "graded re-derivation requires a good theory");
          if (degree + d > max_degree) continue;
          visit(g, degree + d,
                alg.multiply_classical(val, generator_element(alg, pres.generators[g])));
        }
      };
  visit(0, 0, alg.one());

  std::vector<long long> dims(max_degree + 1, 0);
  for (int d = 0; d <= max_degree; ++d) {
    // Pad rows to the final width before ranking.
    std::size_t width = basis_index[d].size();
    for (auto& row : rows[d]) row.resize(width, Rational(0));
    dims[d] = rational_rank(rows[d]);
  }
  return dims;
}

}  // namespace coulomb
