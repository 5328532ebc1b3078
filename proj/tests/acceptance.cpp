// Acceptance gate: end-to-end checks against independently derived anchors.
// All numeric comparisons are exact (integers and rationals); the only
// tolerances are the wall-clock budgets pinned in run_criterion calls.
//
// Usage: acceptance <cli-binary> <samples-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "coulomb/abelian.hpp"
#include "coulomb/errors.hpp"
#include "coulomb/higgs.hpp"
#include "coulomb/intmat.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/rng.hpp"
#include "coulomb/textio.hpp"
#include "coulomb/theory.hpp"

using namespace coulomb;

namespace {

std::string g_cli;
std::string g_samples;

using Failure = std::optional<std::string>;

struct Proc {
  int code = -1;
  std::string output;  // stdout and stderr merged
};

Proc shell(const std::string& cmd) {
  Proc p;
  FILE* f = popen((cmd + " 2>&1").c_str(), "r");
  if (!f) return p;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) p.output.append(buf, n);
  int st = pclose(f);
  if (st != -1 && WIFEXITED(st)) p.code = WEXITSTATUS(st);
  return p;
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

struct TempFile {
  std::string path;
  TempFile(std::string name, const std::string& content) : path(std::move(name)) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> relation_lines(const std::string& text) {
  std::vector<std::string> out;
  for (const std::string& l : lines_of(text)) {
    if (l.rfind("relation ", 0) == 0) out.push_back(l);
  }
  return out;
}

// Rebuilds the CLI series format from nonnegative integer coefficients.
std::string series_text(const std::vector<long long>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const long long c = coeffs[d];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << (d == 1 ? "t" : "t^" + std::to_string(d));
  }
  if (first) os << "0";
  return os.str();
}

GaugeTheory torus_theory(int rank, std::vector<std::vector<Int>> weights) {
  GaugeTheory th;
  th.torus_rank = rank;
  th.weights = std::move(weights);
  return validate_theory(std::move(th));
}

std::vector<GaugeTheory> mixed_rank_theories() {
  return {
      torus_theory(1, {{1}}),
      torus_theory(1, {{2}}),
      torus_theory(1, {{1}, {1}}),
      torus_theory(2, {{1, 0}, {1, 1}}),
      torus_theory(2, {{1, 0}, {0, 1}, {1, -1}}),
      torus_theory(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}),
  };
}

AbelianElement random_element(const AbelianAlgebra& alg, Rng& rng, bool with_hbar) {
  const int rank = alg.rank();
  AbelianElement x = alg.zero();
  const int nterms = static_cast<int>(rng.uniform(1, 2));
  for (int t = 0; t < nterms; ++t) {
    std::vector<Int> lam(rank);
    for (auto& v : lam) v = rng.uniform(-2, 2);
    CoefficientPoly p(rank);
    std::vector<int> exps(rank + 1, 0);
    if (rank > 0 && rng.coin()) ++exps[rng.uniform(0, rank - 1)];
    if (with_hbar && rng.coin()) exps[rank] = 1;
    Int c = rng.uniform(-3, 3);
    p.add_term(std::move(exps), Rational(c == 0 ? 1 : c));
    x.add(lam, p);
  }
  return x.is_zero() ? alg.one() : x;
}

// ---------------------------------------------------------------------------
// 1. The charge-N surface singularities: one relation x*y = w^N, and the
//    series equals the count of invariant monomials u^a v^b with a = b mod N.

Failure criterion_singularities() {
  for (int n = 1; n <= 5; ++n) {
    TempFile th("acc_charge" + std::to_string(n) + ".th",
                "torus 1\nweight " + std::to_string(n) + "\n");
    Proc pres = shell(shell_quote(g_cli) + " present " + shell_quote(th.path));
    if (pres.code != 0) return "present exited with " + std::to_string(pres.code);
    std::vector<std::string> rels = relation_lines(pres.output);
    const std::string expect =
        n == 1 ? "relation x*y = w" : "relation x*y = w^" + std::to_string(n);
    if (rels.size() != 1 || rels[0] != expect) {
      return "charge " + std::to_string(n) + ": relations differ from '" + expect + "'";
    }

    std::vector<long long> coeffs(13, 0);
    for (int a = 0; a <= 12; ++a) {
      for (int b = 0; a + b <= 12; ++b) {
        if ((a - b) % n == 0) ++coeffs[a + b];
      }
    }
    Proc hil = shell(shell_quote(g_cli) + " hilbert " + shell_quote(th.path) + " --order 12");
    if (hil.code != 0) return "hilbert exited with " + std::to_string(hil.code);
    if (hil.output != series_text(coeffs) + "\n") {
      return "charge " + std::to_string(n) + ": series differs from the monomial count";
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 2. A bare torus: unit relation, and the series run refuses with a witness.

Failure criterion_bare_torus() {
  const std::string path = g_samples + "/u1_pure.th";
  Proc pres = shell(shell_quote(g_cli) + " present " + shell_quote(path));
  if (pres.code != 0) return "present exited with " + std::to_string(pres.code);
  std::vector<std::string> rels = relation_lines(pres.output);
  if (rels.size() != 1 || rels[0] != "relation x*y = 1") return "unit relation missing";

  Proc hil = shell(shell_quote(g_cli) + " hilbert " + shell_quote(path) + " --order 6");
  if (hil.code != 1) return "divergent series exited with " + std::to_string(hil.code);
  if (hil.output != "divergent: Coulomb branch is not a cone (witness coweight m=1, Δ=0)\n") {
    return "unexpected divergence message: " + hil.output;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 3. Random good torus theories: the series must equal the direct monomial
//    count in every degree and every grading class through t^12.

bool scan_box_is_small(const GaugeTheory& th) {
  // Mirror of the dimension-counting box bound: best rank-subset of distinct
  // weights, scored by the largest row sum of the inverse's magnitudes.
  // Samples above the cap would be correct but disproportionately slow.
  const int rank = th.torus_rank;
  std::vector<std::vector<Int>> distinct;
  for (const auto& w : th.weights) {
    bool seen = false;
    for (const auto& d : distinct) seen = seen || d == w;
    if (!seen) distinct.push_back(w);
  }
  const int n = static_cast<int>(distinct.size());
  if (n < rank) return false;
  std::vector<int> sel(rank);
  for (int i = 0; i < rank; ++i) sel[i] = i;
  Rational best = -1;
  while (true) {
    std::vector<std::vector<Int>> rows;
    for (int i : sel) rows.push_back(distinct[i]);
    if (auto inv = rational_inverse(rows)) {
      Rational worst = 0;
      for (int k = 0; k < rank; ++k) {
        Rational score = 0;
        for (int j = 0; j < rank; ++j) {
          score += (*inv)[k][j] < 0 ? -(*inv)[k][j] : (*inv)[k][j];
        }
        if (score > worst) worst = score;
      }
      if (best < 0 || worst < best) best = worst;
    }
    int i = rank - 1;
    while (i >= 0 && sel[i] == n - rank + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < rank; ++j) sel[j] = sel[j - 1] + 1;
  }
  return best >= 0 && best <= Rational(6);
}

Failure criterion_random_oracle() {
  Rng rng(333);
  int done = 0, attempts = 0;
  while (done < 20) {
    if (++attempts > 4000) return "could not sample 20 good theories";
    const int rank = static_cast<int>(rng.uniform(1, 3));
    const int nw = static_cast<int>(rng.uniform(1, 6));
    std::vector<std::vector<Int>> weights(nw, std::vector<Int>(rank));
    for (auto& w : weights) {
      for (auto& v : w) v = rng.uniform(-3, 3);
    }
    GaugeTheory th = torus_theory(rank, weights);
    if (!check_convergence(th).good) continue;
    if (!scan_box_is_small(th)) continue;
    ++done;

    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    TruncatedSeries plain = hilbert_series(th, 12, false);
    TruncatedSeries refined = hilbert_series(th, 12, true);
    std::vector<long long> dims = alg.graded_dimensions_up_to(12);
    for (int d = 0; d <= 12; ++d) {
      if (plain.coeff(d) != Rational(dims[d])) return "unrefined mismatch at degree " +
                                                      std::to_string(d);
      std::map<std::vector<Int>, long long> buckets = alg.graded_dimension_refined(d);
      std::map<std::vector<Int>, Rational> slice;
      for (const auto& [key, c] : refined.terms()) {
        if (key.first == d) slice[key.second] = c;
      }
      if (slice.size() != buckets.size()) return "refined support mismatch at degree " +
                                                 std::to_string(d);
      for (const auto& [lam, c] : buckets) {
        auto it = slice.find(lam);
        if (it == slice.end() || it->second != Rational(c)) {
          return "refined mismatch at degree " + std::to_string(d);
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 4. Mirror comparisons through t^10: two pinned sequences plus a random
//    exact one built from a unimodular change of basis.

Failure criterion_mirror() {
  auto check_match = [](const std::string& path) -> Failure {
    Proc p = shell(shell_quote(g_cli) + " check-duality " + shell_quote(path) + " --order 10");
    if (p.code != 0) return path + ": exited with " + std::to_string(p.code);
    std::vector<std::string> ls = lines_of(p.output);
    if (ls.empty() || ls.back() != "MATCH through t^10") return path + ": no match line";
    return std::nullopt;
  };
  if (Failure f = check_match(g_samples + "/a1_diagonal.seq")) return f;
  if (Failure f = check_match(g_samples + "/free_c6.seq")) return f;

  Rng rng(444);
  const int d = 4, k = 2;
  while (true) {
    IntMat u = IntMat::identity(d);
    for (int step = 0; step < 10; ++step) {
      const int r = static_cast<int>(rng.uniform(0, d - 1));
      const int s = static_cast<int>(rng.uniform(0, d - 1));
      if (r == s) continue;
      const Int c = rng.uniform(-2, 2);
      for (int j = 0; j < d; ++j) u.at(r, j) += c * u.at(s, j);
    }
    bool small = true;
    for (const BigInt& e : u.data) small = small && abs(e) <= 5;
    if (!small) continue;
    std::vector<std::vector<Int>> urows(d, std::vector<Int>(d));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) urows[r][c] = static_cast<Int>(u.at(r, c));
    auto inv = rational_inverse(urows);
    if (!inv) continue;
    std::ostringstream file;
    for (int r = 0; r < d; ++r) {
      file << "include";
      for (int c = 0; c < k; ++c) file << ' ' << u.at(r, c);
      file << "\n";
    }
    bool integral = true;
    for (int r = k; r < d; ++r) {
      file << "project";
      for (int c = 0; c < d; ++c) {
        integral = integral && is_integer((*inv)[r][c]);
        file << ' ' << (*inv)[r][c];
      }
      file << "\n";
    }
    if (!integral) continue;  // determinant was not ±1
    TempFile seq("acc_random.seq", file.str());
    return check_match(seq.path);
  }
}

// ---------------------------------------------------------------------------
// 5. Randomized triples: associativity, the ħ → 0 limit, and commutator
//    divisibility by ħ.

Failure criterion_quantization() {
  for (const GaugeTheory& th : mixed_rank_theories()) {
    if (th.torus_rank > 2) continue;  // five theories of rank 1 and 2
    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    Rng rng(555);
    for (int trial = 0; trial < 100; ++trial) {
      AbelianElement a = random_element(alg, rng, true);
      AbelianElement b = random_element(alg, rng, true);
      AbelianElement c = random_element(alg, rng, true);
      AbelianElement lhs = alg.multiply_quantized(alg.multiply_quantized(a, b), c);
      AbelianElement rhs = alg.multiply_quantized(a, alg.multiply_quantized(b, c));
      if (!(lhs == rhs)) return "associativity fails at trial " + std::to_string(trial);
      AbelianElement a0 = a.at_hbar_zero(), b0 = b.at_hbar_zero();
      if (a0.is_zero() || b0.is_zero()) continue;
      if (!(alg.multiply_quantized(a0, b0).at_hbar_zero() == alg.multiply_classical(a0, b0))) {
        return "classical limit fails at trial " + std::to_string(trial);
      }
      try {
        alg.poisson_bracket(a0, b0);
      } catch (const std::exception& e) {
        return std::string("commutator not divisible: ") + e.what();
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 6. The bracket is a Poisson structure and acts diagonally on lattice
//    elements with one global sign.

Failure criterion_poisson() {
  int global_sign = 0;
  for (const GaugeTheory& th : mixed_rank_theories()) {
    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    const int rank = alg.rank();
    Rng rng(666);
    for (int trial = 0; trial < 10; ++trial) {
      AbelianElement a = random_element(alg, rng, false);
      AbelianElement b = random_element(alg, rng, false);
      AbelianElement c = random_element(alg, rng, false);
      if (!(alg.poisson_bracket(a, b) == alg.poisson_bracket(b, a) * Rational(-1))) {
        return "bracket is not antisymmetric";
      }
      AbelianElement leib = alg.poisson_bracket(a, alg.multiply_classical(b, c)) -
                            alg.multiply_classical(alg.poisson_bracket(a, b), c) -
                            alg.multiply_classical(b, alg.poisson_bracket(a, c));
      if (!leib.is_zero()) return "Leibniz rule fails";
      AbelianElement jac = alg.poisson_bracket(a, alg.poisson_bracket(b, c)) +
                           alg.poisson_bracket(b, alg.poisson_bracket(c, a)) +
                           alg.poisson_bracket(c, alg.poisson_bracket(a, b));
      if (!jac.is_zero()) return "Jacobi identity fails";
    }
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        if (!alg.poisson_bracket(alg.w(i), alg.w(j)).is_zero()) return "{w_i, w_j} is nonzero";
      }
    for (int i = 0; i < rank; ++i) {
      for (Int v : {Int(1), Int(-2)}) {
        std::vector<Int> lam(rank, 0);
        lam[i] = v;
        AbelianElement br = alg.poisson_bracket(alg.w(i), alg.e(lam));
        int sign = 0;
        if (br == alg.e(lam) * Rational(v)) sign = 1;
        if (br == alg.e(lam) * Rational(-v)) sign = -1;
        if (sign == 0) return "{w_i, e^λ} is not ±λ_i e^λ";
        if (global_sign == 0) global_sign = sign;
        if (sign != global_sign) return "{w_i, e^λ} sign flips between theories";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 7. Localization: e^λ ∗ e^{−λ} equals the product of weight factors.

Failure criterion_localization() {
  for (const GaugeTheory& th : mixed_rank_theories()) {
    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    const int rank = alg.rank();
    std::vector<Int> lam(rank, -3);
    while (true) {
      LocalizationWitness wit = alg.localization_units(lam);
      if (!wit.verified) {
        std::string s = "unit identity fails at λ=(";
        for (std::size_t i = 0; i < lam.size(); ++i) {
          s += (i ? "," : "") + std::to_string(lam[i]);
        }
        return s + ")";
      }
      int i = rank - 1;
      while (i >= 0 && lam[i] == 3) lam[i--] = -3;
      if (i < 0) break;
      ++lam[i];
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 8. Quiver inputs drive the whole pipeline.

Failure criterion_quivers() {
  TempFile out1("acc_jordan_out.th", "");
  Proc conv = shell(shell_quote(g_cli) + " from-quiver " + shell_quote(g_samples + "/jordan.quiver") +
                    " --output " + shell_quote(out1.path));
  if (conv.code != 0) return "from-quiver exited with " + std::to_string(conv.code);
  {
    std::ifstream f(out1.path);
    std::stringstream buf;
    buf << f.rdbuf();
    if (buf.str() != "torus 1\nweight 0\nweight 1\n") return "converted theory file differs";
  }
  std::vector<long long> free_coeffs(11);
  for (int d = 0; d <= 10; ++d) free_coeffs[d] = d + 1;
  Proc h1 = shell(shell_quote(g_cli) + " hilbert " + shell_quote(out1.path) + " --order 10");
  if (h1.code != 0 || h1.output != series_text(free_coeffs) + "\n") {
    return "loop-quiver series differs";
  }

  TempFile out2("acc_a1_out.th", "");
  Proc conv2 = shell(shell_quote(g_cli) + " from-quiver " + shell_quote(g_samples + "/a1.quiver") +
                     " --output " + shell_quote(out2.path));
  if (conv2.code != 0) return "from-quiver exited with " + std::to_string(conv2.code);
  std::vector<long long> a1_coeffs(11, 0);
  for (int d = 0; d <= 10; d += 2) a1_coeffs[d] = d + 1;
  Proc h2 = shell(shell_quote(g_cli) + " hilbert " + shell_quote(out2.path) + " --order 10");
  if (h2.code != 0 || h2.output != series_text(a1_coeffs) + "\n") {
    return "two-flavor quiver series differs";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 9. Enumeration anchors for U(2) with four fundamentals, and the divergence
//    witness with a single fundamental.

Failure criterion_enumeration() {
  GaugeTheory four;
  four.gl_factors = {2};
  for (int i = 0; i < 4; ++i) {
    four.weights.push_back({1, 0});
    four.weights.push_back({0, 1});
  }
  four = validate_theory(four);
  std::vector<Coweight> low = enumerate_coweights(four, 1);
  const std::vector<Coweight> expect = {{0, -1}, {0, 0}, {1, 0}};
  if (low != expect) return "low-dimension coweights differ";

  TruncatedSeries h8 = hilbert_series(four, 8, false);
  TruncatedSeries h10 = hilbert_series(four, 10, false);
  for (int d = 0; d <= 8; ++d) {
    Rational c = h8.coeff(d);
    if (!is_integer(c) || c < 0) return "coefficient at t^" + std::to_string(d) + " not in N";
    if (c != h10.coeff(d)) return "coefficients shift when the bound is raised";
  }

  GaugeTheory one;
  one.gl_factors = {2};
  one.weights = {{1, 0}, {0, 1}};
  one = validate_theory(one);
  ConvergenceVerdict v = check_convergence(one);
  if (v.good) return "single-flavor theory reported as good";
  if (v.witness != Coweight{1, 0}) return "wrong divergence witness";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// 10. Byte-identical output across thread budgets and repeated runs.

Failure criterion_determinism() {
  const std::string base = shell_quote(g_cli) + " hilbert " +
                           shell_quote(g_samples + "/u2_four_flavors.th") +
                           " --order 8 --refined";
  Proc one = shell("COULOMB_THREADS=1 " + base);
  Proc many = shell("COULOMB_THREADS=8 " + base);
  Proc again = shell("COULOMB_THREADS=8 " + base);
  if (one.code != 0 || many.code != 0 || again.code != 0) return "a series run failed";
  if (one.output != many.output) return "output depends on the thread budget";
  if (many.output != again.output) return "output differs between identical runs";
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli-binary> <samples-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_samples = argv[2];

  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Failure()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"surface singularities", 1.0, criterion_singularities},
      {"bare torus", 1.0, criterion_bare_torus},
      {"random series oracle", 60.0, criterion_random_oracle},
      {"mirror pairs", 120.0, criterion_mirror},
      {"quantization", 60.0, criterion_quantization},
      {"poisson structure", 30.0, criterion_poisson},
      {"localization", 10.0, criterion_localization},
      {"quiver pipeline", 5.0, criterion_quivers},
      {"coweight enumeration", 10.0, criterion_enumeration},
      {"determinism", 30.0, criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Failure f;
    try {
      f = criteria[i].fn();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!f && secs > criteria[i].budget_seconds) {
      std::ostringstream os;
      os << "exceeded the " << criteria[i].budget_seconds << "s budget";
      f = os.str();
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    if (f) {
      ++failures;
      std::cout << "criterion " << (i + 1) << ": FAIL (" << criteria[i].name << ", " << timing
                << "): " << *f << "\n";
    } else {
      std::cout << "criterion " << (i + 1) << ": PASS (" << criteria[i].name << ", " << timing
                << ")\n";
    }
  }
  if (failures > 0) {
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
