#include "coulomb/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "coulomb/abelian.hpp"
#include "coulomb/errors.hpp"
#include "coulomb/higgs.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/parallel.hpp"
#include "coulomb/rng.hpp"
#include "coulomb/textio.hpp"
#include "coulomb/theory.hpp"

namespace coulomb {

namespace {

using nlohmann::json;

constexpr long long kDefaultSeed = 20140831;

json series_to_json(const TruncatedSeries& s) {
  json terms = json::array();
  for (const auto& [key, c] : s.terms()) {
    terms.push_back({{"t", key.first}, {"fugacity", key.second}, {"coeff", to_string(c)}});
  }
  return terms;
}

json wrap(const RunConfig& cfg, json result) {
  return json{{"command", cfg.command}, {"input", cfg.input_path}, {"result", std::move(result)}};
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

GaugeTheory make_torus(int rank, std::vector<std::vector<Int>> weights) {
  GaugeTheory th;
  th.torus_rank = rank;
  th.weights = std::move(weights);
  return validate_theory(std::move(th));
}

AbelianElement random_element(const AbelianAlgebra& alg, Rng& rng, bool with_hbar) {
  const int rank = alg.rank();
  AbelianElement x = alg.zero();
  const int nterms = static_cast<int>(rng.uniform(1, 2));
  for (int t = 0; t < nterms; ++t) {
    std::vector<Int> lam(rank);
    for (auto& v : lam) v = rng.uniform(-2, 2);
    CoefficientPoly p(rank);
    const int nmono = static_cast<int>(rng.uniform(1, 2));
    for (int m = 0; m < nmono; ++m) {
      std::vector<int> exps(rank + 1, 0);
      if (rank > 0) {
        const int budget = static_cast<int>(rng.uniform(0, 2));
        for (int b = 0; b < budget; ++b) ++exps[rng.uniform(0, rank - 1)];
      }
      if (with_hbar && rng.coin()) exps[rank] = 1;
      Int c = rng.uniform(-3, 3);
      if (c == 0) c = 1;
      p.add_term(std::move(exps), Rational(c));
    }
    x.add(lam, p);
  }
  if (x.is_zero()) return alg.one();
  return x;
}

// Torus theories exercising ranks 1..3, repeated weights and mixed signs.
// Every entry has spanning weights, so all series and dimension counts exist.
std::vector<GaugeTheory> suite_theories() {
  return {
      make_torus(1, {{1}}),
      make_torus(1, {{2}}),
      make_torus(1, {{1}, {1}}),
      make_torus(2, {{1, 0}, {1, 1}}),
      make_torus(2, {{1, 0}, {0, 1}, {1, -1}}),
      make_torus(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}),
  };
}

TorusSequence make_sequence(int d, std::vector<std::vector<Int>> inc_rows,
                            std::vector<std::vector<Int>> proj_rows) {
  TorusSequence s;
  const int k = inc_rows.empty() ? 0 : static_cast<int>(inc_rows.front().size());
  s.inclusion = IntMat::from_rows(inc_rows, k);
  if (s.inclusion.rows != d) s.inclusion = IntMat(d, k);
  s.projection = IntMat::from_rows(proj_rows, d);
  return s;
}

// ---------------------------------------------------------------------------
// hilbert / present / poisson / from-quiver / check-duality

int cmd_hilbert(const RunConfig& cfg, std::ostream& out) {
  GaugeTheory th = load_theory_file(cfg.input_path);
  HilbertOptions opt;
  opt.order = cfg.order;
  opt.refined = cfg.refined;
  opt.shift = cfg.shift;
  opt.threads = thread_budget();
  TruncatedSeries hs = hilbert_series(th, opt);
  if (cfg.json) {
    emit_json(out, wrap(cfg, json{{"order", cfg.order},
                                  {"refined", cfg.refined},
                                  {"terms", series_to_json(hs)}}));
  } else {
    out << hs.str() << "\n";
  }
  return 0;
}

int cmd_present(const RunConfig& cfg, std::ostream& out) {
  GaugeTheory th = load_theory_file(cfg.input_path);
  AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
  Presentation pres = alg.presentation();
  if (cfg.json) {
    json gens = json::array();
    for (const auto& g : pres.generators) {
      json jg{{"name", g.name}, {"degree", g.t_degree}, {"class", g.pi1}};
      if (g.is_lattice) jg["scale"] = to_string(g.scale);
      gens.push_back(std::move(jg));
    }
    json rels = json::array();
    for (const auto& rel : pres.relations) {
      json terms = json::array();
      for (const auto& term : rel.rhs) {
        terms.push_back({{"coeff", to_string(term.coeff)}, {"exponents", term.exponents}});
      }
      rels.push_back({{"lhs", {pres.generators[rel.lhs_a].name, pres.generators[rel.lhs_b].name}},
                      {"terms", std::move(terms)},
                      {"text", relation_to_string(pres, rel)}});
    }
    emit_json(out, wrap(cfg, json{{"generators", std::move(gens)},
                                  {"relations", std::move(rels)}}));
  } else {
    out << presentation_to_string(pres);
  }
  return 0;
}

int cmd_poisson(const RunConfig& cfg, std::ostream& out) {
  if (cfg.exprs.size() != 2) {
    throw ParseError("poisson requires exactly two --expr operands", 0);
  }
  GaugeTheory th = load_theory_file(cfg.input_path);
  AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
  AbelianElement a = parse_element(cfg.exprs[0], alg.rank());
  AbelianElement b = parse_element(cfg.exprs[1], alg.rank());
  AbelianElement r = alg.poisson_bracket(a, b);
  if (cfg.json) {
    emit_json(out, wrap(cfg, json{{"element", element_to_string(r)}}));
  } else {
    out << element_to_string(r) << "\n";
  }
  return 0;
}

int cmd_from_quiver(const RunConfig& cfg, std::ostream& out) {
  QuiverSpec q = load_quiver_file(cfg.input_path);
  GaugeTheory th = from_quiver(q);
  const std::string text = theory_to_file(th);
  if (!cfg.output_path.empty()) {
    std::ofstream f(cfg.output_path);
    if (!f) throw ParseError("cannot write file '" + cfg.output_path + "'", 0);
    f << text;
  }
  if (cfg.json) {
    emit_json(out, wrap(cfg, json{{"theory", text},
                                  {"gl_factors", th.gl_factors},
                                  {"torus_rank", th.torus_rank},
                                  {"weights", th.weights}}));
  } else if (cfg.output_path.empty()) {
    out << text;
  }
  return 0;
}

int cmd_check_duality(const RunConfig& cfg, std::ostream& out) {
  TorusSequence s = load_sequence_file(cfg.input_path);
  DualityReport rep = check_toric_duality(s, cfg.order);
  if (cfg.json) {
    emit_json(out, wrap(cfg, json{{"order", rep.order},
                                  {"match", rep.match},
                                  {"mismatch_degree", rep.mismatch_degree},
                                  {"coulomb", rep.coulomb_dims},
                                  {"higgs", rep.higgs_dims}}));
  } else {
    out << duality_report_to_string(rep);
  }
  return rep.match ? 0 : 1;
}

// ---------------------------------------------------------------------------
// quantize-check

int cmd_quantize_check(const RunConfig& cfg, std::ostream& out) {
  GaugeTheory th = load_theory_file(cfg.input_path);
  AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
  const long long seed = cfg.seed.value_or(kDefaultSeed);
  const int trials = cfg.trials;
  if (trials < 1) throw ParseError("trials must be positive", 0);
  Rng rng(static_cast<std::uint64_t>(seed));

  int assoc_fail = -1, limit_fail = -1, comm_fail = -1;
  std::string detail;
  for (int trial = 0; trial < trials; ++trial) {
    AbelianElement a = random_element(alg, rng, true);
    AbelianElement b = random_element(alg, rng, true);
    AbelianElement c = random_element(alg, rng, true);
    if (assoc_fail < 0) {
      AbelianElement lhs = alg.multiply_quantized(alg.multiply_quantized(a, b), c);
      AbelianElement rhs = alg.multiply_quantized(a, alg.multiply_quantized(b, c));
      if (!(lhs == rhs)) {
        assoc_fail = trial;
        detail = "a = " + element_to_string(a) + "; b = " + element_to_string(b) +
                 "; c = " + element_to_string(c);
      }
    }
    AbelianElement a0 = a.at_hbar_zero(), b0 = b.at_hbar_zero();
    if (a0.is_zero()) a0 = alg.one();
    if (b0.is_zero()) b0 = alg.one();
    if (limit_fail < 0) {
      if (!(alg.multiply_quantized(a0, b0).at_hbar_zero() == alg.multiply_classical(a0, b0))) {
        limit_fail = trial;
      }
    }
    if (comm_fail < 0) {
      try {
        alg.poisson_bracket(a0, b0);
      } catch (const std::exception&) {
        comm_fail = trial;
      }
    }
  }

  const bool ok = assoc_fail < 0 && limit_fail < 0 && comm_fail < 0;
  if (cfg.json) {
    json checks = json::array();
    checks.push_back({{"name", "associativity"}, {"ok", assoc_fail < 0}});
    checks.push_back({{"name", "classical-limit"}, {"ok", limit_fail < 0}});
    checks.push_back({{"name", "commutator-divisibility"}, {"ok", comm_fail < 0}});
    emit_json(out, wrap(cfg, json{{"seed", seed}, {"trials", trials}, {"checks", checks}}));
    return ok ? 0 : 1;
  }
  out << "seed " << seed << "\n";
  auto report = [&](const char* name, int fail) {
    if (fail < 0) {
      out << name << ": ok (" << trials << " trials)\n";
    } else {
      out << name << ": FAIL (trial " << fail << ")\n";
    }
  };
  report("associativity", assoc_fail);
  report("classical-limit", limit_fail);
  report("commutator-divisibility", comm_fail);
  if (!detail.empty()) out << detail << "\n";
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify

using SuiteResult = std::optional<std::string>;  // failure detail, empty = ok

SuiteResult suite_series(Rng& rng) {
  auto random_series = [&rng]() {
    TruncatedSeries s(10);
    for (int i = 0; i < 6; ++i) {
      s.add_term(static_cast<int>(rng.uniform(0, 5)), Rational(rng.uniform(-3, 3)));
    }
    return s;
  };
  for (int trial = 0; trial < 25; ++trial) {
    TruncatedSeries p = random_series(), q = random_series(), r = random_series();
    if (!((p * q) * r == p * (q * r))) return "multiplication not associative";
    if (!(p * q == q * p)) return "multiplication not commutative";
    TruncatedSeries u = TruncatedSeries::constant(Rational(rng.uniform(1, 4)), 10);
    for (int i = 0; i < 4; ++i) {
      u.add_term(static_cast<int>(rng.uniform(1, 5)), Rational(rng.uniform(-2, 2)));
    }
    if (!(inverse_unit(u) * u == TruncatedSeries::constant(1, 10))) {
      return "inverse_unit(u)*u != 1";
    }
  }
  TruncatedSeries g = geometric_factor(2, 5);
  if (g.coeff(0) != 1 || g.coeff(2) != 1 || g.coeff(4) != 1 || g.coeff(3) != 0) {
    return "geometric_factor(2,5) wrong";
  }
  return std::nullopt;
}

SuiteResult suite_classical(Rng& rng) {
  for (const GaugeTheory& th : suite_theories()) {
    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    for (int trial = 0; trial < 10; ++trial) {
      AbelianElement a = random_element(alg, rng, false);
      AbelianElement b = random_element(alg, rng, false);
      AbelianElement c = random_element(alg, rng, false);
      if (!(alg.multiply_classical(a, b) == alg.multiply_classical(b, a))) {
        return "classical product not commutative";
      }
      if (!(alg.multiply_classical(alg.multiply_classical(a, b), c) ==
            alg.multiply_classical(a, alg.multiply_classical(b, c)))) {
        return "classical product not associative";
      }
    }
  }
  return std::nullopt;
}

SuiteResult suite_quantized(Rng& rng) {
  for (const GaugeTheory& th : suite_theories()) {
    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    for (int trial = 0; trial < 8; ++trial) {
      AbelianElement a = random_element(alg, rng, true);
      AbelianElement b = random_element(alg, rng, true);
      AbelianElement c = random_element(alg, rng, true);
      AbelianElement lhs = alg.multiply_quantized(alg.multiply_quantized(a, b), c);
      AbelianElement rhs = alg.multiply_quantized(a, alg.multiply_quantized(b, c));
      if (!(lhs == rhs)) return "quantized product not associative";
      AbelianElement a0 = a.at_hbar_zero(), b0 = b.at_hbar_zero();
      if (a0.is_zero() || b0.is_zero()) continue;
      if (!(alg.multiply_quantized(a0, b0).at_hbar_zero() == alg.multiply_classical(a0, b0))) {
        return "classical limit mismatch";
      }
      alg.poisson_bracket(a0, b0);  // throws if a commutator is not divisible by ħ
    }
  }
  return std::nullopt;
}

SuiteResult suite_poisson(Rng& rng) {
  int global_sign = 0;
  for (const GaugeTheory& th : suite_theories()) {
    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    const int rank = alg.rank();
    for (int trial = 0; trial < 6; ++trial) {
      AbelianElement a = random_element(alg, rng, false);
      AbelianElement b = random_element(alg, rng, false);
      AbelianElement c = random_element(alg, rng, false);
      if (!(alg.poisson_bracket(a, b) == alg.poisson_bracket(b, a) * Rational(-1))) {
        return "bracket not antisymmetric";
      }
      AbelianElement leib_l = alg.poisson_bracket(a, alg.multiply_classical(b, c));
      AbelianElement leib_r = alg.multiply_classical(alg.poisson_bracket(a, b), c) +
                              alg.multiply_classical(b, alg.poisson_bracket(a, c));
      if (!(leib_l == leib_r)) return "Leibniz identity fails";
      AbelianElement jac = alg.poisson_bracket(a, alg.poisson_bracket(b, c)) +
                           alg.poisson_bracket(b, alg.poisson_bracket(c, a)) +
                           alg.poisson_bracket(c, alg.poisson_bracket(a, b));
      if (!jac.is_zero()) return "Jacobi identity fails";
    }
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < rank; ++j) {
        if (!alg.poisson_bracket(alg.w(i), alg.w(j)).is_zero()) return "{w_i,w_j} != 0";
      }
    }
    // {w_i, e^λ} = s·λ_i·e^λ with one sign s for every theory and λ.
    std::vector<std::vector<Int>> lams;
    for (int i = 0; i < rank; ++i) {
      std::vector<Int> e(rank, 0);
      e[i] = 1;
      lams.push_back(e);
      e[i] = -2;
      lams.push_back(e);
    }
    lams.push_back(std::vector<Int>(rank, 1));
    for (const auto& lam : lams) {
      for (int i = 0; i < rank; ++i) {
        AbelianElement br = alg.poisson_bracket(alg.w(i), alg.e(lam));
        if (lam[i] == 0) {
          if (!br.is_zero()) return "{w_i, e^λ} nonzero for λ_i = 0";
          continue;
        }
        int sign = 0;
        if (br == alg.e(lam) * Rational(lam[i])) sign = 1;
        if (br == alg.e(lam) * Rational(-lam[i])) sign = -1;
        if (sign == 0) return "{w_i, e^λ} is not ±λ_i e^λ";
        if (global_sign == 0) global_sign = sign;
        if (global_sign != sign) return "{w_i, e^λ} sign not globally consistent";
      }
    }
  }
  return std::nullopt;
}

SuiteResult suite_oracle(Rng& rng) {
  int found = 0, attempts = 0;
  while (found < 5 && attempts < 500) {
    ++attempts;
    const int rank = static_cast<int>(rng.uniform(1, 3));
    const int nw = static_cast<int>(rng.uniform(1, 5));
    std::vector<std::vector<Int>> weights(nw, std::vector<Int>(rank));
    for (auto& w : weights) {
      for (auto& v : w) v = rng.uniform(-2, 2);
    }
    GaugeTheory th = make_torus(rank, weights);
    if (!check_convergence(th).good) continue;
    ++found;
    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    const int order = 8;
    TruncatedSeries plain = hilbert_series(th, order, false);
    TruncatedSeries refined = hilbert_series(th, order, true);
    std::vector<long long> dims = alg.graded_dimensions_up_to(order);
    for (int d = 0; d <= order; ++d) {
      if (plain.coeff(d) != Rational(dims[d])) return "unrefined coefficient mismatch";
      std::map<std::vector<Int>, long long> buckets = alg.graded_dimension_refined(d);
      std::map<std::vector<Int>, Rational> slice;
      for (const auto& [key, c] : refined.terms()) {
        if (key.first == d) slice[key.second] = c;
      }
      if (slice.size() != buckets.size()) return "refined support mismatch";
      for (const auto& [lam, c] : buckets) {
        auto it = slice.find(lam);
        if (it == slice.end() || it->second != Rational(c)) return "refined coefficient mismatch";
      }
    }
  }
  if (found < 5) return "could not sample 5 good random theories";
  return std::nullopt;
}

SuiteResult suite_presentations(Rng&) {
  for (int n = 1; n <= 3; ++n) {
    AbelianAlgebra alg = AbelianAlgebra::from_theory(make_torus(1, {{n}}));
    Presentation pres = alg.presentation();
    if (pres.relations.size() != 1) return "A-type theory has more than one relation";
    std::string rel = relation_to_string(pres, pres.relations[0]);
    std::string expect = n == 1 ? "x*y = w" : "x*y = w^" + std::to_string(n);
    if (rel != expect) return "A-type relation is '" + rel + "', expected '" + expect + "'";
  }
  {
    AbelianAlgebra alg = AbelianAlgebra::from_theory(make_torus(1, {}));
    Presentation pres = alg.presentation();
    if (pres.relations.size() != 1) return "pure torus has more than one relation";
    std::string rel = relation_to_string(pres, pres.relations[0]);
    if (rel != "x*y = 1") return "pure torus relation is '" + rel + "'";
  }
  const std::vector<GaugeTheory> sample = {
      make_torus(1, {{1}}),
      make_torus(1, {{2}}),
      make_torus(2, {{1, 0}, {1, 1}}),
  };
  for (const GaugeTheory& th : sample) {
    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    Presentation pres = alg.presentation();
    std::vector<long long> from_pres = dimensions_from_presentation(alg, pres, 8);
    std::vector<long long> expected = alg.graded_dimensions_up_to(8);
    if (from_pres != expected) return "presentation does not regenerate graded dimensions";
  }
  return std::nullopt;
}

SuiteResult suite_localization(Rng&) {
  for (const GaugeTheory& th : suite_theories()) {
    AbelianAlgebra alg = AbelianAlgebra::from_theory(th);
    const int rank = alg.rank();
    std::vector<Int> lam(rank, -2);
    while (true) {
      if (!alg.localization_units(lam).verified) return "localization identity fails";
      int k = rank - 1;
      while (k >= 0 && lam[k] == 2) {
        lam[k] = -2;
        --k;
      }
      if (k < 0) break;
      ++lam[k];
    }
  }
  return std::nullopt;
}

SuiteResult suite_duality(Rng&) {
  std::vector<TorusSequence> seqs;
  seqs.push_back(make_sequence(2, {{1}, {1}}, {{1, -1}}));
  seqs.push_back(make_sequence(2, {{1, 0}, {0, 1}}, {}));
  seqs.push_back(make_sequence(3, {{1, 0}, {0, 1}, {1, 1}}, {{1, 1, -1}}));
  for (const TorusSequence& s : seqs) {
    TorusSequence dd = dualize_torus(dualize_torus(s));
    if (!(dd.inclusion.data == s.inclusion.data && dd.projection.data == s.projection.data)) {
      return "dualize_torus is not an involution";
    }
    DualityReport rep = check_toric_duality(s, 6);
    if (!rep.match) {
      return "duality mismatch at t^" + std::to_string(rep.mismatch_degree);
    }
  }
  return std::nullopt;
}

SuiteResult suite_quiver(Rng& rng) {
  {
    QuiverSpec q;
    q.vertices.push_back({"A", 1, 1});
    q.edges.emplace_back(0, 0);
    GaugeTheory th = from_quiver(q);
    TruncatedSeries hs = hilbert_series(th, 6, false);
    for (int d = 0; d <= 6; ++d) {
      if (hs.coeff(d) != Rational(d + 1)) return "Jordan quiver series wrong";
    }
  }
  {
    QuiverSpec q;
    q.vertices.push_back({"A", 1, 2});
    GaugeTheory th = from_quiver(q);
    TruncatedSeries hs = hilbert_series(th, 6, false);
    for (int d = 0; d <= 6; ++d) {
      Rational expect = d % 2 == 0 ? Rational(d + 1) : Rational(0);
      if (hs.coeff(d) != expect) return "two-flavor quiver series wrong";
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    QuiverSpec q;
    const int nv = static_cast<int>(rng.uniform(1, 3));
    for (int i = 0; i < nv; ++i) {
      q.vertices.push_back({"v" + std::to_string(i), static_cast<int>(rng.uniform(0, 2)),
                            static_cast<int>(rng.uniform(0, 2))});
    }
    bool any = false;
    for (const auto& v : q.vertices) any = any || v.dim_v > 0;
    if (!any) q.vertices[0].dim_v = 1;
    const int ne = static_cast<int>(rng.uniform(0, 3));
    for (int e = 0; e < ne; ++e) {
      q.edges.emplace_back(rng.uniform(0, nv - 1), rng.uniform(0, nv - 1));
    }
    GaugeTheory th = from_quiver(q);
    std::size_t expect = 0;
    for (const auto& [out_v, in_v] : q.edges) {
      expect += static_cast<std::size_t>(q.vertices[out_v].dim_v) *
                static_cast<std::size_t>(q.vertices[in_v].dim_v);
    }
    for (const auto& v : q.vertices) {
      expect += static_cast<std::size_t>(v.dim_w) * static_cast<std::size_t>(v.dim_v);
    }
    if (th.weights.size() != expect) return "quiver weight count mismatch";
  }
  return std::nullopt;
}

SuiteResult suite_determinism(Rng&) {
  GaugeTheory th;
  th.gl_factors = {2};
  for (int copies = 0; copies < 4; ++copies) {
    th.weights.push_back({1, 0});
    th.weights.push_back({0, 1});
  }
  th = validate_theory(th);
  HilbertOptions one, many;
  one.order = many.order = 8;
  one.refined = many.refined = true;
  one.threads = 1;
  many.threads = 8;
  std::string a = hilbert_series(th, one).str();
  std::string b = hilbert_series(th, many).str();
  std::string c = hilbert_series(th, many).str();
  if (a != b || b != c) return "series differs across thread budgets";
  return std::nullopt;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const long long seed = cfg.seed.value_or(kDefaultSeed);
  if (!cfg.json) out << "seed " << seed << "\n";
  Rng rng(static_cast<std::uint64_t>(seed));

  using Fn = std::function<SuiteResult(Rng&)>;
  const std::vector<std::pair<std::string, Fn>> suites = {
      {"series-arithmetic", suite_series},
      {"classical-product", suite_classical},
      {"quantized-product", suite_quantized},
      {"poisson-axioms", suite_poisson},
      {"monopole-vs-graded-dimension", suite_oracle},
      {"presentations", suite_presentations},
      {"localization", suite_localization},
      {"toric-duality", suite_duality},
      {"quiver-anchors", suite_quiver},
      {"thread-determinism", suite_determinism},
  };
  int failures = 0;
  json jsuites = json::array();
  for (const auto& [name, fn] : suites) {
    SuiteResult res = fn(rng);
    if (res) ++failures;
    if (!cfg.json) {
      if (res) {
        out << "suite " << name << ": FAIL (" << *res << ")\n";
      } else {
        out << "suite " << name << ": ok\n";
      }
    }
    jsuites.push_back({{"name", name}, {"ok", !res.has_value()}});
  }
  if (cfg.json) {
    emit_json(out, wrap(cfg, json{{"seed", seed}, {"suites", jsuites}, {"failures", failures}}));
  } else if (failures == 0) {
    out << "verify: all " << suites.size() << " suites passed\n";
  } else {
    out << "verify: " << failures << " of " << suites.size() << " suites failed\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.order < 0) throw ParseError("order must be nonnegative", 0);
    if (cfg.command == "hilbert") return cmd_hilbert(cfg, out);
    if (cfg.command == "present") return cmd_present(cfg, out);
    if (cfg.command == "poisson") return cmd_poisson(cfg, out);
    if (cfg.command == "quantize-check") return cmd_quantize_check(cfg, out);
    if (cfg.command == "check-duality") return cmd_check_duality(cfg, out);
    if (cfg.command == "from-quiver") return cmd_from_quiver(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    throw ParseError("unknown command '" + cfg.command + "'", 0);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coulomb
