#include "coulomb/textio.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "coulomb/errors.hpp"

namespace coulomb {

namespace {

struct DirectiveLine {
  int number = 0;
  std::vector<std::string> tokens;  // nonempty
};

std::vector<DirectiveLine> tokenize_stream(std::istream& in) {
  std::vector<DirectiveLine> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    DirectiveLine line;
    line.number = number;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

Int parse_int_token(const std::string& tok, int line) {
  std::size_t used = 0;
  Int value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  if (used != tok.size()) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  return value;
}

std::vector<Int> parse_int_tail(const DirectiveLine& line) {
  std::vector<Int> out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    out.push_back(parse_int_token(line.tokens[i], line.number));
  }
  return out;
}

}  // namespace

GaugeTheory parse_theory_file(std::istream& in) {
  GaugeTheory th;
  bool torus_seen = false;
  std::vector<std::pair<int, std::vector<Int>>> weights;  // (line, entries)
  for (const DirectiveLine& line : tokenize_stream(in)) {
    const std::string& dir = line.tokens[0];
    if (dir == "gl") {
      if (line.tokens.size() != 2) throw ParseError("gl takes one rank argument", line.number);
      Int n = parse_int_token(line.tokens[1], line.number);
      if (n < 1) throw ParseError("gl rank must be positive", line.number);
      th.gl_factors.push_back(static_cast<int>(n));
    } else if (dir == "torus") {
      if (torus_seen) throw ParseError("duplicate torus directive", line.number);
      if (line.tokens.size() != 2) throw ParseError("torus takes one rank argument", line.number);
      Int r = parse_int_token(line.tokens[1], line.number);
      if (r < 0) throw ParseError("torus rank must be nonnegative", line.number);
      th.torus_rank = static_cast<int>(r);
      torus_seen = true;
    } else if (dir == "weight") {
      weights.emplace_back(line.number, parse_int_tail(line));
    } else {
      throw ParseError("unknown directive '" + dir + "'", line.number);
    }
  }
  const int rank = th.total_rank();
  for (auto& [line, entries] : weights) {
    if (static_cast<int>(entries.size()) != rank) {
      throw ParseError("weight has " + std::to_string(entries.size()) + " entries, expected " +
                       std::to_string(rank), line);
    }
    th.weights.push_back(std::move(entries));
  }
  return validate_theory(std::move(th));
}

QuiverSpec parse_quiver_file(std::istream& in) {
  QuiverSpec q;
  std::map<std::string, int> index;
  auto parse_assigned = [](const std::string& tok, const char* key, int line) {
    const std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0) {
      throw ParseError(std::string("expected ") + key + "=<int>, got '" + tok + "'", line);
    }
    Int v = parse_int_token(tok.substr(prefix.size()), line);
    if (v < 0) throw ParseError(std::string(key) + " must be nonnegative", line);
    return static_cast<int>(v);
  };
  for (const DirectiveLine& line : tokenize_stream(in)) {
    const std::string& dir = line.tokens[0];
    if (dir == "vertex") {
      if (line.tokens.size() != 4) {
        throw ParseError("vertex takes <name> V=<int> W=<int>", line.number);
      }
      const std::string& name = line.tokens[1];
      if (index.count(name)) throw ParseError("duplicate vertex '" + name + "'", line.number);
      QuiverVertex v;
      v.name = name;
      v.dim_v = parse_assigned(line.tokens[2], "V", line.number);
      v.dim_w = parse_assigned(line.tokens[3], "W", line.number);
      index.emplace(name, static_cast<int>(q.vertices.size()));
      q.vertices.push_back(std::move(v));
    } else if (dir == "edge") {
      if (line.tokens.size() != 3) throw ParseError("edge takes two vertex names", line.number);
      auto lookup = [&](const std::string& name) {
        auto it = index.find(name);
        if (it == index.end()) {
          throw ParseError("edge references undeclared vertex '" + name + "'", line.number);
        }
        return it->second;
      };
      q.edges.emplace_back(lookup(line.tokens[1]), lookup(line.tokens[2]));
    } else {
      throw ParseError("unknown directive '" + dir + "'", line.number);
    }
  }
  return q;
}

TorusSequence parse_sequence_file(std::istream& in) {
  std::vector<std::pair<int, std::vector<Int>>> inc, proj;
  for (const DirectiveLine& line : tokenize_stream(in)) {
    const std::string& dir = line.tokens[0];
    if (dir == "include") {
      inc.emplace_back(line.number, parse_int_tail(line));
    } else if (dir == "project") {
      proj.emplace_back(line.number, parse_int_tail(line));
    } else {
      throw ParseError("unknown directive '" + dir + "'", line.number);
    }
  }
  if (inc.empty() && proj.empty()) throw ParseError("empty sequence file", 1);
  auto check_rect = [](const std::vector<std::pair<int, std::vector<Int>>>& rows,
                       const char* what) {
    for (const auto& [line, entries] : rows) {
      if (entries.size() != rows.front().second.size()) {
        throw ParseError(std::string(what) + " rows have inconsistent lengths", line);
      }
    }
  };
  check_rect(inc, "include");
  check_rect(proj, "project");

  const int d = inc.empty() ? static_cast<int>(proj.front().second.size())
                            : static_cast<int>(inc.size());
  TorusSequence s;
  s.inclusion = IntMat(d, inc.empty() ? 0 : static_cast<int>(inc.front().second.size()));
  for (int r = 0; r < static_cast<int>(inc.size()); ++r) {
    for (int c = 0; c < s.inclusion.cols; ++c) s.inclusion.at(r, c) = inc[r].second[c];
  }
  s.projection = IntMat(static_cast<int>(proj.size()), d);
  for (int r = 0; r < s.projection.rows; ++r) {
    if (static_cast<int>(proj[r].second.size()) != d) {
      throw ParseError("project row length does not match the include row count", proj[r].first);
    }
    for (int c = 0; c < d; ++c) s.projection.at(r, c) = proj[r].second[c];
  }
  return s;
}

namespace {

template <typename T>
T load_file(const std::string& path, T (*fn)(std::istream&)) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0);
  return fn(in);
}

}  // namespace

GaugeTheory load_theory_file(const std::string& path) {
  return load_file(path, parse_theory_file);
}
QuiverSpec load_quiver_file(const std::string& path) {
  return load_file(path, parse_quiver_file);
}
TorusSequence load_sequence_file(const std::string& path) {
  return load_file(path, parse_sequence_file);
}

std::string theory_to_file(const GaugeTheory& th) {
  std::ostringstream out;
  for (int n : th.gl_factors) out << "gl " << n << "\n";
  if (th.torus_rank > 0) out << "torus " << th.torus_rank << "\n";
  for (const auto& w : th.weights) {
    out << "weight";
    for (Int c : w) out << ' ' << c;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Element grammar

namespace {

class ElementParser {
 public:
  ElementParser(const std::string& text, int rank) : s_(text), rank_(rank) {}

  AbelianElement parse() {
    AbelianElement out(rank_);
    skip_space();
    if (pos_ == s_.size()) throw error("empty element");
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw error("expected '+' or '-' between terms");
      }
      parse_term(out, sign);
      skip_space();
      first = false;
    }
    return out;
  }

 private:
  const std::string& s_;
  int rank_;
  std::size_t pos_ = 0;

  ParseError error(const std::string& msg) const {
    return ParseError("element: " + msg + " at position " + std::to_string(pos_ + 1), 0);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Int parse_integer() {
    skip_space();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw error("expected a number");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::stoll(s_.substr(start, pos_ - start));
  }

  int parse_exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    Int e = parse_integer();
    if (e < 0) throw error("negative exponent");
    return static_cast<int>(e);
  }

  void parse_term(AbelianElement& out, Rational sign) {
    Rational coeff = sign;
    std::vector<int> wexp(rank_, 0);
    int hexp = 0;
    std::vector<Int> lattice(rank_, 0);
    bool has_lattice = false;
    while (true) {
      skip_space();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Int num = parse_integer();
        skip_space();
        if (peek() == '/') {
          ++pos_;
          Int den = parse_integer();
          if (den == 0) throw error("zero denominator");
          coeff *= Rational(num) / Rational(den);
        } else {
          coeff *= Rational(num);
        }
      } else if (c == 'w') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          throw error("w must be indexed, e.g. w1");
        }
        Int i = parse_integer();
        if (i < 1 || i > rank_) throw error("w index out of range");
        wexp[static_cast<int>(i) - 1] += parse_exponent();
      } else if (c == 'h') {
        ++pos_;
        hexp += parse_exponent();
      } else if (c == 'E') {
        if (has_lattice) throw error("multiple E factors in one term");
        has_lattice = true;
        ++pos_;
        skip_space();
        if (peek() != '[') throw error("expected '[' after E");
        ++pos_;
        skip_space();
        std::vector<Int> entries;
        if (peek() != ']') {
          entries.push_back(parse_integer());
          skip_space();
          while (peek() == ',') {
            ++pos_;
            entries.push_back(parse_integer());
            skip_space();
          }
        }
        if (peek() != ']') throw error("expected ']'");
        ++pos_;
        if (static_cast<int>(entries.size()) != rank_) {
          throw error("E[...] has " + std::to_string(entries.size()) + " entries, expected " +
                      std::to_string(rank_));
        }
        lattice = std::move(entries);
      } else {
        throw error("unexpected character '" + std::string(1, c) + "'");
      }
      skip_space();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    CoefficientPoly p(rank_);
    std::vector<int> exps = wexp;
    exps.push_back(hexp);
    p.add_term(std::move(exps), coeff);
    out.add(lattice, p);
  }
};

void append_power(std::ostringstream& os, bool& any, const std::string& var, int e) {
  if (e == 0) return;
  if (any) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  any = true;
}

}  // namespace

AbelianElement parse_element(const std::string& text, int rank) {
  return ElementParser(text, rank).parse();
}

std::string element_to_string(const AbelianElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const int rank = x.rank();
  for (const auto& [lambda, poly] : x.terms()) {
    for (const auto& [exps, coeff] : poly.terms()) {
      const bool negative = coeff < 0;
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      Rational mag = negative ? Rational(-coeff) : coeff;

      std::ostringstream factors;
      bool any = false;
      for (int i = 0; i < rank; ++i) {
        append_power(factors, any, "w" + std::to_string(i + 1), exps[i]);
      }
      append_power(factors, any, "h", exps[rank]);
      bool lattice_nonzero = false;
      for (Int v : lambda) lattice_nonzero = lattice_nonzero || v != 0;
      if (lattice_nonzero) {
        if (any) factors << '*';
        factors << "E[";
        for (std::size_t i = 0; i < lambda.size(); ++i) {
          if (i) factors << ',';
          factors << lambda[i];
        }
        factors << ']';
        any = true;
      }
      if (!any) {
        out << to_string(mag);
      } else {
        if (mag != 1) out << to_string(mag) << '*';
        out << factors.str();
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Presentation and duality rendering

std::string relation_to_string(const Presentation& pres, const PresentationRelation& rel) {
  std::ostringstream out;
  out << pres.generators[rel.lhs_a].name << '*' << pres.generators[rel.lhs_b].name << " = ";
  if (rel.rhs.empty()) {
    out << '0';
    return out.str();
  }
  bool first = true;
  for (const auto& term : rel.rhs) {
    const bool negative = term.coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    Rational mag = negative ? Rational(-term.coeff) : term.coeff;
    std::ostringstream factors;
    bool any = false;
    for (std::size_t gi = 0; gi < term.exponents.size(); ++gi) {
      append_power(factors, any, pres.generators[gi].name, term.exponents[gi]);
    }
    if (!any) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << '*';
      out << factors.str();
    }
  }
  return out.str();
}

std::string presentation_to_string(const Presentation& pres) {
  std::ostringstream out;
  for (const auto& g : pres.generators) {
    out << "generator " << g.name << " degree " << g.t_degree;
    if (g.is_lattice) {
      out << " class [";
      for (std::size_t i = 0; i < g.pi1.size(); ++i) {
        if (i) out << ',';
        out << g.pi1[i];
      }
      out << ']';
      if (g.scale != 1) out << " scale " << to_string(g.scale);
    }
    out << "\n";
  }
  for (const auto& rel : pres.relations) {
    out << "relation " << relation_to_string(pres, rel) << "\n";
  }
  return out.str();
}

std::string duality_report_to_string(const DualityReport& rep) {
  std::ostringstream out;
  for (int d = 0; d <= rep.order; ++d) {
    out << "t^" << d << ": coulomb=" << rep.coulomb_dims[d] << " higgs=" << rep.higgs_dims[d]
        << "\n";
  }
  if (rep.match) {
    out << "MATCH through t^" << rep.order << "\n";
  } else {
    out << "MISMATCH at t^" << rep.mismatch_degree << ": coulomb=" << rep.coulomb_coeff
        << " higgs=" << rep.higgs_coeff << "\n";
  }
  return out.str();
}

}  // namespace coulomb
