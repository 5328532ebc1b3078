#include "doctest.h"

#include <functional>
#include <sstream>
#include <string>

#include "coulomb/abelian.hpp"
#include "coulomb/errors.hpp"
#include "coulomb/textio.hpp"
#include "coulomb/theory.hpp"

using namespace coulomb;

namespace {

GaugeTheory theory_from(const std::string& text) {
  std::istringstream in(text);
  return parse_theory_file(in);
}

std::string err_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("textio") {

TEST_CASE("theory files parse with comments and blank lines") {
  GaugeTheory th = theory_from("# header\n\ngl 2\ntorus 1   # trailing\nweight 1 0 -2\n");
  CHECK(th.gl_factors == std::vector<int>{2});
  CHECK(th.torus_rank == 1);
  REQUIRE(th.weights.size() == 1);
  CHECK(th.weights[0] == std::vector<Int>{1, 0, -2});
}

TEST_CASE("theory file errors carry line numbers") {
  CHECK(err_of([] { theory_from("torus 1\nbogus 3\n"); }) == "line 2: unknown directive 'bogus'");
  CHECK(err_of([] { theory_from("torus 1\nweight 1 2\n"); }) ==
        "line 2: weight has 2 entries, expected 1");
  CHECK(err_of([] { theory_from("torus 1\ntorus 2\n"); }) == "line 2: duplicate torus directive");
  CHECK(err_of([] { theory_from("gl x\n"); }) == "line 1: expected an integer, got 'x'");
  CHECK(err_of([] { theory_from("gl 0\n"); }) == "line 1: gl rank must be positive");
}

TEST_CASE("theory files round-trip") {
  const std::string text = "gl 2\ntorus 1\nweight -1 0 2\nweight 1 1 1\n";
  GaugeTheory th = theory_from(text);
  CHECK(theory_to_file(th) == text);
}

TEST_CASE("quiver files parse") {
  std::istringstream in("vertex A V=2 W=3\nvertex B V=1 W=0\nedge A B\n");
  QuiverSpec q = parse_quiver_file(in);
  REQUIRE(q.vertices.size() == 2);
  CHECK(q.vertices[0].name == "A");
  CHECK(q.vertices[0].dim_v == 2);
  CHECK(q.vertices[0].dim_w == 3);
  REQUIRE(q.edges.size() == 1);
  CHECK(q.edges[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("quiver file errors") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    parse_quiver_file(in);
  };
  CHECK(err_of([&] { parse("vertex A V=1 W=1\nedge A C\n"); }) ==
        "line 2: edge references undeclared vertex 'C'");
  CHECK(err_of([&] { parse("vertex A V=1\n"); }) == "line 1: vertex takes <name> V=<int> W=<int>");
  CHECK(err_of([&] { parse("vertex A W=1 V=1\n"); }) == "line 1: expected V=<int>, got 'W=1'");
  CHECK(err_of([&] { parse("vertex A V=1 W=1\nvertex A V=2 W=2\n"); }) ==
        "line 2: duplicate vertex 'A'");
}

TEST_CASE("sequence files parse") {
  std::istringstream in("include 1\ninclude 1\nproject 1 -1\n");
  TorusSequence s = parse_sequence_file(in);
  CHECK(s.inclusion.rows == 2);
  CHECK(s.inclusion.cols == 1);
  CHECK(s.projection.rows == 1);
  CHECK(s.projection.cols == 2);
  validate_sequence(s);
}

TEST_CASE("sequence file errors") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    parse_sequence_file(in);
  };
  CHECK(err_of([&] { parse("# nothing\n"); }) == "line 1: empty sequence file");
  CHECK(err_of([&] { parse("include 1 0\ninclude 1\n"); }) ==
        "line 2: include rows have inconsistent lengths");
  CHECK(err_of([&] { parse("include 1\ninclude 1\nproject 1\n"); }) ==
        "line 3: project row length does not match the include row count");
}

TEST_CASE("missing files raise parse errors") {
  CHECK_THROWS_AS(load_theory_file("/nonexistent/path.th"), ParseError);
}

TEST_CASE("element grammar round-trips") {
  AbelianAlgebra alg = AbelianAlgebra::from_theory(theory_from("torus 2\nweight 1 0\nweight 0 1\n"));
  AbelianElement x = parse_element("2*w1^2*E[1,-1] - 1/2*h + w2", 2);
  const std::string printed = element_to_string(x);
  CHECK(printed == "-1/2*h + w2 + 2*w1^2*E[1,-1]");
  CHECK(parse_element(printed, 2) == x);
  CHECK(element_to_string(alg.zero()) == "0");
  CHECK(element_to_string(alg.one()) == "1");
  CHECK(element_to_string(alg.e({-1, 3}) * Rational(-2)) == "-2*E[-1,3]");
}

TEST_CASE("element grammar rejects malformed input") {
  CHECK(err_of([] { parse_element("", 1); }) == "element: empty element at position 1");
  CHECK(err_of([] { parse_element("w0", 1); }) == "element: w index out of range at position 3");
  CHECK(err_of([] { parse_element("E[1]*E[1]", 1); }) ==
        "element: multiple E factors in one term at position 6");
  CHECK(err_of([] { parse_element("E[1,2]", 1); }) ==
        "element: E[...] has 2 entries, expected 1 at position 7");
  CHECK(err_of([] { parse_element("w1 + ?", 1); }) ==
        "element: unexpected character '?' at position 6");
  CHECK(err_of([] { parse_element("2 2", 1); }) ==
        "element: expected '+' or '-' between terms at position 3");
}

TEST_CASE("presentation rendering") {
  AbelianAlgebra alg = AbelianAlgebra::from_theory(theory_from("torus 1\nweight 2\n"));
  Presentation pres = alg.presentation();
  CHECK(presentation_to_string(pres) ==
        "generator w degree 2\n"
        "generator x degree 2 class [1]\n"
        "generator y degree 2 class [-1] scale 4\n"
        "relation x*y = w^2\n");
}

TEST_CASE("duality report rendering") {
  DualityReport rep;
  rep.order = 2;
  rep.coulomb_dims = {1, 0, 3};
  rep.higgs_dims = {1, 0, 3};
  CHECK(duality_report_to_string(rep) ==
        "t^0: coulomb=1 higgs=1\n"
        "t^1: coulomb=0 higgs=0\n"
        "t^2: coulomb=3 higgs=3\n"
        "MATCH through t^2\n");
  rep.match = false;
  rep.mismatch_degree = 2;
  rep.coulomb_coeff = 3;
  rep.higgs_coeff = 4;
  rep.higgs_dims[2] = 4;
  CHECK(duality_report_to_string(rep) ==
        "t^0: coulomb=1 higgs=1\n"
        "t^1: coulomb=0 higgs=0\n"
        "t^2: coulomb=3 higgs=4\n"
        "MISMATCH at t^2: coulomb=3 higgs=4\n");
}

}  // TEST_SUITE
