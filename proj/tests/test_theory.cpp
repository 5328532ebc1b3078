#include "doctest.h"

#include <string>

#include "coulomb/errors.hpp"
#include "coulomb/theory.hpp"

using namespace coulomb;

TEST_SUITE("theory") {

TEST_CASE("gl(1) factors fold into the torus") {
  GaugeTheory raw;
  raw.gl_factors = {1, 2};
  raw.torus_rank = 1;
  raw.weights = {{5, 6, 7, 8}};
  GaugeTheory th = validate_theory(raw);
  REQUIRE(th.gl_factors == std::vector<int>{2});
  CHECK(th.torus_rank == 2);
  CHECK(th.total_rank() == 4);
  // New coordinate order: the gl(2) block, then the folded gl(1), then the
  // declared torus.
  REQUIRE(th.weights.size() == 1);
  CHECK(th.weights[0] == std::vector<Int>{6, 7, 5, 8});
}

TEST_CASE("weights are sorted into a canonical order") {
  GaugeTheory raw;
  raw.torus_rank = 1;
  raw.weights = {{2}, {-1}, {0}};
  GaugeTheory th = validate_theory(raw);
  CHECK(th.weights == std::vector<std::vector<Int>>{{-1}, {0}, {2}});
}

TEST_CASE("validation rejects malformed data") {
  GaugeTheory bad;
  bad.gl_factors = {0};
  CHECK_THROWS_AS(validate_theory(bad), DomainError);
  GaugeTheory wrong;
  wrong.torus_rank = 2;
  wrong.weights = {{1}};
  CHECK_THROWS_WITH_AS(validate_theory(wrong),
                       "weight vector length 1 does not match total rank 2", DomainError);
}

TEST_CASE("dominance and fundamental group class") {
  GaugeTheory th;
  th.gl_factors = {2};
  th.torus_rank = 1;
  th = validate_theory(th);
  CHECK(is_dominant(th, {3, 1, -5}));
  CHECK(is_dominant(th, {2, 2, 0}));
  CHECK_FALSE(is_dominant(th, {1, 2, 0}));
  CHECK(th.pi1_rank() == 2);
  CHECK(pi1_class(th, {3, 1, -5}) == std::vector<Int>{4, -5});
}

TEST_CASE("quiver with a loop") {
  QuiverSpec q;
  q.vertices.push_back({"A", 1, 1});
  q.edges.emplace_back(0, 0);
  GaugeTheory th = from_quiver(q);
  CHECK(th.gl_factors.empty());
  CHECK(th.torus_rank == 1);
  CHECK(th.weights == std::vector<std::vector<Int>>{{0}, {1}});
}

TEST_CASE("two-node quiver") {
  QuiverSpec q;
  q.vertices.push_back({"A", 1, 1});
  q.vertices.push_back({"B", 1, 1});
  q.edges.emplace_back(0, 1);
  GaugeTheory th = from_quiver(q);
  CHECK(th.torus_rank == 2);
  CHECK(th.weights == std::vector<std::vector<Int>>{{-1, 1}, {0, 1}, {1, 0}});
}

TEST_CASE("quiver drops unframed empty vertices and rejects a trivial gauge group") {
  QuiverSpec q;
  q.vertices.push_back({"A", 2, 1});
  q.vertices.push_back({"B", 0, 3});
  q.edges.emplace_back(0, 1);
  GaugeTheory th = from_quiver(q);
  CHECK(th.gl_factors == std::vector<int>{2});
  CHECK(th.total_rank() == 2);
  // The B vertex has no gauge coordinates; the edge contributes nothing.
  CHECK(th.weights.size() == 2);

  QuiverSpec empty;
  empty.vertices.push_back({"A", 0, 2});
  CHECK_THROWS_AS(from_quiver(empty), DomainError);
}

TEST_CASE("sequence validation") {
  TorusSequence s;
  s.inclusion = IntMat::from_rows({{1}, {1}}, 1);
  s.projection = IntMat::from_rows({{1, -1}}, 2);
  validate_sequence(s);

  TorusSequence torsion;
  torsion.inclusion = IntMat::from_rows({{2}}, 1);
  torsion.projection = IntMat(0, 1);
  CHECK_THROWS_WITH_AS(validate_sequence(torsion),
                       "inclusion: cokernel has torsion (invariant factor 2)", DomainError);

  TorusSequence skew;
  skew.inclusion = IntMat::from_rows({{1}, {1}}, 1);
  skew.projection = IntMat::from_rows({{1, 1}}, 2);
  CHECK_THROWS_WITH_AS(validate_sequence(skew), "projection * inclusion is nonzero", DomainError);

  TorusSequence shortrank;
  shortrank.inclusion = IntMat::from_rows({{1}, {0}}, 1);
  shortrank.projection = IntMat(0, 2);
  CHECK_THROWS_AS(validate_sequence(shortrank), DomainError);
}

TEST_CASE("torus duality swaps and transposes the maps") {
  TorusSequence s;
  s.inclusion = IntMat::from_rows({{1}, {1}}, 1);
  s.projection = IntMat::from_rows({{1, -1}}, 2);
  TorusSequence d = dualize_torus(s);
  CHECK(d.inclusion.rows == 2);
  CHECK(d.inclusion.cols == 1);
  CHECK(d.inclusion.at(0, 0) == 1);
  CHECK(d.inclusion.at(1, 0) == -1);
  CHECK(d.projection.rows == 1);
  CHECK(d.projection.at(0, 0) == 1);
  CHECK(d.projection.at(0, 1) == 1);
  TorusSequence dd = dualize_torus(d);
  CHECK(dd.inclusion.data == s.inclusion.data);
  CHECK(dd.projection.data == s.projection.data);
}

TEST_CASE("restriction to a subtorus") {
  TorusSequence s;
  s.inclusion = IntMat::from_rows({{1}, {1}}, 1);
  s.projection = IntMat::from_rows({{1, -1}}, 2);
  GaugeTheory th = restrict_to_subtorus(s);
  CHECK(th.torus_rank == 1);
  CHECK(th.weights == std::vector<std::vector<Int>>{{1}, {1}});

  // Explicit ambient weights override the standard basis.
  GaugeTheory th2 = restrict_to_subtorus(s, {{1, 0}, {1, 2}, {0, 1}});
  CHECK(th2.weights == std::vector<std::vector<Int>>{{1}, {1}, {3}});
}

}  // TEST_SUITE
