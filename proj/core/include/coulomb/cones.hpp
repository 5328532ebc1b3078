#pragma once

#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

using Vec = std::vector<BigInt>;

BigInt dot(const Vec& a, const Vec& b);
Vec primitive(Vec v);  // divide by gcd of entries; zero stays zero
Vec to_bigvec(const std::vector<Int>& v);

// Generator description of {x in R^dim : a·x >= 0 for all inequalities}.
// rays are primitive and extreme modulo the lineality space; lineality is a
// spanning set (not necessarily a lattice basis) of the contained subspace.
struct ConeGenerators {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
  bool pointed() const { return lineality.empty(); }
};

// Double description with incremental constraint insertion.  An empty
// inequality list yields all of R^dim.
ConeGenerators dual_description(const std::vector<Vec>& inequalities, int dim);

// Membership in {x : A x >= 0}.
bool in_cone(const std::vector<Vec>& inequalities, const Vec& x);

// Hilbert basis of C ∩ Z^dim for a pointed cone C = {x : A x >= 0} with the
// given extreme rays.  Returns the unique minimal generating set of the
// monoid, sorted lexicographically.
std::vector<Vec> hilbert_basis_pointed(const std::vector<Vec>& rays,
                                       const std::vector<Vec>& inequalities, int dim);

// Distinct weight hyperplane normals up to sign and scale; zero weights are
// dropped.  Normals are primitive with first nonzero entry positive, sorted.
std::vector<Vec> hyperplane_normals(const std::vector<std::vector<Int>>& weights);

}  // namespace coulomb
