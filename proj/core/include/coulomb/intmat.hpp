#pragma once

#include <optional>
#include <vector>

#include "coulomb/rational.hpp"

namespace coulomb {

// Dense integer matrix, row-major.  Small dimensions throughout (lattice
// ranks and weight counts), so no sparsity or performance tricks.
struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> data;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  BigInt& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<std::vector<Int>>& rows_in, int cols_in);

  IntMat transposed() const;
  std::vector<BigInt> apply(const std::vector<BigInt>& x) const;  // A x
  bool is_zero() const;
};

IntMat operator*(const IntMat& a, const IntMat& b);

// U * A * V = S with U, V unimodular and S diagonal, diagonal entries
// nonnegative with d_i | d_{i+1}.
struct SmithResult {
  IntMat s;
  IntMat u, uinv;
  IntMat v, vinv;
  std::vector<BigInt> invariants;  // nonzero diagonal entries of s
  int rank() const { return static_cast<int>(invariants.size()); }
};

SmithResult smith_normal_form(IntMat a);

// Basis of the saturated lattice { x in Z^cols : A x = 0 }.
std::vector<std::vector<BigInt>> integer_kernel(const IntMat& a);

// Rank over Q.  Consumes its argument.
int rational_rank(std::vector<std::vector<Rational>> rows);

// Exact solution t of (columns) * t = x, if one exists.  Requires the
// columns to be linearly independent; the solution is then unique.
std::optional<std::vector<Rational>> solve_independent_columns(
    const std::vector<std::vector<BigInt>>& cols, const std::vector<BigInt>& x);

// Inverse of a square matrix given by rows, if invertible.
std::optional<std::vector<std::vector<Rational>>> rational_inverse(
    const std::vector<std::vector<Int>>& rows);

std::vector<Int> to_int_vector(const std::vector<BigInt>& v);

}  // namespace coulomb
