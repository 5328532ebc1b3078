#include "coulomb/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace coulomb {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows_in, int cols_in) {
  IntMat m(static_cast<int>(rows_in.size()), cols_in);
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows_in[r].size()) != cols_in) {
      throw std::invalid_argument("row length mismatch");
    }
    for (int c = 0; c < cols_in; ++c) m.at(r, c) = rows_in[r][c];
  }
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<BigInt> IntMat::apply(const std::vector<BigInt>& x) const {
  std::vector<BigInt> y(rows);
  for (int r = 0; r < rows; ++r) {
    BigInt acc = 0;
    for (int c = 0; c < cols; ++c) acc += at(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

bool IntMat::is_zero() const {
  for (const auto& v : data)
    if (v != 0) return false;
  return true;
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

namespace {

struct SnfWork {
  IntMat s, u, uinv, v, vinv;

  void row_sub(int i, int j, const BigInt& q) {  // row i -= q * row j
    for (int c = 0; c < s.cols; ++c) s.at(i, c) -= q * s.at(j, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, j) += q * uinv.at(r, i);
  }
  void row_swap(int i, int j) {
    for (int c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void row_negate(int i) {
    for (int c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < uinv.rows; ++r) uinv.at(r, i) = -uinv.at(r, i);
  }
  void col_sub(int i, int j, const BigInt& q) {  // col i -= q * col j
    for (int r = 0; r < s.rows; ++r) s.at(r, i) -= q * s.at(r, j);
    for (int r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
    for (int c = 0; c < vinv.cols; ++c) vinv.at(j, c) += q * vinv.at(i, c);
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  void col_negate(int i) {
    for (int r = 0; r < s.rows; ++r) s.at(r, i) = -s.at(r, i);
    for (int r = 0; r < v.rows; ++r) v.at(r, i) = -v.at(r, i);
    for (int c = 0; c < vinv.cols; ++c) vinv.at(i, c) = -vinv.at(i, c);
  }
};

}  // namespace

SmithResult smith_normal_form(IntMat a) {
  SnfWork w;
  const int rows = a.rows, cols = a.cols;
  w.s = std::move(a);
  w.u = IntMat::identity(rows);
  w.uinv = IntMat::identity(rows);
  w.v = IntMat::identity(cols);
  w.vinv = IntMat::identity(cols);

  int t = 0;
  const int tmax = std::min(rows, cols);
  while (t < tmax) {
    // Pivot: smallest-magnitude nonzero entry of the trailing submatrix.
    int pr = -1, pc = -1;
    BigInt best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        const BigInt& e = w.s.at(r, c);
        if (e == 0) continue;
        BigInt m = abs(e);
        if (pr < 0 || m < best) {
          best = m;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // trailing submatrix is zero
    if (pr != t) w.row_swap(pr, t);
    if (pc != t) w.col_swap(pc, t);
    if (w.s.at(t, t) < 0) w.row_negate(t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < rows; ++r) {
        if (w.s.at(r, t) == 0) continue;
        BigInt q = w.s.at(r, t) / w.s.at(t, t);
        w.row_sub(r, t, q);
        if (w.s.at(r, t) != 0) {
          // Remainder is smaller than the pivot; promote it.
          w.row_swap(r, t);
          if (w.s.at(t, t) < 0) w.row_negate(t);
          clean = false;
        }
      }
      for (int c = t + 1; c < cols; ++c) {
        if (w.s.at(t, c) == 0) continue;
        BigInt q = w.s.at(t, c) / w.s.at(t, t);
        w.col_sub(c, t, q);
        if (w.s.at(t, c) != 0) {
          w.col_swap(c, t);
          if (w.s.at(t, t) < 0) w.col_negate(t);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility sweep: the pivot must divide every trailing entry.
        for (int r = t + 1; r < rows && clean; ++r)
          for (int c = t + 1; c < cols && clean; ++c) {
            if (w.s.at(r, c) % w.s.at(t, t) != 0) {
              w.row_sub(t, r, BigInt(-1));  // pull the offending row in
              clean = false;
            }
          }
      }
    }
    ++t;
  }

  SmithResult res;
  res.s = std::move(w.s);
  res.u = std::move(w.u);
  res.uinv = std::move(w.uinv);
  res.v = std::move(w.v);
  res.vinv = std::move(w.vinv);
  for (int i = 0; i < tmax; ++i) {
    if (res.s.at(i, i) != 0) res.invariants.push_back(res.s.at(i, i));
  }
  return res;
}

std::vector<std::vector<BigInt>> integer_kernel(const IntMat& a) {
  SmithResult snf = smith_normal_form(a);
  std::vector<std::vector<BigInt>> basis;
  for (int j = snf.rank(); j < a.cols; ++j) {
    std::vector<BigInt> col(a.cols);
    for (int i = 0; i < a.cols; ++i) col[i] = snf.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t lead = 0; lead < cols && rank < rows.size(); ++lead) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][lead] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][lead] == 0) continue;
      Rational f = rows[i][lead] / rows[rank][lead];
      for (std::size_t c = lead; c < cols; ++c) rows[i][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::optional<std::vector<Rational>> solve_independent_columns(
    const std::vector<std::vector<BigInt>>& cols, const std::vector<BigInt>& x) {
  const std::size_t n = cols.size();
  if (n == 0) {
    for (const auto& e : x)
      if (e != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  const std::size_t dim = cols[0].size();
  // Augmented system [cols | x], eliminate over Q.
  std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = Rational(cols[c][r]);
    m[r][n] = Rational(x[r]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = row;
    while (piv < dim && m[piv][c] == 0) ++piv;
    if (piv == dim) return std::nullopt;  // columns were not independent
    std::swap(m[row], m[piv]);
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[row][c];
      for (std::size_t k = c; k <= n; ++k) m[i][k] -= f * m[row][k];
    }
    pivot_row[c] = row;
    ++row;
  }
  // Consistency: rows without pivots must have zero rhs.
  for (std::size_t r = row; r < dim; ++r) {
    if (m[r][n] != 0) return std::nullopt;
  }
  std::vector<Rational> t(n);
  for (std::size_t c = 0; c < n; ++c) t[c] = m[pivot_row[c]][n] / m[pivot_row[c]][c];
  return t;
}

std::optional<std::vector<std::vector<Rational>>> rational_inverse(
    const std::vector<std::vector<Int>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = Rational(rows[r][c]);
    m[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[c], m[piv]);
    Rational d = m[c][c];
    for (std::size_t k = 0; k < 2 * n; ++k) m[c][k] /= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < 2 * n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = m[r][n + c];
  return inv;
}

std::vector<Int> to_int_vector(const std::vector<BigInt>& v) {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<Int>(v[i]);
  return out;
}

}  // namespace coulomb
