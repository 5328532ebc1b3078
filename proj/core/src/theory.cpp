#include "coulomb/theory.hpp"

#include <algorithm>

#include "coulomb/errors.hpp"

namespace coulomb {

int GaugeTheory::total_rank() const {
  int r = torus_rank;
  for (int n : gl_factors) r += n;
  return r;
}

int GaugeTheory::block_start(int b) const {
  int s = 0;
  for (int i = 0; i < b; ++i) s += gl_factors[i];
  return s;
}

int GaugeTheory::torus_start() const { return block_start(num_gl()); }

GaugeTheory validate_theory(GaugeTheory raw) {
  for (int n : raw.gl_factors) {
    if (n <= 0) throw DomainError("nonpositive gl rank " + std::to_string(n));
  }
  if (raw.torus_rank < 0) throw DomainError("negative torus rank");

  const int rank = raw.total_rank();
  for (const auto& w : raw.weights) {
    if (static_cast<int>(w.size()) != rank) {
      throw DomainError("weight vector length " + std::to_string(w.size()) +
                        " does not match total rank " + std::to_string(rank));
    }
  }

  // GL(1) = ℂ^×: fold rank-1 blocks into the torus.  The coordinate layout
  // moves those coordinates in front of the declared torus block, keeping
  // their relative order; weight entries are permuted to match.
  bool has_gl1 = std::any_of(raw.gl_factors.begin(), raw.gl_factors.end(),
                             [](int n) { return n == 1; });
  if (has_gl1) {
    std::vector<int> perm;  // perm[new coordinate] = old coordinate
    perm.reserve(rank);
    int old_pos = 0;
    std::vector<int> gl1_coords;
    std::vector<int> kept;
    for (int n : raw.gl_factors) {
      if (n == 1) {
        gl1_coords.push_back(old_pos);
      } else {
        kept.push_back(n);
        for (int i = 0; i < n; ++i) perm.push_back(old_pos + i);
      }
      old_pos += n;
    }
    for (int c : gl1_coords) perm.push_back(c);
    for (int i = 0; i < raw.torus_rank; ++i) perm.push_back(old_pos + i);

    std::vector<std::vector<Int>> new_weights;
    new_weights.reserve(raw.weights.size());
    for (const auto& w : raw.weights) {
      std::vector<Int> nw(rank);
      for (int i = 0; i < rank; ++i) nw[i] = w[perm[i]];
      new_weights.push_back(std::move(nw));
    }
    raw.gl_factors = std::move(kept);
    raw.torus_rank += static_cast<int>(gl1_coords.size());
    raw.weights = std::move(new_weights);
  }

  std::sort(raw.weights.begin(), raw.weights.end());
  return raw;
}

bool is_dominant(const GaugeTheory& th, const Coweight& m) {
  if (static_cast<int>(m.size()) != th.total_rank()) return false;
  for (int b = 0; b < th.num_gl(); ++b) {
    int s = th.block_start(b);
    for (int i = 1; i < th.gl_factors[b]; ++i) {
      if (m[s + i - 1] < m[s + i]) return false;
    }
  }
  return true;
}

std::vector<Int> pi1_class(const GaugeTheory& th, const Coweight& m) {
  std::vector<Int> cls;
  cls.reserve(th.pi1_rank());
  for (int b = 0; b < th.num_gl(); ++b) {
    int s = th.block_start(b);
    Int sum = 0;
    for (int i = 0; i < th.gl_factors[b]; ++i) sum += m[s + i];
    cls.push_back(sum);
  }
  for (int i = th.torus_start(); i < th.total_rank(); ++i) cls.push_back(m[i]);
  return cls;
}

GaugeTheory from_quiver(const QuiverSpec& q) {
  const int nv = static_cast<int>(q.vertices.size());
  for (const auto& v : q.vertices) {
    if (v.dim_v < 0 || v.dim_w < 0) throw DomainError("negative dimension at vertex " + v.name);
  }
  for (const auto& [a, b] : q.edges) {
    if (a < 0 || a >= nv || b < 0 || b >= nv) throw DomainError("edge endpoint out of range");
  }
  bool any_gauge = std::any_of(q.vertices.begin(), q.vertices.end(),
                               [](const QuiverVertex& v) { return v.dim_v > 0; });
  if (!any_gauge) throw DomainError("quiver has no vertex with V > 0: gauge group is trivial");

  // Coordinates: vertices with dimV > 0 in declaration order (dimV = 0
  // vertices carry no gauge coordinates and are dropped).
  GaugeTheory th;
  std::vector<int> coord_start(nv, -1);
  int pos = 0;
  for (int i = 0; i < nv; ++i) {
    if (q.vertices[i].dim_v == 0) continue;
    coord_start[i] = pos;
    th.gl_factors.push_back(q.vertices[i].dim_v);
    pos += q.vertices[i].dim_v;
  }
  const int rank = pos;

  auto unit = [&](int coord) {
    std::vector<Int> w(rank, 0);
    w[coord] = 1;
    return w;
  };

  // Edge h: Hom(V_out, V_in) has weights e_{in,a} − e_{out,b}.
  for (const auto& [out, in] : q.edges) {
    int dv_out = q.vertices[out].dim_v, dv_in = q.vertices[in].dim_v;
    for (int a = 0; a < dv_in; ++a) {
      for (int b = 0; b < dv_out; ++b) {
        std::vector<Int> w(rank, 0);
        w[coord_start[in] + a] += 1;
        w[coord_start[out] + b] -= 1;
        th.weights.push_back(std::move(w));
      }
    }
  }
  // Framing: Hom(W_i, V_i) gives dimW_i copies of each e_{i,a}.
  for (int i = 0; i < nv; ++i) {
    if (q.vertices[i].dim_v == 0) continue;
    for (int a = 0; a < q.vertices[i].dim_v; ++a) {
      for (int c = 0; c < q.vertices[i].dim_w; ++c) {
        th.weights.push_back(unit(coord_start[i] + a));
      }
    }
  }
  return validate_theory(std::move(th));
}

void validate_sequence(const TorusSequence& s) {
  const int d = s.inclusion.rows;
  const int k = s.inclusion.cols;   // rank of T
  const int n = s.projection.rows;  // rank of T_F
  if (s.projection.cols != d) {
    throw DomainError("projection has " + std::to_string(s.projection.cols) +
                      " columns but the ambient torus has rank " + std::to_string(d));
  }
  if (k + n != d) {
    throw DomainError("ranks do not sum: " + std::to_string(k) + " + " + std::to_string(n) +
                      " != " + std::to_string(d));
  }
  // projection ∘ inclusion = 0
  if (k > 0 && n > 0) {
    IntMat prod = s.projection * s.inclusion;
    if (!prod.is_zero()) throw DomainError("projection * inclusion is nonzero");
  }

  auto check_unit_factors = [](const IntMat& m, int expected_rank, const char* which) {
    SmithResult snf = smith_normal_form(m);
    if (snf.rank() != expected_rank) {
      throw DomainError(std::string(which) + " does not have full rank " +
                        std::to_string(expected_rank));
    }
    for (const BigInt& f : snf.invariants) {
      if (f != 1) {
        throw DomainError(std::string(which) + ": cokernel has torsion (invariant factor " +
                          to_string(f) + ")");
      }
    }
  };
  if (k > 0) check_unit_factors(s.inclusion, k, "inclusion");
  if (n > 0) check_unit_factors(s.projection, n, "projection");
  // With unit invariant factors on both sides and p·i = 0, rank counting
  // gives im(inclusion) = ker(projection) saturated: the sequence is exact.
}

TorusSequence dualize_torus(const TorusSequence& s) {
  validate_sequence(s);
  TorusSequence dual;
  dual.inclusion = s.projection.transposed();
  dual.projection = s.inclusion.transposed();
  return dual;
}

GaugeTheory restrict_to_subtorus(const TorusSequence& s,
                                 const std::vector<std::vector<Int>>& ambient_weights) {
  validate_sequence(s);
  const int d = s.inclusion.rows;
  const int k = s.inclusion.cols;

  std::vector<std::vector<Int>> ambient = ambient_weights;
  if (ambient.empty()) {
    ambient.resize(d, std::vector<Int>(d, 0));
    for (int i = 0; i < d; ++i) ambient[i][i] = 1;
  }

  GaugeTheory th;
  th.torus_rank = k;
  for (const auto& w : ambient) {
    if (static_cast<int>(w.size()) != d) {
      throw DomainError("ambient weight length " + std::to_string(w.size()) +
                        " does not match ambient rank " + std::to_string(d));
    }
    // wᵀ · inclusion
    std::vector<Int> restricted(k, 0);
    for (int c = 0; c < k; ++c) {
      BigInt acc = 0;
      for (int r = 0; r < d; ++r) acc += BigInt(w[r]) * s.inclusion.at(r, c);
      restricted[c] = static_cast<Int>(acc);
    }
    th.weights.push_back(std::move(restricted));
  }
  return validate_theory(std::move(th));
}

}  // namespace coulomb
