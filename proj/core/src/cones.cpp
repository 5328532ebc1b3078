#include "coulomb/cones.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "coulomb/intmat.hpp"

namespace coulomb {

BigInt dot(const Vec& a, const Vec& b) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Vec primitive(Vec v) {
  BigInt g = 0;
  for (const BigInt& e : v) g = boost::multiprecision::gcd(g, e);
  if (g > 1) {
    for (BigInt& e : v) e /= g;
  }
  return v;
}

Vec to_bigvec(const std::vector<Int>& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

bool in_cone(const std::vector<Vec>& inequalities, const Vec& x) {
  for (const Vec& a : inequalities) {
    if (dot(a, x) < 0) return false;
  }
  return true;
}

namespace {

struct DDRay {
  Vec v;
  std::vector<char> tight;  // tight[i] = 1 iff constraint i holds with equality
};

// Recompute tight flags geometrically; keeps the adjacency test exact even
// through the lineality-elimination steps.
void refresh_tight(std::vector<DDRay>& rays, const std::vector<Vec>& processed) {
  for (DDRay& r : rays) {
    r.tight.assign(processed.size(), 0);
    for (std::size_t i = 0; i < processed.size(); ++i) {
      if (dot(processed[i], r.v) == 0) r.tight[i] = 1;
    }
  }
}

bool subset_tight(const std::vector<char>& small, const std::vector<char>& big) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] && !big[i]) return false;
  }
  return true;
}

}  // namespace

ConeGenerators dual_description(const std::vector<Vec>& inequalities, int dim) {
  std::vector<Vec> lineality;
  for (int i = 0; i < dim; ++i) {
    Vec e(dim, 0);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<DDRay> rays;
  std::vector<Vec> processed;

  for (const Vec& a : inequalities) {
    // Case 1: the constraint cuts the lineality space.
    int cut = -1;
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      if (dot(a, lineality[i]) != 0) {
        cut = static_cast<int>(i);
        break;
      }
    }
    if (cut >= 0) {
      Vec u = lineality[cut];
      if (dot(a, u) < 0) {
        for (BigInt& e : u) e = -e;
      }
      BigInt au = dot(a, u);
      std::vector<Vec> new_lin;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (static_cast<int>(i) == cut) continue;
        BigInt av = dot(a, lineality[i]);
        Vec w(dim);
        for (int c = 0; c < dim; ++c) w[c] = au * lineality[i][c] - av * u[c];
        new_lin.push_back(primitive(std::move(w)));
      }
      lineality = std::move(new_lin);
      // Project existing rays into {a = 0} along u; u joins as a new ray.
      // Earlier constraints vanish on u (it was lineality), so projection
      // preserves them.
      std::set<Vec> seen;
      std::vector<DDRay> new_rays;
      for (DDRay& r : rays) {
        BigInt ar = dot(a, r.v);
        Vec w(dim);
        for (int c = 0; c < dim; ++c) w[c] = au * r.v[c] - ar * u[c];
        w = primitive(std::move(w));
        bool zero = std::all_of(w.begin(), w.end(), [](const BigInt& e) { return e == 0; });
        if (!zero && seen.insert(w).second) new_rays.push_back(DDRay{std::move(w), {}});
      }
      if (seen.insert(u).second) new_rays.push_back(DDRay{std::move(u), {}});
      rays = std::move(new_rays);
      processed.push_back(a);
      refresh_tight(rays, processed);
      continue;
    }

    // Case 2: constraint vanishes on the lineality space; split the rays.
    std::vector<std::size_t> plus, minus, zero;
    std::vector<BigInt> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) {
        plus.push_back(i);
      } else if (val[i] < 0) {
        minus.push_back(i);
      } else {
        zero.push_back(i);
      }
    }
    if (minus.empty()) {  // constraint already satisfied everywhere
      processed.push_back(a);
      refresh_tight(rays, processed);
      continue;
    }

    std::vector<DDRay> new_rays;
    std::set<Vec> seen;
    for (std::size_t i : plus) {
      if (seen.insert(rays[i].v).second) new_rays.push_back(rays[i]);
    }
    for (std::size_t i : zero) {
      if (seen.insert(rays[i].v).second) new_rays.push_back(rays[i]);
    }
    for (std::size_t p : plus) {
      for (std::size_t n : minus) {
        // Fukuda adjacency: no third ray's tight set contains the common
        // tight set of the pair.
        std::vector<char> common(processed.size());
        for (std::size_t i = 0; i < processed.size(); ++i) {
          common[i] = rays[p].tight[i] && rays[n].tight[i];
        }
        bool adjacent = true;
        for (std::size_t s = 0; s < rays.size(); ++s) {
          if (s == p || s == n) continue;
          if (subset_tight(common, rays[s].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Vec w(dim);
        for (int c = 0; c < dim; ++c) w[c] = val[p] * rays[n].v[c] - val[n] * rays[p].v[c];
        w = primitive(std::move(w));
        if (seen.insert(w).second) new_rays.push_back(DDRay{std::move(w), {}});
      }
    }
    rays = std::move(new_rays);
    processed.push_back(a);
    refresh_tight(rays, processed);
  }

  ConeGenerators out;
  for (DDRay& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end());
  out.lineality = std::move(lineality);
  return out;
}

namespace {

// Enumerates subsets of linearly independent rays and collects the lattice
// points of each fundamental parallelepiped { Σ t_i g_i : 0 <= t_i <= 1 }.
// Carathéodory puts every Hilbert-basis element inside one of these.
void collect_candidates(const std::vector<Vec>& rays, int dim, std::size_t next,
                        std::vector<std::size_t>& chosen, std::set<Vec>& out) {
  if (!chosen.empty()) {
    std::vector<std::vector<BigInt>> cols;
    for (std::size_t i : chosen) cols.push_back(rays[i]);
    std::vector<Int> lo(dim, 0), hi(dim, 0);
    for (int c = 0; c < dim; ++c) {
      BigInt l = 0, h = 0;
      for (std::size_t i : chosen) {
        const BigInt& e = rays[i][c];
        if (e < 0) l += e;
        if (e > 0) h += e;
      }
      lo[c] = static_cast<Int>(l);
      hi[c] = static_cast<Int>(h);
    }
    std::vector<Int> x(lo);
    while (true) {
      Vec xb(dim);
      for (int c = 0; c < dim; ++c) xb[c] = x[c];
      auto t = solve_independent_columns(cols, xb);
      if (t) {
        bool inside = std::all_of(t->begin(), t->end(), [](const Rational& q) {
          return q >= 0 && q <= 1;
        });
        if (inside) out.insert(xb);
      }
      int c = 0;
      while (c < dim && x[c] == hi[c]) {
        x[c] = lo[c];
        ++c;
      }
      if (c == dim) break;
      ++x[c];
    }
  }
  // Extend the subset, keeping it independent.
  for (std::size_t i = next; i < rays.size(); ++i) {
    if (static_cast<int>(chosen.size()) >= dim) break;
    std::vector<std::vector<Rational>> check;
    for (std::size_t j : chosen) {
      std::vector<Rational> row(dim);
      for (int c = 0; c < dim; ++c) row[c] = Rational(rays[j][c]);
      check.push_back(std::move(row));
    }
    std::vector<Rational> row(dim);
    for (int c = 0; c < dim; ++c) row[c] = Rational(rays[i][c]);
    check.push_back(std::move(row));
    if (rational_rank(std::move(check)) != static_cast<int>(chosen.size()) + 1) continue;
    chosen.push_back(i);
    collect_candidates(rays, dim, i + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Vec> hilbert_basis_pointed(const std::vector<Vec>& rays,
                                       const std::vector<Vec>& inequalities, int dim) {
  if (rays.empty()) return {};

  std::set<Vec> candidates;
  std::vector<std::size_t> chosen;
  collect_candidates(rays, dim, 0, chosen, candidates);
  candidates.erase(Vec(dim, 0));

  // Grading functional: the sum of the inequality normals is strictly
  // positive on the pointed cone minus the origin.
  Vec phi(dim, 0);
  for (const Vec& a : inequalities) {
    for (int c = 0; c < dim; ++c) phi[c] += a[c];
  }
  for (const Vec& x : candidates) {
    if (dot(phi, x) <= 0) {
      throw std::logic_error("hilbert_basis_pointed: cone is not pointed");
    }
  }

  std::vector<Vec> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end(), [&](const Vec& a, const Vec& b) {
    BigInt pa = dot(phi, a), pb = dot(phi, b);
    if (pa != pb) return pa < pb;
    return a < b;
  });

  std::vector<Vec> basis;
  for (const Vec& x : order) {
    bool reducible = false;
    for (const Vec& h : basis) {
      Vec diff(dim);
      for (int c = 0; c < dim; ++c) diff[c] = x[c] - h[c];
      if (in_cone(inequalities, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::vector<Vec> hyperplane_normals(const std::vector<std::vector<Int>>& weights) {
  std::set<Vec> seen;
  for (const auto& w : weights) {
    Vec v = primitive(to_bigvec(w));
    bool zero = true;
    for (const BigInt& e : v) {
      if (e != 0) {
        zero = false;
        break;
      }
    }
    if (zero) continue;
    for (const BigInt& e : v) {
      if (e != 0) {
        if (e < 0) {
          for (BigInt& x : v) x = -x;
        }
        break;
      }
    }
    seen.insert(std::move(v));
  }
  return std::vector<Vec>(seen.begin(), seen.end());
}

}  // namespace coulomb
