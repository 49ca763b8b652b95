#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sutured/abelian.hpp"
#include "sutured/diagram.hpp"
#include "sutured/fox.hpp"

namespace testing {

using sutured::FinAbGroup;
using sutured::GroupElement;
using sutured::GroupRingElem;
using sutured::GroupRingMatrix;
using sutured::IntMatrix;
using sutured::Integer;
using sutured::Rational;

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64 gen;
};

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
  return m;
}

inline GroupElement random_element(Rng& rng, const FinAbGroup& g, long range) {
  GroupElement e;
  for (std::size_t i = 0; i < g.free_rank(); ++i) e.free_part.push_back(rng.uniform(-range, range));
  for (const auto& d : g.torsion()) e.torsion_part.push_back(rng.uniform(0, d.get_si() - 1));
  return e;
}

inline GroupRingElem random_ring_element(Rng& rng, const FinAbGroup& g, int max_terms, long range,
                                         long coeff = 3) {
  GroupRingElem x;
  const int terms = static_cast<int>(rng.uniform(0, max_terms));
  for (int t = 0; t < terms; ++t) {
    long c = rng.uniform(-coeff, coeff);
    x.add_term(random_element(rng, g, range), c);
  }
  return x;
}

inline GroupRingMatrix random_ring_matrix(Rng& rng, const FinAbGroup& g, std::size_t n,
                                          int max_terms = 3) {
  GroupRingMatrix m(n, std::vector<GroupRingElem>(n));
  for (auto& row : m)
    for (auto& x : row) x = random_ring_element(rng, g, max_terms, 2);
  return m;
}

// Full permutation-sum determinant.
inline GroupRingElem leibniz_det(const GroupRingMatrix& m, const FinAbGroup& g) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  GroupRingElem total;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    GroupRingElem term = GroupRingElem::one(g);
    for (std::size_t i = 0; i < n; ++i) term = sutured::ring_mul(term, m[i][perm[i]], g);
    total += Integer(sign) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline sutured::fox::FreeWord random_word(Rng& rng, std::size_t generators, std::size_t max_len) {
  std::vector<sutured::fox::Letter> letters;
  const std::size_t len = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_len)));
  for (std::size_t i = 0; i < len; ++i)
    letters.push_back({static_cast<std::size_t>(rng.uniform(0, static_cast<long>(generators) - 1)),
                       rng.coin() ? 1 : -1});
  return sutured::fox::FreeWord(letters);
}

// Every nonzero integer combination with coefficients in [-bound, bound].
inline bool brute_force_has_nonnegative(const IntMatrix& basis, long bound) {
  const std::size_t k = basis.cols();
  if (k == 0) return false;
  std::vector<long> c(k, -bound);
  while (true) {
    bool nonzero_coeff = std::any_of(c.begin(), c.end(), [](long x) { return x != 0; });
    if (nonzero_coeff) {
      bool nonneg = true, nonzero = false;
      for (std::size_t r = 0; r < basis.rows() && nonneg; ++r) {
        Integer s = 0;
        for (std::size_t j = 0; j < k; ++j) s += basis(r, j) * c[j];
        if (s < 0) nonneg = false;
        if (s != 0) nonzero = true;
      }
      if (nonneg && nonzero) return true;
    }
    std::size_t i = 0;
    while (i < k && c[i] == bound) c[i++] = -bound;
    if (i == k) return false;
    ++c[i];
  }
}

// Exact phase-one simplex: is there x >= 0 with a x = b?
inline bool feasible_nonnegative(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t m = a.size();
  if (m == 0) return true;
  const std::size_t n = a.front().size();
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  // Tableau with artificial variables n..n+m-1.
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols] = b[i];
    basis[i] = n + i;
  }
  while (true) {
    // Reduced costs of minimizing the sum of artificials.
    std::vector<Rational> cost(cols + 1);
    for (std::size_t j = n; j < cols; ++j) cost[j] = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] >= n)
        for (std::size_t j = 0; j <= cols; ++j) cost[j] -= t[i][j];
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (cost[j] < 0) {
        enter = j;  // Bland: smallest index
        break;
      }
    if (enter == cols) return cost[cols] == 0;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i)
      if (t[i][enter] > 0) {
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
    if (leave == m) return false;  // cannot happen for phase one
    const Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
}

// p is a vertex of conv(points) iff it is not a convex combination of the
// other points.
inline bool is_vertex_by_lp(const std::vector<std::vector<Integer>>& points, std::size_t p) {
  const std::size_t r = points[p].size();
  std::vector<std::vector<Rational>> a(r + 1);
  std::vector<Rational> b(r + 1);
  for (std::size_t q = 0; q < points.size(); ++q) {
    if (q == p) continue;
    for (std::size_t k = 0; k < r; ++k) a[k].push_back(Rational(points[q][k]));
    a[r].push_back(1);
  }
  for (std::size_t k = 0; k < r; ++k) b[k] = Rational(points[p][k]);
  b[r] = 1;
  if (a[r].empty()) return true;
  return !feasible_nonnegative(a, b);
}

// Sphere with nested, concentric circles: a random interleaving of alpha and
// beta curves (no crossings) with the boundary circles spread over the
// annular regions between them.
inline sutured::diagram::SuturedDiagram random_nested_diagram(Rng& rng, int alphas, int betas,
                                                              int extra_holes) {
  using namespace sutured::diagram;
  SuturedDiagram d;
  d.name = "nested";
  d.genus = 0;
  std::vector<CurveKind> order;
  for (int i = 0; i < alphas; ++i) order.push_back(CurveKind::Alpha);
  for (int i = 0; i < betas; ++i) order.push_back(CurveKind::Beta);
  std::shuffle(order.begin(), order.end(), rng.gen);
  d.alpha.assign(static_cast<std::size_t>(alphas), {});
  d.beta.assign(static_cast<std::size_t>(betas), {});
  // Curve c separates region c (inside) from region c+1 (outside); regions
  // are traversed with the curve once on each side.
  const std::size_t curves = order.size();
  d.regions.assign(curves + 1, Region{});
  std::size_t next_alpha = 0, next_beta = 0;
  for (std::size_t c = 0; c < curves; ++c) {
    const std::size_t idx = order[c] == CurveKind::Alpha ? next_alpha++ : next_beta++;
    d.regions[c].cycles.push_back({ArcRef{order[c], idx, 0, 1}});
    d.regions[c + 1].cycles.push_back({ArcRef{order[c], idx, 0, -1}});
  }
  int holes = 0;
  // The innermost and outermost regions are disks and need a hole each,
  // otherwise a closed component appears.
  d.regions.front().boundary_circles = 1;
  ++holes;
  if (curves > 0) {
    d.regions.back().boundary_circles = 1;
    ++holes;
  }
  for (int h = 0; h < extra_holes; ++h) {
    d.regions[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(curves)))].boundary_circles++;
    ++holes;
  }
  d.boundary_circles = holes;
  return d;
}

}  // namespace testing
