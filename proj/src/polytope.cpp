#include "sutured/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sutured/error.hpp"

namespace sutured::polytope {

namespace {

Rational dot(const IntVector& n, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) s += Rational(n[i]) * x[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Positive rational multiple of v with coprime integer entries.
IntVector primitive(const RationalVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  IntVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * Rational(den);
    out[i] = scaled.get_num();
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank_of(std::vector<RationalVector> rows, std::size_t cols) {
  return rref(rows, cols).size();
}

struct Ray {
  IntVector v;
  std::vector<bool> zero;  // tight constraints among the processed rows
};

// Extreme rays of {y : A y >= 0} for a pointed cone with full-rank A, by the
// double description method.
std::vector<IntVector> extreme_rays(const std::vector<IntVector>& a) {
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();

  // Initial simplicial cone from n independent rows.
  std::vector<std::size_t> basis;
  std::vector<RationalVector> echelon;
  for (std::size_t i = 0; i < m && basis.size() < n; ++i) {
    RationalVector row(a[i].begin(), a[i].end());
    std::vector<RationalVector> trial = echelon;
    trial.push_back(row);
    if (rank_of(trial, n) > echelon.size()) {
      echelon.push_back(row);
      basis.push_back(i);
    }
  }
  if (basis.size() != n) throw Error("InternalError", "hull: constraint matrix is not full rank");

  // Columns of the inverse of the basis rows.
  std::vector<RationalVector> aug(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) aug[i][k] = Rational(a[basis[i]][k]);
    aug[i][n + i] = 1;
  }
  rref(aug, 2 * n);
  std::vector<bool> processed(m, false);
  for (auto i : basis) processed[i] = true;
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = aug[k][n + j];
    Ray r{primitive(col), std::vector<bool>(m, false)};
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) r.zero[basis[i]] = true;
    rays.push_back(std::move(r));
  }

  for (std::size_t k = 0; k < m; ++k) {
    if (processed[k]) continue;
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      value[j] = dot(a[k], rays[j].v);
      if (value[j] > 0) pos.push_back(j);
      else if (value[j] < 0) neg.push_back(j);
    }
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (value[j] < 0) continue;
      Ray r = rays[j];
      if (value[j] == 0) r.zero[k] = true;
      next.push_back(std::move(r));
    }
    for (auto p : pos)
      for (auto q : neg) {
        std::vector<bool> common(m, false);
        std::size_t count = 0;
        for (std::size_t i = 0; i < m; ++i)
          if (rays[p].zero[i] && rays[q].zero[i]) {
            common[i] = true;
            ++count;
          }
        if (count + 2 < n) continue;
        bool adjacent = true;
        for (std::size_t j = 0; j < rays.size() && adjacent; ++j) {
          if (j == p || j == q) continue;
          bool contains = true;
          for (std::size_t i = 0; i < m && contains; ++i)
            if (common[i] && !rays[j].zero[i]) contains = false;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i)
          v[i] = value[p] * rays[q].v[i] - value[q] * rays[p].v[i];
        common[k] = true;
        next.push_back(Ray{primitive(std::move(v)), std::move(common)});
      }
    processed[k] = true;
    rays = std::move(next);
  }
  std::vector<IntVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

void check_dimension(std::size_t dimension) {
  if (dimension > kMaxDimension)
    throw Error("DimensionTooLarge", "hull supports dimension <= " +
                                         std::to_string(kMaxDimension) + ", got " +
                                         std::to_string(dimension));
}

void check_alpha(const SupportPolytope& p, const IntVector& alpha) {
  if (alpha.size() != p.dimension)
    throw Error("BadDimension", "class has length " + std::to_string(alpha.size()) +
                                    ", polytope dimension is " + std::to_string(p.dimension));
}

}  // namespace

bool SupportPolytope::contains(const RationalVector& x) const {
  if (x.size() != dimension || vertices.empty()) return false;
  for (const auto& f : facets)
    if (dot(f.normal, x) > f.offset) return false;
  for (const auto& e : equations)
    if (dot(e.normal, x) != e.offset) return false;
  return true;
}

SupportPolytope hull(std::size_t r, const std::vector<RationalVector>& input) {
  check_dimension(r);
  for (const auto& p : input)
    if (p.size() != r)
      throw Error("BadDimension", "point of length " + std::to_string(p.size()) +
                                      " in dimension " + std::to_string(r));
  SupportPolytope out;
  out.dimension = r;
  std::set<RationalVector> unique(input.begin(), input.end());
  std::vector<RationalVector> pts(unique.begin(), unique.end());
  if (pts.empty()) return out;

  // Affine span: directions in echelon form. Pivot coordinates biject with it.
  std::vector<RationalVector> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RationalVector d(r);
    for (std::size_t k = 0; k < r; ++k) d[k] = pts[i][k] - pts[0][k];
    dirs.push_back(std::move(d));
  }
  std::vector<std::size_t> coords = rref(dirs, r);
  const std::size_t d = coords.size();
  out.affine_dimension = static_cast<int>(d);

  std::vector<bool> is_pivot(r, false);
  for (auto c : coords) is_pivot[c] = true;
  for (std::size_t f = 0; f < r; ++f) {
    if (is_pivot[f]) continue;
    RationalVector n(r);
    n[f] = 1;
    for (std::size_t i = 0; i < d; ++i) n[coords[i]] = -dirs[i][f];
    IntVector normal = primitive(n);
    out.equations.push_back({normal, dot(normal, pts[0])});
  }

  if (d == 0) {
    out.vertices = pts;
    return out;
  }

  // Projected points; the cone {(a, b) : <a, p> + b >= 0} has one extreme
  // ray per facet.
  std::vector<RationalVector> proj;
  std::vector<IntVector> rows;
  for (const auto& p : pts) {
    RationalVector q(d + 1);
    for (std::size_t i = 0; i < d; ++i) q[i] = p[coords[i]];
    q[d] = 1;
    rows.push_back(primitive(q));
    q.pop_back();
    proj.push_back(std::move(q));
  }
  std::vector<std::pair<IntVector, Rational>> projected_facets;
  for (const auto& ray : extreme_rays(rows)) {
    IntVector a(ray.begin(), ray.begin() + static_cast<long>(d));
    Integer g = 0;
    for (const auto& x : a) g = gcd(g, x);
    if (g == 0) continue;
    IntVector normal(d);
    for (std::size_t i = 0; i < d; ++i) normal[i] = -a[i] / g;
    projected_facets.push_back({normal, Rational(ray[d], g)});
    projected_facets.back().second.canonicalize();
  }

  for (const auto& [normal, offset] : projected_facets) {
    IntVector lifted(r);
    for (std::size_t i = 0; i < d; ++i) lifted[coords[i]] = normal[i];
    out.facets.push_back({lifted, offset});
  }
  std::sort(out.facets.begin(), out.facets.end());

  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<RationalVector> tight;
    for (const auto& [normal, offset] : projected_facets)
      if (dot(normal, proj[i]) == offset) tight.emplace_back(normal.begin(), normal.end());
    if (tight.size() >= d && rank_of(tight, d) == d) out.vertices.push_back(pts[i]);
  }
  return out;
}

SupportPolytope hull(const SupportData& s) {
  check_dimension(s.dimension);
  std::vector<RationalVector> pts;
  for (const auto& p : s.points) pts.emplace_back(p.begin(), p.end());
  return hull(s.dimension, pts);
}

Rational support_function(const SupportPolytope& p, const IntVector& alpha) {
  check_alpha(p, alpha);
  if (p.empty()) throw Error("EmptyPolytope", "support function of the empty polytope");
  Rational best = -dot(alpha, p.vertices.front());
  for (const auto& v : p.vertices) best = std::max(best, Rational(-dot(alpha, v)));
  return best;
}

Face face(const SupportPolytope& p, const SupportData& s, const IntVector& alpha) {
  check_alpha(p, alpha);
  if (p.empty()) throw Error("EmptyPolytope", "face of the empty polytope");
  Face out;
  out.value = -support_function(p, alpha);
  std::vector<RationalVector> minimizers;
  for (const auto& v : p.vertices)
    if (dot(alpha, v) == out.value) minimizers.push_back(v);
  out.polytope = hull(p.dimension, minimizers);
  for (std::size_t i = 0; i < s.points.size(); ++i)
    if (Rational(dot(alpha, s.points[i])) == out.value) out.points.push_back(i);
  return out;
}

bool is_centrally_symmetric(const SupportPolytope& p) {
  if (p.empty()) return true;
  const std::size_t r = p.dimension;
  RationalVector centroid(r);
  for (const auto& v : p.vertices)
    for (std::size_t k = 0; k < r; ++k) centroid[k] += v[k];
  for (auto& c : centroid) c /= Rational(static_cast<long>(p.vertices.size()));
  std::set<RationalVector> verts(p.vertices.begin(), p.vertices.end());
  for (const auto& v : p.vertices) {
    RationalVector mirror(r);
    for (std::size_t k = 0; k < r; ++k) mirror[k] = 2 * centroid[k] - v[k];
    if (!verts.count(mirror)) return false;
  }
  return true;
}

SupportPolytope canonical_translate(const SupportPolytope& p) {
  if (p.empty()) return p;
  SupportPolytope out = p;
  const RationalVector origin = p.vertices.front();
  for (auto& v : out.vertices)
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= origin[k];
  for (auto& f : out.facets) f.offset -= dot(f.normal, origin);
  for (auto& e : out.equations) e.offset -= dot(e.normal, origin);
  return out;
}

bool equal_up_to_translation(const SupportPolytope& a, const SupportPolytope& b) {
  if (a.dimension != b.dimension) return false;
  return canonical_translate(a).vertices == canonical_translate(b).vertices;
}

Rational surface_c(const Integer& chi, const Rational& index_i, const Rational& rotation_r) {
  return Rational(chi) + index_i - rotation_r;
}

long depth_bound(const Integer& rank) {
  if (rank < 1) throw Error("NonPositiveRank", "rank must be >= 1");
  long k = 0;
  Integer bound = 2;
  while (rank >= bound) {
    ++k;
    bound *= 2;
  }
  return 2 * k;
}

long seifert_surface_bound(const Integer& rank) {
  if (rank < 1) throw Error("NonPositiveRank", "rank must be >= 1");
  long n = 1;
  Integer bound = 4;
  while (rank >= bound) {
    ++n;
    bound *= 2;
  }
  return n;
}

SupportData support_from_euler_polynomial(const GroupRingElem& x, const FinAbGroup& g) {
  std::map<IntVector, Integer> mult;
  for (const auto& [e, c] : x.terms()) {
    IntVector p = e.free_part;
    for (auto& v : p) v *= 2;
    mult[p] += abs(c);
  }
  SupportData s;
  s.dimension = g.free_rank();
  for (const auto& [p, m] : mult) {
    s.points.push_back(p);
    s.multiplicity.push_back(m);
  }
  return s;
}

}  // namespace sutured::polytope
