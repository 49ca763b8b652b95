#pragma once

// Convex hulls of Spin^c support points, faces, the support function y_t and
// the rank-based bound calculators.

#include <cstddef>
#include <vector>

#include "sutured/abelian.hpp"

namespace sutured::polytope {

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

inline constexpr std::size_t kMaxDimension = 6;

struct SupportData {
  std::size_t dimension = 0;
  std::vector<IntVector> points;
  std::vector<Integer> multiplicity;  // parallel to points; empty means all 1
};

// <normal, x> <= offset, normal a primitive integer vector.
struct Facet {
  IntVector normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

// <normal, x> = offset on the whole polytope.
using Equation = Facet;

struct SupportPolytope {
  std::size_t dimension = 0;
  int affine_dimension = -1;  // -1 for the empty polytope
  std::vector<RationalVector> vertices;  // sorted lexicographically
  std::vector<Facet> facets;             // facets relative to the affine span
  std::vector<Equation> equations;       // affine span

  bool empty() const { return vertices.empty(); }
  bool contains(const RationalVector& x) const;
};

// Throws DimensionTooLarge (dimension > 6) or BadDimension (point length).
SupportPolytope hull(const SupportData& s);
SupportPolytope hull(std::size_t dimension, const std::vector<RationalVector>& points);

// y_t(alpha) = max over vertices of <-c, alpha>. Throws BadDimension.
Rational support_function(const SupportPolytope& p, const IntVector& alpha);

struct Face {
  SupportPolytope polytope;
  std::vector<std::size_t> points;  // indices into s.points achieving the minimum
  Rational value;                   // c(alpha, t) = min <c, alpha>
};

// Minimizing face of <c, alpha>. Throws BadDimension.
Face face(const SupportPolytope& p, const SupportData& s, const IntVector& alpha);

bool is_centrally_symmetric(const SupportPolytope& p);

// Translate putting the lex-minimal vertex at the origin.
SupportPolytope canonical_translate(const SupportPolytope& p);

bool equal_up_to_translation(const SupportPolytope& a, const SupportPolytope& b);

// chi(S) + I(S) - r(S, t).
Rational surface_c(const Integer& chi, const Rational& index_i, const Rational& rotation_r);

// 2k for the minimal k with rank < 2^(k+1). Throws NonPositiveRank.
long depth_bound(const Integer& rank);
// Minimal n >= 1 with rank < 2^(n+1). Throws NonPositiveRank.
long seifert_surface_bound(const Integer& rank);

// Points 2 * (free part of h) with multiplicity |coefficient|; the torsion
// part is forgotten, coefficients landing on the same point add up.
SupportData support_from_euler_polynomial(const GroupRingElem& x, const FinAbGroup& g);

}  // namespace sutured::polytope
