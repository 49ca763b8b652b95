#pragma once

// Combinatorial balanced sutured Heegaard diagrams.
//
// A diagram is given by its curves (cyclic lists of intersection-point names),
// crossing signs, and the complementary regions described by their boundary
// cycles of signed arcs. `Diagram` validates this data once, builds the cell
// structure of the surface, and answers every query from it.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sutured/abelian.hpp"

namespace sutured::diagram {

enum class CurveKind { Alpha, Beta };

// Arc `index` of a curve runs from its index-th point to the next one; sign -1
// means the arc is traversed backwards. Written "a1.0" / "-b2.3" in files.
struct ArcRef {
  CurveKind kind = CurveKind::Alpha;
  std::size_t curve = 0;  // 0-based
  std::size_t index = 0;
  int sign = 1;

  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

std::string format_arc(const ArcRef& a);
ArcRef parse_arc(const std::string& text);

struct Region {
  std::vector<std::vector<ArcRef>> cycles;
  std::size_t boundary_circles = 0;  // ∂Σ circles inside the region
  int genus = 0;
};

struct SuturedDiagram {
  std::string name;
  int genus = 0;
  int boundary_circles = 1;
  std::vector<std::vector<std::string>> alpha;
  std::vector<std::vector<std::string>> beta;
  std::map<std::string, int> crossing_sign;
  std::vector<Region> regions;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

ValidationReport validate(const SuturedDiagram& d);

struct BalanceReport {
  bool balanced = true;
  std::vector<std::string> reasons;
};

// One point on each alpha and each beta curve.
struct GeneratorMatching {
  std::vector<std::size_t> beta_of_alpha;  // sigma(i)
  std::vector<std::string> points;         // point on alpha_i ∩ beta_sigma(i)

  friend bool operator==(const GeneratorMatching&, const GeneratorMatching&) = default;
};

std::string to_string(const GeneratorMatching& x);

// Matchings read off the curve data alone (no region or balance checks);
// order is lex on (alpha index, beta index, point name).
std::vector<GeneratorMatching> enumerate_generators(const SuturedDiagram& d);

// Coefficients on the internal regions (those containing no ∂Σ circle), in
// region order.
using DomainVector = std::vector<Integer>;

struct SpincPartition {
  std::vector<std::vector<std::size_t>> classes;  // indices into generators()
  std::vector<GroupElement> offset;               // ε(x0, representative)
  std::size_t base_class = 0;

  // ε(a, b) for representatives a ∈ A, b ∈ B.
  GroupElement difference(std::size_t a, std::size_t b, const FinAbGroup& g) const {
    return g.subtract(offset[b], offset[a]);
  }
};

struct ConnectingDomains {
  DomainVector particular;
  IntMatrix lattice;  // columns span the periodic domains
};

struct EulerPolynomial {
  FinAbGroup group;
  GroupRingElem polynomial;  // doteq-normalized
};

class Diagram {
 public:
  // Throws Error("InvalidDiagram") listing every violation.
  explicit Diagram(SuturedDiagram d);

  const SuturedDiagram& data() const { return d_; }

  BalanceReport balance() const;
  bool is_balanced() const { return balance().balanced; }
  std::pair<long, long> euler_characteristics() const;

  // Deterministic, lex on (alpha index, beta index, point name).
  std::vector<GeneratorMatching> generators() const;  // throws NotBalanced
  int generator_sign(const GeneratorMatching& x) const;

  const FinAbGroup& h1() const { return h1_; }

  // Edges of the 1-skeleton: the curve arcs come first, in curve order.
  std::size_t arc_count() const { return arcs_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t arc_id(const ArcRef& a) const;
  std::size_t curve_arc_count(CurveKind kind, std::size_t curve) const;

  // Chain along a curve from one point to another, forwards or backwards.
  std::vector<Integer> path_chain(CurveKind kind, std::size_t curve, const std::string& from,
                                  const std::string& to, bool forward = true) const;
  std::vector<Integer> curve_chain(CurveKind kind, std::size_t curve) const;
  bool is_cycle(std::span<const Integer> chain) const;
  // Class in H_1(M) of a 1-cycle on the skeleton. Throws NotACycle.
  GroupElement cycle_class(std::span<const Integer> chain) const;

  // The 1-cycle joining x to y along alpha and y to x along beta.
  std::vector<Integer> epsilon_chain(const GeneratorMatching& x, const GeneratorMatching& y) const;
  GroupElement epsilon(const GeneratorMatching& x, const GeneratorMatching& y) const;

  SpincPartition spinc_partition() const;

  std::vector<std::size_t> internal_regions() const;
  // Boundary multiplicity of a domain on every arc.
  std::vector<Integer> arc_multiplicities(std::span<const Integer> domain) const;
  IntMatrix periodic_lattice() const;  // columns
  bool is_periodic(std::span<const Integer> domain) const;
  bool is_admissible() const;

  std::optional<ConnectingDomains> connecting_domains(const GeneratorMatching& x,
                                                      const GeneratorMatching& y) const;

  EulerPolynomial euler_polynomial() const;

 private:
  struct Arc {
    CurveKind kind;
    std::size_t curve;
    std::size_t tail;
    std::size_t head;
  };

  void build_complex();
  void require_balanced() const;
  void require_generator(const GeneratorMatching& x) const;
  const std::vector<std::size_t>& curve_vertices(CurveKind kind, std::size_t curve) const;
  std::size_t curve_first_arc(CurveKind kind, std::size_t curve) const;
  // Rows (mult(e_t) - mult(e_0)) per curve, columns internal regions.
  IntMatrix constancy_matrix() const;
  std::vector<Integer> constancy_rhs(std::span<const Integer> chain) const;

  struct PointInfo {
    std::size_t alpha = 0, alpha_pos = 0, beta = 0, beta_pos = 0;
  };

  SuturedDiagram d_;
  std::map<std::string, PointInfo> points_;
  std::map<std::string, std::size_t> vertex_index_;
  std::vector<std::vector<std::size_t>> alpha_vertices_, beta_vertices_;
  std::vector<std::size_t> alpha_first_arc_, beta_first_arc_;
  std::vector<Arc> arcs_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  IntMatrix boundary1_;      // vertices x edges
  IntMatrix region_chains_;  // edges x regions (∂_2)
  IntMatrix cycle_coords_;   // pulls a cycle back to kernel coordinates
  std::size_t boundary1_rank_ = 0;
  FinAbGroup h1_;
};

// True iff some nonzero vector in the column span of `basis` (over Q, hence
// over Z) is coordinate-wise nonnegative. Exact Fourier–Motzkin.
bool span_has_nonnegative(const IntMatrix& basis);

}  // namespace sutured::diagram
