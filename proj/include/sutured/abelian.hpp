#pragma once

// Exact integer linear algebra, finitely generated abelian groups and their
// integral group rings.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sutured {

using Integer = mpz_class;
using Rational = mpq_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> row(std::size_t r) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  std::vector<Integer> apply(std::span<const Integer> x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  // Elementary operations; used by the normal form routines.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& q);  // row dst += q*row src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& q);  // col dst += q*col src
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

// u * a * v == d, with u, v unimodular and d diagonal d_11 | d_22 | ...
// The inverses of u and v are tracked alongside so that callers can pull
// vectors back into the original coordinates without a second inversion.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer determinant(const IntMatrix& a);

// Basis of the integer kernel {x : a x = 0}, as columns.
IntMatrix integer_kernel(const IntMatrix& a);

// Solve a x = b over the integers. Returns false when no integer solution
// exists; otherwise writes one particular solution into x.
bool solve_integer(const IntMatrix& a, std::span<const Integer> b, std::vector<Integer>& x);

struct GroupElement {
  std::vector<Integer> free_part;
  std::vector<Integer> torsion_part;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.free_part != b.free_part) return a.free_part < b.free_part;
    return a.torsion_part < b.torsion_part;
  }
};

class FinAbGroup {
 public:
  FinAbGroup() = default;
  FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion);
  FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion, IntMatrix projection);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool has_projection() const { return has_projection_; }
  const IntMatrix& projection() const { return projection_; }
  std::size_t ambient_dim() const { return projection_.cols(); }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  GroupElement identity() const;
  GroupElement reduce(GroupElement e) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement subtract(const GroupElement& a, const GroupElement& b) const {
    return add(a, negate(b));
  }
  bool contains(const GroupElement& e) const;

  // Image of an ambient coordinate vector under the recorded projection.
  GroupElement project(std::span<const Integer> ambient) const;

  // Same invariants (free rank and torsion coefficients).
  bool isomorphic(const FinAbGroup& other) const {
    return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
  }

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
  bool has_projection_ = false;
  IntMatrix projection_;
};

std::string to_string(const GroupElement& e);

// Z^rows / column-span(a), in Smith form, with the projection recorded.
FinAbGroup cokernel(const IntMatrix& a);

class GroupRingElem {
 public:
  using Terms = std::map<GroupElement, Integer>;

  GroupRingElem() = default;
  static GroupRingElem monomial(GroupElement e, Integer coeff = 1);
  static GroupRingElem one(const FinAbGroup& g) { return monomial(g.identity()); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Integer coefficient(const GroupElement& e) const;
  Integer augmentation() const;

  void add_term(const GroupElement& e, const Integer& c);

  GroupRingElem operator-() const;
  GroupRingElem& operator+=(const GroupRingElem& o);
  GroupRingElem& operator-=(const GroupRingElem& o);
  friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
  friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
  friend GroupRingElem operator*(const Integer& k, const GroupRingElem& x);
  friend bool operator==(const GroupRingElem&, const GroupRingElem&) = default;

 private:
  Terms terms_;
};

std::string to_string(const GroupRingElem& x);

GroupRingElem ring_mul(const GroupRingElem& x, const GroupRingElem& y, const FinAbGroup& g);

// Multiplication by the group element h (a shift of every exponent).
GroupRingElem shift(const GroupRingElem& x, const GroupElement& h, const FinAbGroup& g);

// The ring automorphism induced by h -> h^{-1}.
GroupRingElem invert_exponents(const GroupRingElem& x, const FinAbGroup& g);

using GroupRingMatrix = std::vector<std::vector<GroupRingElem>>;

inline constexpr std::size_t kMaxDeterminantSize = 16;

// Cofactor expansion memoized on column subsets; safe over rings with zero
// divisors. Throws Error("MatrixTooLarge") above kMaxDeterminantSize.
GroupRingElem det_group_ring(const GroupRingMatrix& m, const FinAbGroup& g);

GroupRingElem doteq_normalize(const GroupRingElem& x, const FinAbGroup& g);
bool doteq_equal(const GroupRingElem& x, const GroupRingElem& y, const FinAbGroup& g,
                 bool allow_inversion = false);

}  // namespace sutured
