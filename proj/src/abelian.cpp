#include "sutured/abelian.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>

#include "sutured/error.hpp"

namespace sutured {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("BadDimension", "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_) throw Error("BadDimension", "matrix-vector size mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (x[c] != 0) out[r] += (*this)(r, c) * x[c];
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("BadDimension", "matrix product size mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

// Row/column operations applied to a together with the transforms.
struct SmithState {
  IntMatrix a, u, u_inv, v, v_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    a.add_row_multiple(dst, src, q);
    u.add_row_multiple(dst, src, q);
    u_inv.add_col_multiple(src, dst, -q);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    a.add_col_multiple(dst, src, q);
    v.add_col_multiple(dst, src, q);
    v_inv.add_row_multiple(src, dst, -q);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  SmithState s{input, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n),
               IntMatrix::identity(n)};
  IntMatrix& a = s.a;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero |entry| in the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second))))
          best = {i, j};
    if (!best) break;
    s.swap_rows(t, best->first);
    s.swap_cols(t, best->second);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        s.add_row(i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        s.add_col(j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; move it into place.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        s.swap_rows(t, bi);
        s.swap_cols(t, bj);
        continue;
      }
      // Row and column clear; enforce divisibility of the trailing block.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      s.add_row(t, *offending, 1);
    }
    if (a(t, t) < 0) s.negate_row(t);
  }

  return SmithForm{std::move(s.u), std::move(s.a), std::move(s.v), std::move(s.u_inv),
                   std::move(s.v_inv), t};
}

Integer determinant(const IntMatrix& input) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw Error("BadDimension", "determinant of non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  SmithForm snf = smith_normal_form(a);
  const std::size_t n = a.cols();
  IntMatrix basis(n, n - snf.rank);
  for (std::size_t j = snf.rank; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r) basis(r, j - snf.rank) = snf.v(r, j);
  return basis;
}

bool solve_integer(const IntMatrix& a, std::span<const Integer> b, std::vector<Integer>& x) {
  if (b.size() != a.rows()) throw Error("BadDimension", "right-hand side size mismatch");
  SmithForm snf = smith_normal_form(a);
  std::vector<Integer> c = snf.u.apply(b);
  std::vector<Integer> y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < snf.rank) {
      if (c[i] % snf.d(i, i) != 0) return false;
      y[i] = c[i] / snf.d(i, i);
    } else if (c[i] != 0) {
      return false;
    }
  }
  x = snf.v.apply(y);
  return true;
}

// ---------------------------------------------------------------------------

FinAbGroup::FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw Error("BadGroup", "torsion coefficients must be >= 2");
    if (i && torsion_[i] % torsion_[i - 1] != 0)
      throw Error("BadGroup", "torsion coefficients must form a divisibility chain");
  }
}

FinAbGroup::FinAbGroup(std::size_t free_rank, std::vector<Integer> torsion, IntMatrix projection)
    : FinAbGroup(free_rank, std::move(torsion)) {
  if (projection.rows() != free_rank_ + torsion_.size())
    throw Error("BadGroup", "projection rows must equal free rank plus torsion count");
  projection_ = std::move(projection);
  has_projection_ = true;
}

GroupElement FinAbGroup::identity() const {
  return GroupElement{std::vector<Integer>(free_rank_), std::vector<Integer>(torsion_.size())};
}

GroupElement FinAbGroup::reduce(GroupElement e) const {
  if (e.free_part.size() != free_rank_ || e.torsion_part.size() != torsion_.size())
    throw Error("BadDimension", "group element does not match group shape");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), e.torsion_part[i].get_mpz_t(), torsion_[i].get_mpz_t());
    e.torsion_part[i] = r;
  }
  return e;
}

GroupElement FinAbGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement out = a;
  for (std::size_t i = 0; i < out.free_part.size(); ++i) out.free_part[i] += b.free_part[i];
  for (std::size_t i = 0; i < out.torsion_part.size(); ++i)
    out.torsion_part[i] += b.torsion_part[i];
  return reduce(std::move(out));
}

GroupElement FinAbGroup::negate(const GroupElement& a) const {
  GroupElement out = a;
  for (auto& x : out.free_part) x = -x;
  for (auto& x : out.torsion_part) x = -x;
  return reduce(std::move(out));
}

bool FinAbGroup::contains(const GroupElement& e) const {
  if (e.free_part.size() != free_rank_ || e.torsion_part.size() != torsion_.size()) return false;
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    if (e.torsion_part[i] < 0 || e.torsion_part[i] >= torsion_[i]) return false;
  return true;
}

GroupElement FinAbGroup::project(std::span<const Integer> ambient) const {
  if (!has_projection_) throw Error("BadGroup", "group has no recorded projection");
  std::vector<Integer> coords = projection_.apply(ambient);
  GroupElement e;
  e.free_part.assign(coords.begin(), coords.begin() + free_rank_);
  e.torsion_part.assign(coords.begin() + free_rank_, coords.end());
  return reduce(std::move(e));
}

std::string to_string(const GroupElement& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.free_part.size(); ++i) os << (i ? "," : "") << e.free_part[i].get_str();
  os << '|';
  for (std::size_t i = 0; i < e.torsion_part.size(); ++i)
    os << (i ? "," : "") << e.torsion_part[i].get_str();
  os << ')';
  return os.str();
}

FinAbGroup cokernel(const IntMatrix& a) {
  const std::size_t m = a.rows();
  SmithForm snf = smith_normal_form(a);
  std::vector<std::size_t> torsion_rows;
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.d(i, i) > 1) {
      torsion_rows.push_back(i);
      torsion.push_back(snf.d(i, i));
    }
  const std::size_t free_rank = m - snf.rank;
  IntMatrix projection(free_rank + torsion.size(), m);
  for (std::size_t k = 0; k < free_rank; ++k)
    for (std::size_t c = 0; c < m; ++c) projection(k, c) = snf.u(snf.rank + k, c);
  for (std::size_t k = 0; k < torsion_rows.size(); ++k)
    for (std::size_t c = 0; c < m; ++c) projection(free_rank + k, c) = snf.u(torsion_rows[k], c);
  return FinAbGroup(free_rank, std::move(torsion), std::move(projection));
}

// ---------------------------------------------------------------------------

GroupRingElem GroupRingElem::monomial(GroupElement e, Integer coeff) {
  GroupRingElem x;
  x.add_term(e, coeff);
  return x;
}

Integer GroupRingElem::coefficient(const GroupElement& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer GroupRingElem::augmentation() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

void GroupRingElem::add_term(const GroupElement& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

GroupRingElem GroupRingElem::operator-() const {
  GroupRingElem out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

GroupRingElem& GroupRingElem::operator+=(const GroupRingElem& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

GroupRingElem& GroupRingElem::operator-=(const GroupRingElem& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

GroupRingElem operator*(const Integer& k, const GroupRingElem& x) {
  if (k == 0) return {};
  GroupRingElem out = x;
  for (auto& [e, c] : out.terms_) c *= k;
  return out;
}

std::string to_string(const GroupRingElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    os << Integer(abs(c)).get_str() << '*' << to_string(e);
  }
  return os.str();
}

GroupRingElem ring_mul(const GroupRingElem& x, const GroupRingElem& y, const FinAbGroup& g) {
  GroupRingElem out;
  for (const auto& [ex, cx] : x.terms())
    for (const auto& [ey, cy] : y.terms()) out.add_term(g.add(ex, ey), cx * cy);
  return out;
}

GroupRingElem shift(const GroupRingElem& x, const GroupElement& h, const FinAbGroup& g) {
  GroupRingElem out;
  for (const auto& [e, c] : x.terms()) out.add_term(g.add(e, h), c);
  return out;
}

GroupRingElem invert_exponents(const GroupRingElem& x, const FinAbGroup& g) {
  GroupRingElem out;
  for (const auto& [e, c] : x.terms()) out.add_term(g.negate(e), c);
  return out;
}

GroupRingElem det_group_ring(const GroupRingMatrix& m, const FinAbGroup& g) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error("BadDimension", "determinant of non-square matrix");
  if (n > kMaxDeterminantSize)
    throw Error("MatrixTooLarge", "group-ring determinant limited to " +
                                      std::to_string(kMaxDeterminantSize) + " rows");
  if (n == 0) return GroupRingElem::one(g);

  // memo[mask] = determinant of the trailing rows restricted to columns in mask.
  std::vector<std::optional<GroupRingElem>> memo(std::size_t{1} << n);
  memo[0] = GroupRingElem::one(g);
  auto solve = [&](auto&& self, std::uint32_t mask) -> const GroupRingElem& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    GroupRingElem acc;
    int position = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const GroupRingElem& entry = m[row][j];
      if (!entry.is_zero()) {
        const GroupRingElem& minor = self(self, mask & ~(1u << j));
        GroupRingElem term = ring_mul(entry, minor, g);
        if (position % 2) acc -= term;
        else acc += term;
      }
      ++position;
    }
    slot = std::move(acc);
    return *slot;
  };
  return solve(solve, static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

namespace {

// Shift so that h becomes the identity, then fix the sign at the identity.
GroupRingElem normalize_at(const GroupRingElem& x, const GroupElement& h, const FinAbGroup& g) {
  GroupRingElem y = shift(x, g.negate(h), g);
  if (y.coefficient(g.identity()) < 0) y = -y;
  return y;
}

bool terms_less(const GroupRingElem& a, const GroupRingElem& b) {
  return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(),
                                      b.terms().end());
}

}  // namespace

GroupRingElem doteq_normalize(const GroupRingElem& x, const FinAbGroup& g) {
  if (x.is_zero()) return x;
  // Candidates: support elements with the lex-minimal free part. Without
  // torsion this is the single lex-minimal support element; with torsion the
  // smallest resulting term list breaks the tie canonically.
  const std::vector<Integer>& min_free = x.terms().begin()->first.free_part;
  std::optional<GroupRingElem> best;
  for (const auto& [e, c] : x.terms()) {
    if (e.free_part != min_free) break;
    GroupRingElem candidate = normalize_at(x, e, g);
    if (!best || terms_less(candidate, *best)) best = std::move(candidate);
  }
  return *best;
}

bool doteq_equal(const GroupRingElem& x, const GroupRingElem& y, const FinAbGroup& g,
                 bool allow_inversion) {
  GroupRingElem nx = doteq_normalize(x, g);
  if (nx == doteq_normalize(y, g)) return true;
  return allow_inversion && nx == doteq_normalize(invert_exponents(y, g), g);
}

}  // namespace sutured
