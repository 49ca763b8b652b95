#pragma once

// Free-group words, Fox free differential calculus and the sutured torsion of
// a geometrically balanced presentation.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sutured/abelian.hpp"

namespace sutured::fox {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word. Reduction happens on construction and on every
// product; there is no cyclic reduction.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord generator(std::size_t i, int exponent = 1) { return FreeWord({{i, exponent}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  std::vector<Integer> exponent_sums(std::size_t generator_count) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// Formal Z-linear combination of words: an element of the free group ring.
class FreeGroupRingElem {
 public:
  using Terms = std::map<FreeWord, Integer>;

  FreeGroupRingElem() = default;
  static FreeGroupRingElem word(FreeWord w, Integer coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer augmentation() const;
  void add_term(const FreeWord& w, const Integer& c);

  FreeGroupRingElem& operator+=(const FreeGroupRingElem& o);
  FreeGroupRingElem& operator-=(const FreeGroupRingElem& o);
  friend FreeGroupRingElem operator+(FreeGroupRingElem a, const FreeGroupRingElem& b) {
    return a += b;
  }
  friend FreeGroupRingElem operator-(FreeGroupRingElem a, const FreeGroupRingElem& b) {
    return a -= b;
  }
  friend FreeGroupRingElem operator*(const FreeGroupRingElem& a, const FreeGroupRingElem& b);
  friend bool operator==(const FreeGroupRingElem&, const FreeGroupRingElem&) = default;

 private:
  Terms terms_;
};

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;
  std::size_t boundary_genus = 0;
  // Cores of 1-handles joining distinct components of R_-: arcs rather than
  // loops, so they map to the identity of pi_1 but keep their Fox column.
  std::vector<std::size_t> tree_generators;

  std::size_t generator_count() const { return generator_names.size(); }
};

struct InclusionData {
  std::vector<FreeWord> sigma_images;
};

// Left-to-right Fox derivative d w / d a_i.
FreeGroupRingElem fox_derivative(const FreeWord& w, std::size_t i, std::size_t generator_count);

struct Abelianization {
  FinAbGroup group;
  std::size_t generator_count = 0;

  GroupElement phi(const FreeWord& w) const;
  GroupRingElem phi(const FreeGroupRingElem& x) const;
};

Abelianization abelianization(const Presentation& p);

bool is_geometrically_balanced(const Presentation& p, const InclusionData& k);

// Rows indexed by generators; the first l columns come from the sigma images,
// the remaining n from the relators. Throws Error("NotGeometricallyBalanced").
GroupRingMatrix theta_matrix(const Presentation& p, const InclusionData& k,
                             const Abelianization& ab);
GroupRingMatrix theta_matrix(const Presentation& p, const InclusionData& k);

struct TorsionResult {
  FinAbGroup group;
  GroupRingElem torsion;  // doteq-normalized
};

TorsionResult torsion(const Presentation& p, const InclusionData& k);

// Whitespace-separated letters; a generator name is the letter, its
// upper-cased spelling (or "name^-1") the inverse.
FreeWord parse_word(const std::string& text, const std::vector<std::string>& generator_names);
std::string format_word(const FreeWord& w, const std::vector<std::string>& generator_names);

}  // namespace sutured::fox
