#include "sutured/fox.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "sutured/error.hpp"

namespace sutured::fox {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
    out.pop_back();
  else
    out.push_back(l);
}

std::string upper(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

FreeWord::FreeWord(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.exponent != 1 && l.exponent != -1)
      throw Error("BadWord", "letter exponents must be +1 or -1");
    push_reduced(letters_, l);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

std::vector<Integer> FreeWord::exponent_sums(std::size_t generator_count) const {
  std::vector<Integer> sums(generator_count);
  for (const auto& l : letters_) {
    if (l.generator >= generator_count)
      throw Error("BadGenerator", "word uses generator index " + std::to_string(l.generator));
    sums[l.generator] += l.exponent;
  }
  return sums;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (const auto& l : b.letters_) push_reduced(out.letters_, l);
  return out;
}

FreeGroupRingElem FreeGroupRingElem::word(FreeWord w, Integer coeff) {
  FreeGroupRingElem x;
  x.add_term(w, coeff);
  return x;
}

Integer FreeGroupRingElem::augmentation() const {
  Integer s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

void FreeGroupRingElem::add_term(const FreeWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FreeGroupRingElem& FreeGroupRingElem::operator+=(const FreeGroupRingElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreeGroupRingElem& FreeGroupRingElem::operator-=(const FreeGroupRingElem& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreeGroupRingElem operator*(const FreeGroupRingElem& a, const FreeGroupRingElem& b) {
  FreeGroupRingElem out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

FreeGroupRingElem fox_derivative(const FreeWord& w, std::size_t i, std::size_t generator_count) {
  if (i >= generator_count)
    throw Error("BadGenerator", "fox derivative with respect to generator " + std::to_string(i) +
                                    " of " + std::to_string(generator_count));
  FreeGroupRingElem out;
  std::vector<Letter> prefix;
  for (const auto& l : w.letters()) {
    if (l.generator >= generator_count)
      throw Error("BadGenerator", "word uses generator index " + std::to_string(l.generator));
    if (l.generator == i) {
      if (l.exponent == 1) {
        out.add_term(FreeWord(prefix), 1);
      } else {
        // d(a^-1)/da = -a^-1, so the prefix absorbs the letter itself.
        std::vector<Letter> with_letter = prefix;
        with_letter.push_back(l);
        out.add_term(FreeWord(std::move(with_letter)), -1);
      }
    }
    prefix.push_back(l);
  }
  return out;
}

GroupElement Abelianization::phi(const FreeWord& w) const {
  std::vector<Integer> sums = w.exponent_sums(generator_count);
  return group.project(sums);
}

GroupRingElem Abelianization::phi(const FreeGroupRingElem& x) const {
  GroupRingElem out;
  for (const auto& [w, c] : x.terms()) out.add_term(phi(w), c);
  return out;
}

Abelianization abelianization(const Presentation& p) {
  const std::size_t m = p.generator_count();
  const std::size_t n = p.relators.size();
  IntMatrix exponents(m, n + p.tree_generators.size());
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> sums = p.relators[k].exponent_sums(m);
    for (std::size_t i = 0; i < m; ++i) exponents(i, k) = sums[i];
  }
  for (std::size_t t = 0; t < p.tree_generators.size(); ++t) {
    if (p.tree_generators[t] >= m) throw Error("BadInput", "tree generator out of range");
    exponents(p.tree_generators[t], n + t) = 1;
  }
  return Abelianization{cokernel(exponents), m};
}

bool is_geometrically_balanced(const Presentation& p, const InclusionData& k) {
  const std::size_t m = p.generator_count();
  const std::size_t n = p.relators.size();
  const std::size_t l = p.boundary_genus + p.tree_generators.size();
  return m >= n && m - n == l && k.sigma_images.size() == l;
}

GroupRingMatrix theta_matrix(const Presentation& p, const InclusionData& k,
                             const Abelianization& ab) {
  if (!is_geometrically_balanced(p, k))
    throw Error("NotGeometricallyBalanced",
                "need generators - relators = boundary genus + tree generators = number of sigma "
                "images (m=" +
                    std::to_string(p.generator_count()) + ", n=" +
                    std::to_string(p.relators.size()) + ", genus=" +
                    std::to_string(p.boundary_genus) + ", tree=" +
                    std::to_string(p.tree_generators.size()) + ", l=" +
                    std::to_string(k.sigma_images.size()) + ")");
  const std::size_t m = p.generator_count();
  std::vector<const FreeWord*> columns;
  for (const auto& w : k.sigma_images) columns.push_back(&w);
  for (const auto& r : p.relators) columns.push_back(&r);

  GroupRingMatrix theta(m, std::vector<GroupRingElem>(m));
  for (std::size_t col = 0; col < m; ++col)
    for (std::size_t i = 0; i < m; ++i)
      theta[i][col] = ab.phi(fox_derivative(*columns[col], i, m));
  return theta;
}

GroupRingMatrix theta_matrix(const Presentation& p, const InclusionData& k) {
  return theta_matrix(p, k, abelianization(p));
}

TorsionResult torsion(const Presentation& p, const InclusionData& k) {
  Abelianization ab = abelianization(p);
  GroupRingMatrix theta = theta_matrix(p, k, ab);
  GroupRingElem det = det_group_ring(theta, ab.group);
  return TorsionResult{ab.group, doteq_normalize(det, ab.group)};
}

FreeWord parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("BadPresentation", "empty generator name");
    if (!seen.insert(n).second) throw Error("BadPresentation", "duplicate generator name " + n);
  }
  for (const auto& n : names)
    if (upper(n) != n && seen.count(upper(n)))
      throw Error("BadPresentation", "generator " + upper(n) + " collides with inverse of " + n);

  std::istringstream in(text);
  std::vector<Letter> letters;
  std::string tok;
  while (in >> tok) {
    bool found = false;
    for (std::size_t i = 0; i < names.size() && !found; ++i) {
      if (tok == names[i]) {
        letters.push_back({i, 1});
        found = true;
      } else if ((upper(names[i]) != names[i] && tok == upper(names[i])) ||
                 tok == names[i] + "^-1") {
        letters.push_back({i, -1});
        found = true;
      }
    }
    if (!found) throw Error("BadWord", "unknown letter '" + tok + "'");
  }
  return FreeWord(std::move(letters));
}

std::string format_word(const FreeWord& w, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    const std::string& n = names.at(l.generator);
    if (l.exponent == 1) out += n;
    else out += upper(n) != n ? upper(n) : n + "^-1";
  }
  return out;
}

}  // namespace sutured::fox
