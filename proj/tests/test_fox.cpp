#include <doctest.h>

#include "sutured/error.hpp"
#include "sutured/fox.hpp"
#include "support.hpp"

using namespace sutured;
using namespace sutured::fox;
using testing::Rng;

namespace {

const std::vector<std::string> kAB{"a", "b"};

FreeWord w(const std::string& text, const std::vector<std::string>& names = kAB) {
  return parse_word(text, names);
}

FreeGroupRingElem word(const FreeWord& x, long c = 1) { return FreeGroupRingElem::word(x, c); }

GroupElement h(long k) { return GroupElement{{Integer(k)}, {}}; }

GroupRingElem laurent(const std::vector<std::pair<long, long>>& terms) {
  GroupRingElem x;
  for (auto [e, c] : terms) x.add_term(h(e), c);
  return x;
}

Presentation presentation(std::vector<std::string> names, std::vector<std::string> relators,
                          std::size_t genus) {
  Presentation p{names, {}, genus};
  for (const auto& r : relators) p.relators.push_back(parse_word(r, names));
  return p;
}

InclusionData inclusion(const std::vector<std::string>& sigma, const std::vector<std::string>& names) {
  InclusionData k;
  for (const auto& s : sigma) k.sigma_images.push_back(parse_word(s, names));
  return k;
}

}  // namespace

TEST_CASE("words reduce freely") {
  CHECK(w("a A b").letters() == w("b").letters());
  CHECK(w("a b B A").empty());
  CHECK((w("a b") * w("B a")) == w("a a"));
  CHECK(w("a b").inverse() == w("B A"));
  CHECK(w("a^-1") == w("A"));
  CHECK(format_word(w("a B a"), kAB) == "a B a");
  CHECK_THROWS_AS(w("c"), Error);
  CHECK_THROWS_AS(parse_word("a", {"a", "A"}), Error);
  CHECK_THROWS_AS(parse_word("a", {"a", "a"}), Error);
}

TEST_CASE("fox derivatives of short words") {
  CHECK(fox_derivative(w("a"), 0, 2) == word(FreeWord()));
  CHECK(fox_derivative(w("A"), 0, 2) == word(w("A"), -1));
  CHECK(fox_derivative(w("a b a"), 0, 2) == word(FreeWord()) + word(w("a b")));
  CHECK(fox_derivative(w("a b a"), 1, 2) == word(w("a")));
  CHECK(fox_derivative(w("b"), 0, 2).is_zero());
  CHECK_THROWS_AS(fox_derivative(w("a"), 2, 2), Error);
}

TEST_CASE("fox product rule on random words") {
  Rng rng(101);
  for (int t = 0; t < 600; ++t) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    FreeWord u = testing::random_word(rng, m, 12);
    FreeWord v = testing::random_word(rng, m, 12);
    for (std::size_t i = 0; i < m; ++i)
      CHECK(fox_derivative(u * v, i, m) == fox_derivative(u, i, m) + word(u) * fox_derivative(v, i, m));
  }
}

TEST_CASE("fundamental formula on random words") {
  Rng rng(103);
  for (int t = 0; t < 600; ++t) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    FreeWord x = testing::random_word(rng, m, 12);
    FreeGroupRingElem rhs;
    for (std::size_t i = 0; i < m; ++i)
      rhs += fox_derivative(x, i, m) * (word(FreeWord::generator(i)) - word(FreeWord()));
    CHECK(rhs == word(x) - word(FreeWord()));
  }
}

TEST_CASE("abelianization") {
  Abelianization ab = abelianization(presentation({"a"}, {}, 0));
  CHECK(ab.group.free_rank() == 1);
  CHECK(ab.phi(w("a", {"a"})) == h(1));

  ab = abelianization(presentation({"a"}, {"a a"}, 0));
  CHECK(ab.group.free_rank() == 0);
  CHECK(ab.group.torsion() == std::vector<Integer>{2});

  ab = abelianization(presentation(kAB, {"a b a B A B"}, 1));
  CHECK(ab.group.free_rank() == 1);
  CHECK(ab.group.torsion().empty());
  CHECK(ab.phi(w("a")) == ab.phi(w("b")));
  CHECK(ab.phi(w("a")) != ab.group.identity());
}

TEST_CASE("relator derivatives vanish against the augmentation ideal") {
  Rng rng(107);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
    Presentation p{std::vector<std::string>(m), {}, 0};
    for (std::size_t i = 0; i < m; ++i) p.generator_names[i] = std::string(1, static_cast<char>('a' + i));
    const std::size_t n = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m)));
    for (std::size_t k = 0; k < n; ++k) p.relators.push_back(testing::random_word(rng, m, 8));
    Abelianization ab = abelianization(p);
    for (const auto& r : p.relators) {
      GroupRingElem sum;
      for (std::size_t i = 0; i < m; ++i) {
        GroupRingElem gen = GroupRingElem::monomial(ab.phi(FreeWord::generator(i)));
        sum += ring_mul(ab.phi(fox_derivative(r, i, m)), gen - GroupRingElem::one(ab.group), ab.group);
      }
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("geometric balance") {
  CHECK(is_geometrically_balanced(presentation(kAB, {"a b"}, 1), inclusion({"a"}, kAB)));
  CHECK_FALSE(is_geometrically_balanced(presentation(kAB, {"a b", "a"}, 1), inclusion({"a"}, kAB)));
  std::vector<std::string> abc{"a", "b", "c"};
  CHECK(is_geometrically_balanced(presentation(abc, {"a b c"}, 2), inclusion({"a", "b"}, abc)));
  CHECK_FALSE(is_geometrically_balanced(presentation(kAB, {"a b"}, 1), inclusion({}, kAB)));
  CHECK_THROWS_AS(theta_matrix(presentation(kAB, {"a b", "a"}, 1), inclusion({"a"}, kAB)), Error);
}

TEST_CASE("theta matrices") {
  std::vector<std::string> a{"a"};
  GroupRingMatrix t = theta_matrix(presentation(a, {}, 1), inclusion({"a"}, a));
  REQUIRE(t.size() == 1);
  CHECK(t[0][0] == laurent({{0, 1}}));

  t = theta_matrix(presentation(kAB, {}, 2), inclusion({"a", "b"}, kAB));
  const FinAbGroup z2(2, {});
  CHECK(t[0][0] == GroupRingElem::one(z2));
  CHECK(t[1][1] == GroupRingElem::one(z2));
  CHECK(t[0][1].is_zero());
  CHECK(t[1][0].is_zero());

  Presentation trefoil = presentation(kAB, {"a b a B A B"}, 1);
  t = theta_matrix(trefoil, inclusion({"a b"}, kAB));
  Abelianization ab = abelianization(trefoil);
  GroupRingElem x = GroupRingElem::monomial(ab.phi(w("a")));
  CHECK(t[0][0] == GroupRingElem::one(ab.group));
  CHECK(t[1][0] == x);
  // d(a b a B A B)/da = 1 + ab - abaBA, abelianized 1 + t^2 - t
  CHECK(t[0][1] == GroupRingElem::one(ab.group) + ring_mul(x, x, ab.group) - x);
}

TEST_CASE("torsion of small presentations") {
  std::vector<std::string> a{"a"};
  CHECK(torsion(presentation(a, {}, 1), inclusion({"a"}, a)).torsion == laurent({{0, 1}}));
  std::vector<std::string> abc{"a", "b", "c"};
  TorsionResult product = torsion(presentation(abc, {}, 3), inclusion({"a", "b", "c"}, abc));
  CHECK(product.torsion == GroupRingElem::one(product.group));
  CHECK(torsion(presentation(a, {}, 1), inclusion({"a a"}, a)).torsion == laurent({{0, 1}, {1, 1}}));
  CHECK(torsion(presentation(kAB, {"a b a B A B"}, 1), inclusion({"a"}, kAB)).torsion ==
        laurent({{0, 1}, {1, -1}, {2, 1}}));
  std::vector<std::string> none;
  TorsionResult disk = torsion(presentation(none, {}, 0), inclusion({}, none));
  CHECK(disk.group.is_trivial());
  CHECK(disk.torsion == GroupRingElem::one(disk.group));
}

TEST_CASE("torsion is invariant under relator moves") {
  Rng rng(109);
  int nonzero = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t m = static_cast<std::size_t>(rng.uniform(2, 3));
    const std::size_t genus = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(m) - 1));
    Presentation p{{}, {}, genus};
    for (std::size_t i = 0; i < m; ++i) p.generator_names.push_back(std::string(1, static_cast<char>('a' + i)));
    InclusionData k;
    for (std::size_t j = 0; j < genus; ++j) k.sigma_images.push_back(testing::random_word(rng, m, 4));
    for (std::size_t r = 0; r < m - genus; ++r) p.relators.push_back(testing::random_word(rng, m, 6));
    TorsionResult base = torsion(p, k);
    if (!base.torsion.is_zero()) ++nonzero;

    Presentation moved = p;
    const std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(p.relators.size()) - 1));
    FreeWord g = testing::random_word(rng, m, 4);
    moved.relators[r] = g * moved.relators[r] * g.inverse();
    CHECK(doteq_equal(torsion(moved, k).torsion, base.torsion, base.group));

    moved = p;
    moved.relators[r] = moved.relators[r].inverse();
    CHECK(doteq_equal(torsion(moved, k).torsion, base.torsion, base.group));

    if (p.relators.size() >= 2) {
      moved = p;
      std::swap(moved.relators[0], moved.relators[1]);
      CHECK(doteq_equal(torsion(moved, k).torsion, base.torsion, base.group));
    }
  }
  CHECK(nonzero > 10);
}

TEST_CASE("tree generators join components of R_-") {
  std::vector<std::string> ste{"s", "t", "e"};
  Presentation p = presentation(ste, {"e t E S"}, 1);
  p.tree_generators = {2};
  InclusionData k = inclusion({"s", "t"}, ste);
  CHECK(is_geometrically_balanced(p, k));
  Abelianization ab = abelianization(p);
  CHECK(ab.group.free_rank() == 1);
  CHECK(ab.phi(w("e", ste)) == ab.group.identity());
  CHECK(ab.phi(w("s", ste)) == ab.phi(w("t", ste)));
  TorsionResult t = torsion(p, k);
  CHECK(doteq_equal(t.torsion, laurent({{0, 1}, {1, -1}}), t.group));

  p.tree_generators.clear();
  CHECK_FALSE(is_geometrically_balanced(p, k));
  p.tree_generators = {7};
  CHECK_THROWS_AS(abelianization(p), Error);
}
