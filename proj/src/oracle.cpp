#include "sutured/oracle.hpp"

#include <numeric>
#include <string>

#include "sutured/error.hpp"

namespace sutured::oracle {

Integer RankTable::total() const {
  Integer s = 0;
  for (const auto& [i, r] : ranks) s += r;
  return s;
}

RankTable solid_torus_sfh(long p, long q, long n) {
  if (p < 1) throw Error("BadInput", "p must be >= 1");
  if (n < 2) throw Error("BadInput", "n must be >= 2");
  if (n % 2 != 0) throw Error("OddSutureCount", "n = " + std::to_string(n) + " is odd");
  if (std::gcd(p, q) != 1)
    throw Error("NonCoprime", "gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  const long k = (n - 2) / 2;
  RankTable t;
  for (long i = 0; i < p * (k + 1); ++i) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i / p));
    t.ranks[i] = c;
  }
  return t;
}

bool tensor_rank_identity(long p, long q, long n, long m) {
  return solid_torus_sfh(p, q, n + m - 2).total() ==
         solid_torus_sfh(1, 0, n).total() * solid_torus_sfh(p, q, m).total();
}

Integer closed_manifold_rank(const Integer& hf_rank, long n) {
  if (n < 1) throw Error("BadInput", "n must be >= 1");
  if (hf_rank < 1) throw Error("BadInput", "rank must be >= 1");
  Integer out = hf_rank;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), static_cast<unsigned long>(n - 1));
  return out;
}

Integer connected_sum_rank(const Integer& a, const Integer& b, bool with_closed) {
  if (a < 1 || b < 1) throw Error("BadInput", "ranks must be >= 1");
  return with_closed ? Integer(a * b) : Integer(a * b * 2);
}

}  // namespace sutured::oracle
