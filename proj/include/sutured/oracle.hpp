#pragma once

// Closed-form ranks of sutured Floer homology for solid tori, closed
// manifolds with punctures and connected sums.

#include <map>

#include "sutured/abelian.hpp"

namespace sutured::oracle {

struct RankTable {
  std::map<long, Integer> ranks;  // grading -> rank, zero ranks omitted

  Integer total() const;
};

// T(p, q; n): rank C(k, floor(i/p)) for 0 <= i < p(k+1), k = (n-2)/2.
// Throws OddSutureCount, NonCoprime, BadInput (p < 1 or n < 2).
RankTable solid_torus_sfh(long p, long q, long n);

// total(T(p,q; n+m-2)) == total(T(1,0; n)) * total(T(p,q; m)).
bool tensor_rank_identity(long p, long q, long n, long m);

// hf_rank * 2^(n-1). Throws BadInput for n < 1 or hf_rank < 1.
Integer closed_manifold_rank(const Integer& hf_rank, long n);

// a*b*2 for a sutured pair, a*b when the second summand is closed.
Integer connected_sum_rank(const Integer& a, const Integer& b, bool with_closed);

}  // namespace sutured::oracle
