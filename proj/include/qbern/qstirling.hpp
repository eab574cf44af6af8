#pragma once

#include "qbern/rational.hpp"
#include "qbern/upoly.hpp"

namespace qbern {

/// q-Stirling number of the second kind
///   s_q(n,k) = q^{-C(k,2)} / [k]_q! * sum_j (-1)^j q^{C(j,2)} C_q(k,j) [k-j]_q^n,
/// with 0^0 = 1. q = 1 gives the classical numbers. Rejects q = 0 and q = -1.
ExactRational q_stirling2(long n, long k, const ExactRational& q);

/// sum_k q^{C(k,2)} (x choose k)_q [k]_q! s_q(n,k) as a polynomial in u = [x]_q.
/// Equals u^n.
UPoly qstirling_expansion_upoly(long n, const ExactRational& q);

}  // namespace qbern
