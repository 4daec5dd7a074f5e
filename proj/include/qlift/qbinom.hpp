#pragma once

#include "qlift/cyclotomic.hpp"

namespace qlift {

// Gauss polynomials evaluated at q, computed with the division-free q-Pascal
// recursion so roots of unity never hit a vanishing denominator.
//   (n choose i)_q = (n-1 choose i-1)_q + q^i (n-1 choose i)_q
// Out-of-range (i < 0 or i > n) returns 0 by convention: this matches the
// summation ranges that appear in coproduct expansions.
Scalar qbinom(long n, long i, const Scalar& q);

// j_q = 1 + q + ... + q^{j-1}
Scalar qint(long j, const Scalar& q);

// m_q! = 1_q 2_q ... m_q, with 0_q! = 1
Scalar qfactorial(long m, const Scalar& q);

}  // namespace qlift
