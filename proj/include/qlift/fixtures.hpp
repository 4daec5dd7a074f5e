#pragma once

#include "qlift/cocycle.hpp"

namespace qlift::fixtures {

// Rank-1 datum over Z/np with q = zeta_np^p a primitive n-th root of unity.
Datum taft_datum(long n, long p);
// Two generators over Z/p with chi_2 = chi_1^{-1} (symmetric pair shape).
Datum rank2_cyclic(long p);
// t = 2 quantum linear space over Z/6 with N_1 = N_2 = 3.
Datum rank2_z6();
// Over Z/p^2 with q = zeta_p: relations x^p = a(g^p-1) = y^p, [x,y] = b(g^2-1).
Datum prime_square_datum(long p);
// G = Z/p, x^p = 0 = y^p, [x,y] = b(g^2-1); carries p irreducible representations.
Datum dim_p3_datum(long p);
// G = Z/2p, dim 2p^3 example.
Datum evendim_datum(long p);
// G = Z/rs with gcd(r,s) = 1; chi_1 = chi^r of order s.
Datum coprime_datum(long r, long s);
// G = Z/(n p1 p2), action by alpha^{p2}, coaction through g^{p1} (dual pair).
Datum dual_deform_datum(long n, long p1, long p2);

// sigma = eps (x) eps + zeta with zeta(x^i g^u, x^j g^v) = a q^{ju} [i+j = n]
Func taft_sigma(const Hopf& A, const Datum& d, const Scalar& a);

// closed form of the deformed product on the rank-1 bosonization:
//   m_sigma(x^i g^j (x) x^k g^l) = q^{jk} (x^{i+k} + a x^beta (1 - g^{n alpha})) g^{j+l}
// with i + k = n alpha + beta, alpha in {0,1}; x-powers >= n vanish.
SparseVec taft_closed_form(const Hopf& A, const Datum& d, const Scalar& a, long b1, long b2);

}  // namespace qlift::fixtures
