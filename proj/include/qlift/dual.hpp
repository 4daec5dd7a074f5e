#pragma once

#include "qlift/cocycle.hpp"

namespace qlift {

// Dual-side 2-cocycle sigma: k -> A (x) A, carried by its value sigma(1).
struct CoCycle {
    const Hopf* H = nullptr;
    Sparse2 value;  // sigma(1)
};

struct DualCocycleCheck {
    bool normalized = false;  // (eps x 1) sigma = 1 = (1 x eps) sigma
    bool cocycle = false;     // (sigma x 1)((Delta x 1) sigma) = (1 x sigma)((1 x Delta) sigma)
    bool invertible = false;
    bool ok() const { return normalized && cocycle && invertible; }
};
DualCocycleCheck check_dual_cocycle(const CoCycle& sigma);

// inverse of 1 (x) 1 + nilpotent inside A (x) A
Sparse2 s2_inverse(const Hopf& H, const Sparse2& v);

// A^sigma = (A, m, Delta^sigma = sigma Delta(.) sigma^{-1}); bialgebra axioms
// are re-verified (multiplication unchanged). When solve_antipode is set the
// antipode of the deformed Hopf algebra is computed by the linear solver.
Hopf deform_comultiplication(const Hopf& A, const CoCycle& sigma, bool solve_antipode = false,
                             const VerifyMode* mode = nullptr);

// the dual-pair twist element on the rank-1 bosonization over
// Z/(n p1 p2): sigma(1) = 1 (x) 1 + sum_{r+s=n, 0<r,s<n} a_rs x^r g^{p1 s} (x) x^s
// with a_rs = 1 / (r_q! s_q!)
CoCycle dual_deform_cocycle(const Hopf& A, const Datum& d, long p1);

}  // namespace qlift
