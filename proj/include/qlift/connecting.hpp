#pragma once

#include "qlift/cocycle.hpp"

namespace qlift {

// The equivariant connecting map delta : H^1_G(K, k) -> H^2_G(B, k) of the
// five-term sequence, instantiated for quantum linear spaces with
//   R = the q-commutative algebra on x_1..x_t (no power truncation),
//   K = the subalgebra generated by z_i = x_i^{N_i},
//   B = R / R K^+ R = B(V).
// The pinned K-bimodule retraction u : R -> K sends a monomial to itself when
// every exponent is a multiple of N_i and to 0 otherwise. Supported for t = 1
// and t = 2 without linking values; other shapes raise InputError.
struct ConnectingResult {
    Cochain induced;            // the 2-cocycle on B = B(V)
    bool kills_mixed_ideal = false;   // d(u^* f) kills K+R (x) R + R (x) R K+
    bool factors_through_pi = false;  // vanishes off the pi (x) pi support
    bool cocycle_on_B = false;        // d(induced) = 0 on B
    bool class_is_zero = false;       // induced = d g for an invariant g
    Cochain primitive;                // the g above when class_is_zero
    std::string retraction;           // description pinned for reports
};

// f is given by its values on z_1..z_t (G-invariance constraints enforced).
ConnectingResult connecting_delta(const Datum& d, const std::vector<Scalar>& f_values,
                                  const CochainAlgebra& B, long degree_cap = 0);

}  // namespace qlift
