#pragma once

#include "qlift/cyclotomic.hpp"

#include <vector>

namespace qlift {

using Matrix = std::vector<std::vector<Scalar>>;

// One irreducible representation of the dim-p^3 Hopf algebra
//   g^p = 1, g x = q x g, g y = q^{-1} y g, x^p = 0 = y^p,
//   [x, y] = x y - q^{-1} y x = g^2 - 1
// (the linking scalar normalized to 1). For 2 <= r <= p the matrices are
//   G = psi diag(1, xi, ..., xi^{r-1}),  X = subdiagonal of ones,
//   Y = superdiagonal y_i = xi (1 - xi^{i-r})(xi^i - 1)(xi - 1)^{-1},
// with psi^2 = xi^{1-r}; r = 1 is the counit representation.
struct Irrep {
    long r = 0;
    Matrix G, X, Y;
    bool relations_ok = false;  // all five defining relations hold exactly
    long span_dim = 0;          // dim span{G^a X^b Y^c}; r^2 certifies irreducibility
    bool irreducible() const { return span_dim == r * r; }
};

// Throws InputError for r outside 1..p and MathError when no square root of
// xi^{1-r} exists in the session field (enlarge E).
Irrep build_irrep(long p, long r, const CycloField* F, bool negate_psi = false);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_identity(long n, const CycloField* F);
bool mat_eq(const Matrix& a, const Matrix& b);

}  // namespace qlift
