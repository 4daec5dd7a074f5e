#pragma once

#include "qlift/functional.hpp"
#include "qlift/lifting.hpp"

namespace qlift {

// Augmented algebra carrying a normalized Hochschild cochain complex with
// trivial coefficients, plus the diagonal G-grading used for the invariant
// subcomplex.
struct CochainAlgebra {
    long dim = 0;
    const CycloField* F = nullptr;
    long unit = 0;
    std::vector<std::vector<SparseVec>> mult;
    std::vector<Scalar> counit;
    std::vector<Character> action_char;
    std::shared_ptr<const FinAbGroup> G;
    std::vector<long> xdeg;
    std::vector<std::string> names;  // for reports
};

// B(V) of a quantum linear space, realized inside its bosonization.
CochainAlgebra nichols_algebra(const Datum& d);
// k[x]/(x^n) with x primitive-degree grading (rank-1 Nichols algebra shape).
CochainAlgebra truncated_poly(long n, const CycloField* F);
CochainAlgebra cochain_view(const Hopf& H);

// normalized cochains: maps on tuples of non-unit basis elements
using Cochain = std::map<std::vector<long>, Scalar>;

// alternating-sum differential with trivial coefficients
Cochain cochain_differential(const CochainAlgebra& A, const Cochain& f, long arity);

// dim H^n(A, k) on the normalized complex; invariant = true restricts to the
// G-invariant subcomplex (total action character trivial)
long h_cohomology_dim(const CochainAlgebra& A, long n, bool invariant);

// basis tuples of the normalized cochain space C^n (optionally invariant)
std::vector<std::vector<long>> cochain_tuples(const CochainAlgebra& A, long n, bool invariant);

// solve f = d(g) on the normalized (optionally invariant) complex
bool is_coboundary(const CochainAlgebra& A, const Cochain& f, long arity, bool invariant,
                   Cochain* primitive = nullptr);

// --- functional-level Hochschild machinery on a Hopf algebra ---

// d f as a functional of arity n+1 (built by evaluation over all tuples;
// guarded by the basis budget)
Func hochschild_differential(const Func& f);
// d f = 0 checked by a parallel scan over (arity+1)-tuples, without
// materializing the differential
bool is_hochschild_cocycle(const Func& f, std::vector<long>* witness = nullptr);

// --- multiplicative cocycles ---

struct CocycleCheck {
    bool ok = true;
    std::string failure;           // empty when ok
    std::vector<long> witness;     // offending basis triple when not ok
};

// the multiplicative 2-cocycle law sigma(x1,y1) sigma(x2 y2, z) =
// sigma(y1,z1) sigma(x, y2 z2) plus normalization, via the convolution
// identity (sigma (x) eps) * sigma(m (x) 1) = (eps (x) sigma) * sigma(1 (x) m)
CocycleCheck is_mult_cocycle(const Func& sigma);
// direct Sweedler-expansion reference (serial triple scan); kept as the
// independent route for tests and the benchmark
CocycleCheck is_mult_cocycle_direct(const Func& sigma);

// sigma composed with multiplication in one slot, as arity-3 functionals
Func compose_mult_left(const Func& sigma);   // sigma(m (x) 1)
Func compose_mult_right(const Func& sigma);  // sigma(1 (x) m)
Func tensor_eps_left(const Func& sigma);     // eps (x) sigma
Func tensor_eps_right(const Func& sigma);    // sigma (x) eps

// the power-truncation Hochschild cocycle zeta_i on a bosonized quantum linear
// space, with certification of its properties
struct ZetaCertificate {
    bool hochschild_cocycle = false;
    bool left_family_commutes = false;
    bool right_family_commutes = false;
};
Func zeta_cocycle(const Datum& d, const Hopf& A, long i, const Scalar& scale,
                  ZetaCertificate* cert = nullptr);

// checks that A_l = {eps (x) zeta_i, zeta_i(1 (x) m)} (resp. A_r) is
// convolution-commutative for the given set of zetas
bool commuting_family_left(const std::vector<Func>& zetas);
bool commuting_family_right(const std::vector<Func>& zetas);

// --- deformations ---

// A_sigma = (A, sigma * m * sigma^{-1}, Delta); verifies the axioms.
Hopf deform_multiplication(const Hopf& A, const Func& sigma, const VerifyMode* mode = nullptr);

struct Infinitesimal {
    long degree = -1;  // least positive s with sigma_s != 0; -1 for the unit
    Func part;         // sigma_s
    Func eta;          // -sigma_s
    bool cocycle_certified = false;
};
Infinitesimal infinitesimal_part(const Func& sigma);

// mu = (zeta (x) m - m (x) zeta) Delta_{A (x) A}, with the degree -n
// deformation identity certified on all basis triples
struct BilinearMap {
    const Hopf* H;
    std::vector<std::vector<SparseVec>> table;
};
BilinearMap infinitesimal_deformation(const Func& zeta, bool* identity_ok = nullptr);

// Psi_n: G-invariant cochains on B(V) -> two-sided invariant cochains on
// B(V) # kG, an isomorphism of complexes
Func psi_extend(const CochainAlgebra& B, const Cochain& f, long arity, const Datum& d, const Hopf& A);
Cochain psi_restrict(const Func& f, const CochainAlgebra& B, const Datum& d);

}  // namespace qlift
