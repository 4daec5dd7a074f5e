#pragma once

#include "qlift/hopf.hpp"

namespace qlift {

// A letter of a free word in the generators and group elements.
struct Letter {
    long gen = -1;  // generator index, or -1 when this is a group letter
    GrpElt grp;     // meaningful when gen < 0
    static Letter x(long i) { return Letter{i, {}}; }
    static Letter group(GrpElt g) { return Letter{-1, std::move(g)}; }
};
using Word = std::vector<Letter>;

// Straightening onto the PBW basis:
//   g x_i          -> chi_i(g) x_i g
//   x_j x_i (j>i)  -> chi_i(g_j) (x_i x_j - B_ij)
//   x_i^{N_i}      -> P_i
// where the rule tails B_ij and P_i are group-algebra elements. For H(a)
// they are B_ij = a_ij (g_i g_j - 1) and P_i = a_ii (g_i^{N_i} - 1).
// Terminating by the (x-degree, inversion count) order; idempotent on
// normal forms.
class Rewriter {
  public:
    Rewriter(const Datum& d, const LiftingParams& p);
    // general rule tails (each element must be supported on group monomials)
    Rewriter(const Datum& d, std::vector<Element> power_rhs,
             std::map<std::pair<long, long>, Element> bracket_rhs);

    Element normalize(const Word& w) const;
    Element mul(const PBWMono& m1, const PBWMono& m2) const;
    Element mul(const Element& e1, const Element& e2) const;
    const Datum& datum() const { return d_; }

  private:
    const Datum& d_;
    std::vector<Element> power_rhs_;
    std::map<std::pair<long, long>, Element> bracket_rhs_;
};

// H(a): the lifting of B(V) # kG with relations
//   [x_i, x_j] = a_ij (g_i g_j - 1),  x_i^{N_i} = a_ii (g_i^{N_i} - 1).
// a = 0 yields the bosonization itself. Axioms are verified before returning;
// a verification failure (non-confluent parameters) raises MathError.
Hopf build_lifting(const Datum& d, const LiftingParams& p,
                   const VerifyMode* mode = nullptr);

// same construction through an arbitrary rewriting system (used for the
// U(D, f) presentation route)
Hopf build_from_rewriter(const Datum& d, const Rewriter& rw, const VerifyMode* mode = nullptr);

// basis enumeration shared by builders: x^a g ordered by (exponents, group)
std::vector<PBWMono> pbw_basis(const Datum& d);

// Report of the dual-side invariants of a lifting presentation.
struct DualInvariants {
    std::vector<GrpElt> gprime;        // subgroup G' generated by the constraint elements
    long grouplike_count = 0;          // |G(H*)| = |annihilator of G'|
    std::vector<Character> grouplikes;
    long dim = 0;
    long radical_dim = 0;
    long dual_coradical_dim = 0;       // dim H - dim Rad H
    bool dual_pointed = false;
};

// The characters of G trivial on G'; these are exactly the algebra maps
// H(a) -> k (grouplikes of the dual).
std::vector<Character> grouplikes_of_dual(const Datum& d, const LiftingParams& p);
std::vector<GrpElt> constraint_subgroup(const Datum& d, const LiftingParams& p);

DualInvariants dual_invariants(const Datum& d, const LiftingParams& p, const Hopf& H);

}  // namespace qlift
