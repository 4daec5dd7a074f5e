#include "doctest.h"
#include "qlift/dual.hpp"
#include "qlift/fixtures.hpp"
#include "qlift/irrep.hpp"

using namespace qlift;
using namespace qlift::fixtures;

TEST_CASE("identity dual cocycle deforms nothing") {
    Datum d = taft_datum(3, 2);
    Hopf A = build_lifting(d, LiftingParams::zero(d));
    CoCycle triv{&A, {{{A.unit(), A.unit()}, Scalar::one(A.field())}}};
    auto chk = check_dual_cocycle(triv);
    CHECK(chk.ok());
    Hopf As = deform_comultiplication(A, triv);
    for (long b = 0; b < A.dim(); ++b) CHECK(As.comult(b) == A.comult(b));
}

TEST_CASE("dual-pair comultiplication deformation in the valid regime p2 = 1") {
    // The dual twist of the displayed shape exists iff ord(alpha) | p1 n,
    // i.e. p2 = 1: the comultiplication deformation lives on the p2 = 1
    // member of the dual pair (the mult deformation on the p1 = 1 member).
    Datum d = dual_deform_datum(3, 2, 1);  // G = Z/6, coaction g^2
    REQUIRE(d.N(0) == 3);
    Hopf A = build_lifting(d, LiftingParams::zero(d));
    REQUIRE(A.dim() == 18);
    CoCycle sigma = dual_deform_cocycle(A, d, 2);
    auto chk = check_dual_cocycle(sigma);
    CHECK(chk.normalized);
    CHECK(chk.cocycle);
    CHECK(chk.invertible);
    Hopf As = deform_comultiplication(A, sigma);
    CHECK(As.verify().ok);
    const FinAbGroup& G = d.group();
    const CycloField* F = d.field();
    SUBCASE("Delta_sigma(x) = Delta(x)") {
        long x = A.index_of(PBWMono{{1}, G.identity()});
        CHECK(As.comult(x) == A.comult(x));
    }
    SUBCASE("Delta_sigma(g) = g x g + (1 - alpha^{p2 n}) zeta (g x g)") {
        long g = A.index_of(PBWMono{{0}, GrpElt{{1}}});
        Sparse2 expect;
        s2_add(expect, g, g, Scalar::one(F));
        Scalar alpha = Scalar::root_of_unity(F, 1);
        Scalar coeff = Scalar::one(F) - alpha.pow(1 * 3);  // 1 - alpha^{p2 n} = 2
        CHECK(coeff == Scalar::integer(F, 2));
        Sparse2 zgg;
        for (const auto& [p, c] : sigma.value) {
            if (p.first == A.unit() && p.second == A.unit()) continue;
            const PBWMono& m1 = A.basis()[p.first];
            const PBWMono& m2 = A.basis()[p.second];
            long left = A.index_of(PBWMono{m1.a, G.mul(m1.g, GrpElt{{1}})});
            long right = A.index_of(PBWMono{m2.a, G.mul(m2.g, GrpElt{{1}})});
            s2_add(zgg, left, right, c);
        }
        for (const auto& [p, c] : zgg) s2_add(expect, p.first, p.second, coeff * c);
        CHECK(As.comult(g) == expect);
    }
    SUBCASE("g^{p1} stays grouplike") {
        long g2 = A.index_of(PBWMono{{0}, GrpElt{{2}}});
        Sparse2 expect;
        s2_add(expect, g2, g2, Scalar::one(F));
        CHECK(As.comult(g2) == expect);
    }
    SUBCASE("radical filtration is preserved: multiplication unchanged") {
        for (long i = 0; i < A.dim(); ++i)
            for (long j = 0; j < A.dim(); ++j) CHECK(As.mul(i, j) == A.mul(i, j));
    }
}

TEST_CASE("parameters p1 = p2 = 2 obstruct the dual twist") {
    // the displayed element fails the dual 2-cocycle law when p2 != 1; an
    // exhaustive linear solve shows no degree-n dual cocycle exists at all
    Datum d = dual_deform_datum(3, 2, 2);
    Hopf A = build_lifting(d, LiftingParams::zero(d));
    REQUIRE(A.dim() == 36);
    CoCycle sigma = dual_deform_cocycle(A, d, 2);
    auto chk = check_dual_cocycle(sigma);
    CHECK(chk.normalized);
    CHECK(!chk.cocycle);
    CHECK_THROWS_AS(deform_comultiplication(A, sigma), MathError);
}

TEST_CASE("failing dual cocycle is rejected with a witness") {
    Datum d = taft_datum(3, 2);
    Hopf A = build_lifting(d, LiftingParams::zero(d));
    CoCycle bad{&A, {{{A.unit(), A.unit()}, Scalar::one(A.field())}}};
    long x = A.index_of(PBWMono{{1}, d.group().identity()});
    bad.value[{x, x}] = Scalar::one(A.field());
    auto chk = check_dual_cocycle(bad);
    CHECK(!chk.cocycle);
    CHECK_THROWS_AS(deform_comultiplication(A, bad), MathError);
}

TEST_CASE("irreducible representations of the dim-p^3 algebra") {
    for (long p : {3L, 5L}) {
        const CycloField* F = CycloField::get(p);
        long count = 0;
        for (long r = 1; r <= p; ++r) {
            Irrep rep = build_irrep(p, r, F);
            CHECK(rep.relations_ok);
            CHECK(rep.span_dim == r * r);
            CHECK(rep.irreducible());
            ++count;
        }
        CHECK(count == p);
    }
    SUBCASE("r = 1 is the counit representation") {
        Irrep rep = build_irrep(3, 1, CycloField::get(3));
        CHECK(rep.G[0][0].is_one());
        CHECK(rep.X[0][0].is_zero());
        CHECK(rep.Y[0][0].is_zero());
    }
    SUBCASE("frozen y-values at p = 3, r = 3") {
        const CycloField* F = CycloField::get(3);
        Scalar xi = Scalar::root_of_unity(F, 1);
        Irrep rep = build_irrep(3, 3, F);
        Scalar denom_inv = (xi - Scalar::one(F)).inverse();
        for (long i = 1; i < 3; ++i) {
            Scalar yi = xi * (Scalar::one(F) - xi.pow(i - 3)) * (xi.pow(i) - Scalar::one(F)) * denom_inv;
            CHECK(rep.Y[i - 1][i] == yi);
        }
    }
    SUBCASE("the other square root is rejected by the relation check") {
        // -psi also squares to xi^{1-r} but has (-psi)^p = -1, so g^p = 1 fails;
        // for odd p only the pinned root generates a representation
        Irrep rep = build_irrep(5, 3, CycloField::get(5), true);
        CHECK(!rep.relations_ok);
    }
    SUBCASE("out-of-range dimension is rejected") {
        CHECK_THROWS_AS(build_irrep(3, 4, CycloField::get(3)), InputError);
    }
}
