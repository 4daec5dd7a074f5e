#include "doctest.h"
#include "qlift/lifting.hpp"

using namespace qlift;

namespace {
Datum taft6() { return Datum(FinAbGroup({6}), {GrpElt{{1}}}, {Character{{2}}}); }
Datum rank2_p3() {  // symmetric rank-2 pair over Z/p
    return Datum(FinAbGroup({3}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{1}}, Character{{2}}});
}
Datum prime_square(long p) {  // two-parameter datum over Z/p^2 (dim p^4)
    return Datum(FinAbGroup({p * p}), {GrpElt{{1}}, GrpElt{{1}}},
                 {Character{{p}}, Character{{p * p - p}}});
}
Datum evendim(long p) {  // even-order datum over Z/2p
    return Datum(FinAbGroup({2 * p}), {GrpElt{{1}}, GrpElt{{1}}},
                 {Character{{2}}, Character{{2 * p - 2}}});
}
Datum coprime(long r, long s) {  // coprime-order datum over Z/rs
    long n = r * s;
    return Datum(FinAbGroup({n}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{r}}, Character{{n - r}}});
}
}  // namespace

TEST_CASE("validate_params forces excluded entries to zero") {
    SUBCASE("g^n = 1 forces the diagonal to vanish") {
        Datum d(FinAbGroup({3}), {GrpElt{{1}}}, {Character{{1}}});  // G = Z/3, n = 3
        LiftingParams p = LiftingParams::zero(d);
        p.diag[0] = Scalar::one(d.field());
        std::vector<ForcedZero> rep;
        LiftingParams v = validate_params(d, p, &rep);
        CHECK(v.diag[0].is_zero());
        REQUIRE(rep.size() == 1);
        CHECK(rep[0].parameter == "a_11");
        CHECK(rep[0].reason.find("g_i^{N_i} = 1") != std::string::npos);
    }
    SUBCASE("taft6 diagonal is free") {
        Datum d = taft6();
        LiftingParams p = LiftingParams::zero(d);
        p.diag[0] = Scalar::one(d.field());
        std::vector<ForcedZero> rep;
        LiftingParams v = validate_params(d, p, &rep);
        CHECK(!v.diag[0].is_zero());
        CHECK(rep.empty());
    }
    SUBCASE("prime-square datum admits both parameters at odd p") {
        Datum d = prime_square(3);
        LiftingParams p = LiftingParams::zero(d);
        p.diag[0] = p.diag[1] = Scalar::one(d.field());
        p.link[{0, 1}] = Scalar::one(d.field());
        std::vector<ForcedZero> rep;
        LiftingParams v = validate_params(d, p, &rep);
        CHECK(rep.empty());
        CHECK(!v.diag[0].is_zero());
        CHECK(!v.link_at(0, 1).is_zero());
    }
    SUBCASE("eta != eps forces zero") {
        // rank 1 over Z/4 with chi(g) = zeta_4: N = 4? no - take chi(g) = i, N=4,
        // chi^4 = eps, g^4 = 1 -> forced by group part; use Z/8 chi = 2: N=4,
        // chi^4 = eps? chi^4(g) = zeta_8^8 = 1, g^4 != 1: free. Use chi = 1 on Z/8:
        // N = 8, g^8 = 1 forces zero.
        Datum d(FinAbGroup({8}), {GrpElt{{1}}}, {Character{{1}}});
        LiftingParams p = LiftingParams::zero(d);
        p.diag[0] = Scalar::one(d.field());
        std::vector<ForcedZero> rep;
        LiftingParams v = validate_params(d, p, &rep);
        CHECK(v.diag[0].is_zero());
    }
}

TEST_CASE("rank-1 lifting x^3 = a(g^3 - 1), dim 18, all axioms") {
    Datum d = taft6();
    LiftingParams p = LiftingParams::zero(d);
    p.diag[0] = Scalar::one(d.field());
    Hopf H = build_lifting(d, p);
    CHECK(H.dim() == 18);
    CHECK(H.verify().ok);
    // x^3 = g^3 - 1 under this presentation's sign convention
    long x = H.index_of(PBWMono{{1}, d.group().identity()});
    SparseVec x2 = H.mul(x, x);
    SparseVec x3 = H.mul(SparseVec{{x, Scalar::one(d.field())}}, x2);
    SparseVec expect;
    sv_add(expect, H.index_of(PBWMono{{0}, GrpElt{{3}}}), Scalar::one(d.field()));
    sv_add(expect, H.unit(), -Scalar::one(d.field()));
    CHECK(x3 == expect);
}

TEST_CASE("dim H(a) = |G| prod N_i independent of a") {
    Datum d = evendim(3);
    for (long av : {0L, 1L}) {
        for (long bv : {0L, 2L}) {
            LiftingParams p = LiftingParams::zero(d);
            p.diag[0] = p.diag[1] = Scalar::integer(d.field(), av);
            p.link[{0, 1}] = Scalar::integer(d.field(), bv);
            Hopf H = build_lifting(d, p);
            CHECK(H.dim() == 54);
            CHECK(H.verify(VerifyMode::sampled(3, 4000)).ok);
        }
    }
}

TEST_CASE("rank-2 bosonization over Z/3: dim 27 and x1 x2 = q^{-1} x2 x1") {
    Datum d = rank2_p3();
    Hopf H = build_lifting(d, LiftingParams::zero(d));
    CHECK(H.dim() == 27);
    Scalar q = Scalar::root_of_unity(d.field(), 1);
    long x1 = H.index_of(PBWMono{{1, 0}, d.group().identity()});
    long x2 = H.index_of(PBWMono{{0, 1}, d.group().identity()});
    SparseVec lhs = H.mul(x1, x2);
    SparseVec rhs = H.mul(x2, x1);
    // x1 x2 = q^{-1} x2 x1
    SparseVec scaled;
    sv_add(scaled, rhs, q.inverse());
    CHECK(lhs == scaled);
}

TEST_CASE("bosonization product matches (x # h)(x' # h') = x h(x') # h h'") {
    Datum d = rank2_p3();
    Hopf H = build_lifting(d, LiftingParams::zero(d));
    const auto& G = d.group();
    const CycloField* F = d.field();
    for (long b1 = 0; b1 < H.dim(); ++b1) {
        for (long b2 = 0; b2 < H.dim(); ++b2) {
            const PBWMono& m1 = H.basis()[b1];
            const PBWMono& m2 = H.basis()[b2];
            // h(x'): diagonal action scalar prod_i chi_i(h)^{a'_i}
            Scalar act = Scalar::one(F);
            for (long i = 0; i < d.rank(); ++i)
                if (m2.a[i]) act *= G.char_eval(F, d.chi(i), m1.g).pow(m2.a[i]);
            // x x' in the Nichols algebra: straighten x^a x^b with a = 0 params
            Rewriter rw(d, LiftingParams::zero(d));
            Word w;
            for (long i = 0; i < d.rank(); ++i)
                for (long t = 0; t < m1.a[i]; ++t) w.push_back(Letter::x(i));
            for (long i = 0; i < d.rank(); ++i)
                for (long t = 0; t < m2.a[i]; ++t) w.push_back(Letter::x(i));
            Element xpart = rw.normalize(w);
            SparseVec expect;
            GrpElt gh = G.mul(m1.g, m2.g);
            for (const auto& [m, c] : xpart) {
                PBWMono full{m.a, gh};
                sv_add(expect, H.index_of(full), act * c);
            }
            CHECK(H.mul(b1, b2) == expect);
        }
    }
}

TEST_CASE("dim-p^3 presentation relations at p = 3") {
    // g^p = 1, x^p = 0 = y^p, [x,y] = b(g^2 - 1)
    Datum d(FinAbGroup({3}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{1}}, Character{{2}}});
    LiftingParams p = LiftingParams::zero(d);
    p.link[{0, 1}] = Scalar::one(d.field());  // b = 1
    std::vector<ForcedZero> forced;
    LiftingParams v = validate_params(d, p, &forced);
    CHECK(forced.empty());
    Hopf H = build_lifting(d, v);
    CHECK(H.dim() == 27);
    const auto& G = d.group();
    long x = H.index_of(PBWMono{{1, 0}, G.identity()});
    long y = H.index_of(PBWMono{{0, 1}, G.identity()});
    // x^3 = 0
    SparseVec x3 = H.mul(SparseVec{{x, Scalar::one(d.field())}}, H.mul(x, x));
    CHECK(x3.empty());
    SparseVec y3 = H.mul(SparseVec{{y, Scalar::one(d.field())}}, H.mul(y, y));
    CHECK(y3.empty());
    // [x, y] = x y - chi_2(g_1) y x = b (g_1 g_2 - 1) = g^2 - 1
    Scalar q21 = d.q(0, 1);  // chi_2(g_1)
    SparseVec com = H.mul(x, y);
    sv_add(com, H.mul(y, x), -q21);
    SparseVec expect;
    sv_add(expect, H.index_of(PBWMono{{0, 0}, GrpElt{{2}}}), Scalar::one(d.field()));
    sv_add(expect, H.unit(), -Scalar::one(d.field()));
    CHECK(com == expect);
}

TEST_CASE("grouplikes of the dual") {
    SUBCASE("a = 0 gives all |G| characters") {
        Datum d = taft6();
        CHECK((long)grouplikes_of_dual(d, LiftingParams::zero(d)).size() == 6);
    }
    SUBCASE("Z/9 datum with b != 0: only the counit") {
        Datum d = prime_square(3);
        LiftingParams p = LiftingParams::zero(d);
        p.link[{0, 1}] = Scalar::one(d.field());
        CHECK((long)grouplikes_of_dual(d, p).size() == 1);
        // with a != 0 as well, still trivial
        p.diag[0] = p.diag[1] = Scalar::one(d.field());
        CHECK((long)grouplikes_of_dual(d, p).size() == 1);
    }
    SUBCASE("coprime example: 1 for s odd, 2 for s even") {
        {
            Datum d = coprime(2, 3);  // s = 3 odd
            LiftingParams p = LiftingParams::zero(d);
            p.diag[0] = p.diag[1] = Scalar::one(d.field());
            p.link[{0, 1}] = Scalar::one(d.field());
            CHECK((long)grouplikes_of_dual(d, p).size() == 1);
        }
        {
            Datum d = coprime(3, 2);  // s = 2 even
            LiftingParams p = LiftingParams::zero(d);
            p.diag[0] = p.diag[1] = Scalar::one(d.field());
            p.link[{0, 1}] = Scalar::one(d.field());
            CHECK((long)grouplikes_of_dual(d, p).size() == 2);
        }
    }
    SUBCASE("returned characters are algebra maps, others are not") {
        Datum d = taft6();
        LiftingParams p = LiftingParams::zero(d);
        p.diag[0] = Scalar::one(d.field());
        Hopf H = build_lifting(d, p);
        auto chars = grouplikes_of_dual(d, p);
        const auto& G = d.group();
        const CycloField* F = d.field();
        auto is_algebra_map = [&](const Character& chi) {
            // chi(x^a g) = [a = 0] chi(g), check multiplicativity on all pairs
            auto value = [&](long b) {
                const PBWMono& m = H.basis()[b];
                return m.xdeg() == 0 ? G.char_eval(F, chi, m.g) : Scalar::zero(F);
            };
            for (long i = 0; i < H.dim(); ++i)
                for (long j = 0; j < H.dim(); ++j) {
                    Scalar lhs(F);
                    for (const auto& [t, c] : H.mul(i, j)) lhs += c * value(t);
                    if (lhs != value(i) * value(j)) return false;
                }
            return true;
        };
        long good = 0;
        for (const auto& chi : G.elements()) {
            bool in_list = false;
            for (const auto& c : chars)
                if (c == chi) in_list = true;
            CHECK(is_algebra_map(chi) == in_list);
            if (in_list) ++good;
        }
        CHECK(good == (long)chars.size());
    }
}

TEST_CASE("dual invariants certify non-pointedness of nontrivial liftings") {
    Datum d = taft6();
    LiftingParams p = LiftingParams::zero(d);
    p.diag[0] = Scalar::one(d.field());
    Hopf H = build_lifting(d, p);
    auto inv = dual_invariants(d, p, H);
    CHECK(inv.dim == 18);
    CHECK(inv.grouplike_count < 6);
    CHECK(inv.dual_coradical_dim == inv.dim - inv.radical_dim);
    CHECK(inv.dual_coradical_dim > inv.grouplike_count);
    CHECK(!inv.dual_pointed);
    // trivial lifting: dual grouplike count = |G|
    Hopf H0 = build_lifting(d, LiftingParams::zero(d));
    auto inv0 = dual_invariants(d, LiftingParams::zero(d), H0);
    CHECK(inv0.grouplike_count == 6);
}
