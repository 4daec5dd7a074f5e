#include "doctest.h"
#include "qlift/lifting.hpp"

using namespace qlift;

namespace {
Datum taft6() { return Datum(FinAbGroup({6}), {GrpElt{{1}}}, {Character{{2}}}); }  // N = 3
Datum linked2_z6() {
    return Datum(FinAbGroup({6}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{2}}, Character{{4}}});
}
}  // namespace

TEST_CASE("render and parse monomials") {
    FinAbGroup G({6});
    PBWMono m{{2, 1}, GrpElt{{3}}};
    CHECK(render_mono(m, G) == "x1^2 x2 g^3");
    CHECK(parse_mono("x1^2 x2 g^3", 2, G) == m);
    CHECK(parse_mono("1", 2, G) == (PBWMono{{0, 0}, GrpElt{{0}}}));
    CHECK(render_mono(PBWMono{{0, 0}, GrpElt{{0}}}, G) == "1");
    FinAbGroup G2({4, 3});
    PBWMono m2{{1}, GrpElt{{2, 1}}};
    CHECK(render_mono(m2, G2) == "x1 g1^2 g2");
    CHECK(parse_mono("x1 g1^2 g2", 1, G2) == m2);
    CHECK_THROWS_AS(parse_mono("x9", 2, G), InputError);
    CHECK_THROWS_AS(parse_mono("y1", 2, G), InputError);
}

TEST_CASE("single rule applications") {
    Datum d = linked2_z6();
    const auto& G = d.group();
    const CycloField* F = d.field();
    Scalar one = Scalar::one(F);
    SUBCASE("group past generator") {
        LiftingParams p = LiftingParams::zero(d);
        Rewriter rw(d, p);
        GrpElt g{{1}};
        Element e = rw.normalize({Letter::group(g), Letter::x(0)});
        Element expect;
        expect[PBWMono{{1, 0}, g}] = G.char_eval(F, d.chi(0), g);
        CHECK(e == expect);
    }
    SUBCASE("out-of-order pair with linking") {
        LiftingParams p = LiftingParams::zero(d);
        p.link[{0, 1}] = one;  // a_12 = 1
        Rewriter rw(d, p);
        Element e = rw.normalize({Letter::x(1), Letter::x(0)});
        Scalar f = G.char_eval(F, d.chi(0), d.g(1));  // chi_1(g_2)
        Element expect;
        expect[PBWMono{{1, 1}, G.identity()}] = f;
        expect[PBWMono{{0, 0}, G.mul(d.g(0), d.g(1))}] = -f;
        expect[PBWMono{{0, 0}, G.identity()}] = f;
        CHECK(e == expect);
    }
    SUBCASE("power rule then commutation: x^{n+1} -> a (x g^n - x)") {
        Datum d1 = taft6();
        LiftingParams p = LiftingParams::zero(d1);
        p.diag[0] = one;  // admissible: g^3 != 1, chi^3 = eps
        Rewriter rw(d1, p);
        Element e = rw.normalize(Word(4, Letter::x(0)));  // x^4, n = 3
        Element expect;
        expect[PBWMono{{1}, GrpElt{{3}}}] = Scalar::one(d1.field());
        expect[PBWMono{{1}, GrpElt{{0}}}] = -Scalar::one(d1.field());
        CHECK(e == expect);
    }
}

TEST_CASE("normalize is idempotent and degree-nonincreasing") {
    Datum d = linked2_z6();
    LiftingParams p = LiftingParams::zero(d);
    p.diag[0] = Scalar::one(d.field());
    p.diag[1] = Scalar::integer(d.field(), 2);
    p.link[{0, 1}] = Scalar::root_of_unity(d.field(), 1);
    Rewriter rw(d, p);
    // deterministic pseudo-random words
    std::uint64_t s = 12345;
    auto rnd = [&]() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    };
    for (int trial = 0; trial < 60; ++trial) {
        Word w;
        long len = 1 + rnd() % 7;
        long deg = 0;
        for (long t = 0; t < len; ++t) {
            if (rnd() % 3 == 0) {
                w.push_back(Letter::group(GrpElt{{(long)(rnd() % 6)}}));
            } else {
                w.push_back(Letter::x(rnd() % 2));
                ++deg;
            }
        }
        Element e = rw.normalize(w);
        for (const auto& [m, c] : e) {
            CHECK(m.xdeg() <= deg);
            // renormalizing a normal monomial is the identity
            Word back;
            for (long i = 0; i < d.rank(); ++i)
                for (long t = 0; t < m.a[i]; ++t) back.push_back(Letter::x(i));
            if (!d.group().is_identity(m.g)) back.push_back(Letter::group(m.g));
            Element again = rw.normalize(back);
            REQUIRE(again.size() == 1);
            CHECK(again.begin()->first == m);
            CHECK(again.begin()->second.is_one());
        }
    }
}
