#include "doctest.h"
#include "qlift/group.hpp"

using namespace qlift;

TEST_CASE("pairing on Z/6") {
    FinAbGroup G({6});
    const CycloField* F = CycloField::get(6);
    GrpElt g{{1}};
    Character chi{{1}};
    CHECK(G.char_eval(F, chi, g) == Scalar::root_of_unity(F, 1));
    // counit on everything
    for (const auto& h : G.elements()) CHECK(G.char_eval(F, G.trivial_char(), h).is_one());
    // full pairing table chi^a(g^b) = zeta_6^{ab}, brute force
    for (long a = 0; a < 6; ++a)
        for (long b = 0; b < 6; ++b)
            CHECK(G.char_eval(F, G.power(chi, a), G.power(g, b)) == Scalar::root_of_unity(F, a * b));
}

TEST_CASE("pairing is bimultiplicative on a product group") {
    FinAbGroup G({4, 3});
    const CycloField* F = CycloField::get(12);
    auto els = G.elements();
    CHECK((long)els.size() == 12);
    for (const auto& c1 : els)
        for (const auto& c2 : els)
            for (const auto& h : els) {
                CHECK(G.char_eval(F, G.char_mul(c1, c2), h) == G.char_eval(F, c1, h) * G.char_eval(F, c2, h));
                CHECK(G.char_eval(F, c1, G.mul(h, c2)) == G.char_eval(F, c1, h) * G.char_eval(F, c1, c2));
            }
}

TEST_CASE("subgroup closure and annihilator") {
    FinAbGroup G({9});
    // trivial generators
    auto triv = G.subgroup({G.identity()});
    CHECK((long)triv.size() == 1);
    CHECK((long)G.annihilator(triv).size() == 9);
    // <g^3> in Z/9
    auto sub = G.subgroup({GrpElt{{3}}});
    CHECK((long)sub.size() == 3);
    auto ann = G.annihilator(sub);
    CHECK((long)ann.size() == 3);
    // brute-force check of the annihilator by pairing
    for (const auto& chi : ann)
        for (const auto& s : sub) CHECK(G.char_eval_exponent(9, chi, s) == 0);
}

TEST_CASE("exactness |G'| * |annihilator| = |G|") {
    FinAbGroup G({6, 2});
    auto els = G.elements();
    for (const auto& a : els)
        for (const auto& b : els) {
            auto sub = G.subgroup({a, b});
            auto ann = G.annihilator(sub);
            CHECK((long)(sub.size() * ann.size()) == G.order());
            // annihilator is closed under multiplication
            for (const auto& c1 : ann)
                for (const auto& c2 : ann) {
                    auto prod = G.char_mul(c1, c2);
                    bool found = false;
                    for (const auto& c : ann)
                        if (c == prod) found = true;
                    CHECK(found);
                }
        }
}

TEST_CASE("prime-square subgroup: <g^p, g^2> = G in Z/p^2") {
    FinAbGroup G({9});
    auto sub = G.subgroup({GrpElt{{3}}, GrpElt{{2}}});
    CHECK((long)sub.size() == 9);
    CHECK((long)G.annihilator(sub).size() == 1);
}

TEST_CASE("element orders") {
    FinAbGroup G({6, 4});
    CHECK(G.element_order(G.identity()) == 1);
    CHECK(G.element_order(GrpElt{{3, 0}}) == 2);
    CHECK(G.element_order(GrpElt{{1, 1}}) == 12);
    CHECK(G.exponent() == 12);
    CHECK(G.order() == 24);
}
