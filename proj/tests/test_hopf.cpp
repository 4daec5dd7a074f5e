#include "doctest.h"
#include "qlift/lifting.hpp"
#include "qlift/linalg.hpp"

using namespace qlift;

namespace {
Datum taft3() { return Datum(FinAbGroup({3}), {GrpElt{{1}}}, {Character{{1}}}); }   // Taft, dim 9
Datum taft6() { return Datum(FinAbGroup({6}), {GrpElt{{1}}}, {Character{{2}}}); }   // N = 3, dim 18
}  // namespace

TEST_CASE("group algebra satisfies all axioms") {
    FinAbGroup G({6});
    Hopf H = group_algebra(G, CycloField::get(6));
    auto rep = H.verify();
    CHECK(rep.ok);
    CHECK(rep.mode == "full");
    CHECK(rep.checked_triples == 216);
    CHECK((long)H.grouplike_basis().size() == 6);
}

TEST_CASE("Taft algebra passes and corrupted comultiplication fails") {
    Datum d = taft3();
    Hopf H = build_lifting(d, LiftingParams::zero(d));
    CHECK(H.dim() == 9);
    CHECK(H.verify().ok);

    // hand-expanded check that Delta(x^3) would be x^3 (x) 1 + g^3 (x) x^3
    // + vanishing q-binomial cross terms; with x^3 = 0 the compatibility
    // holds, which the full verifier already certifies. Negative control:
    // drop the g (x) x term of Delta(x).
    auto basis = H.basis();
    long xi = H.index_of(PBWMono{{1}, GrpElt{{0}}});
    long unit = H.unit();
    std::vector<Sparse2> comult(H.dim());
    for (long b = 0; b < H.dim(); ++b) comult[b] = H.comult(b);
    comult[xi] = Sparse2{{{xi, unit}, Scalar::one(H.field())}};
    std::vector<std::vector<SparseVec>> mult(H.dim(), std::vector<SparseVec>(H.dim()));
    for (long i = 0; i < H.dim(); ++i)
        for (long j = 0; j < H.dim(); ++j) mult[i][j] = H.mul(i, j);
    std::vector<Scalar> counit(H.dim());
    std::vector<Character> chars(H.dim());
    for (long b = 0; b < H.dim(); ++b) {
        counit[b] = H.counit(b);
        chars[b] = H.action_char(b);
    }
    Hopf bad = Hopf::from_tables(d.group(), H.field(), basis, std::move(mult), std::move(comult),
                                 std::move(counit), unit, std::move(chars));
    auto rep = bad.verify();
    CHECK(!rep.ok);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.find("not multiplicative") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("sampled verification mode is deterministic") {
    Datum d = taft6();
    Hopf H = build_lifting(d, LiftingParams::zero(d));
    auto r1 = H.verify(VerifyMode::sampled(42, 500));
    auto r2 = H.verify(VerifyMode::sampled(42, 500));
    CHECK(r1.ok);
    CHECK(r1.mode == "sampled(42,500)");
    CHECK(r1.checked_triples == r2.checked_triples);
}

TEST_CASE("antipode structure in rank 1") {
    Datum d = taft6();
    Hopf H = build_lifting(d, LiftingParams::zero(d));
    const auto& G = d.group();
    long x = H.index_of(PBWMono{{1}, G.identity()});
    // s(x) = -g^{-1} x
    SparseVec sx = H.antipode(x);
    long gx = H.index_of(PBWMono{{1}, G.inv(d.g(0))});
    Scalar qinv = G.char_eval(H.field(), d.chi(0), G.inv(d.g(0)));
    REQUIRE(sx.size() == 1);
    CHECK(sx.count(gx) == 1);
    CHECK(sx.at(gx) == -qinv);
    // s^2(x) = chi(g)^{-1} x
    SparseVec s2x = H.antipode(sx);
    REQUIRE(s2x.size() == 1);
    CHECK(s2x.at(x) == d.q(0, 0).inverse());
    // m(s (x) 1) Delta(x) = 0 = eps(x)
    SparseVec acc;
    for (const auto& [p, c] : H.comult(x)) {
        for (const auto& [w, cw] : H.antipode(p.first)) sv_add(acc, H.mul(w, p.second), c * cw);
    }
    CHECK(acc.empty());
}

TEST_CASE("solver fallback reproduces the antipode") {
    Datum d = taft3();
    Hopf H = build_lifting(d, LiftingParams::zero(d));
    Hopf H2 = H;
    H2.solve_antipode();
    for (long b = 0; b < H.dim(); ++b) CHECK(H.antipode(b) == H2.antipode(b));
    CHECK(H2.verify().ok);
}

TEST_CASE("a bialgebra without antipode is detected") {
    // monoid bialgebra of the idempotent monoid {1, e}: e s(e) = eps(e) 1 = 1
    // has no solution since e (1 - e) = 0
    const CycloField* F = CycloField::get(1);
    FinAbGroup G({1});
    std::vector<PBWMono> basis{PBWMono{{0}, G.identity()}, PBWMono{{1}, G.identity()}};
    std::vector<std::vector<SparseVec>> mult(2, std::vector<SparseVec>(2));
    mult[0][0][0] = Scalar::one(F);
    mult[0][1][1] = Scalar::one(F);
    mult[1][0][1] = Scalar::one(F);
    mult[1][1][1] = Scalar::one(F);  // e * e = e
    std::vector<Sparse2> comult(2);
    comult[0][{0, 0}] = Scalar::one(F);
    comult[1][{1, 1}] = Scalar::one(F);
    std::vector<Scalar> counit{Scalar::one(F), Scalar::one(F)};
    std::vector<Character> chars(2, G.trivial_char());
    Hopf B = Hopf::from_tables(G, F, basis, std::move(mult), std::move(comult), std::move(counit), 0,
                               std::move(chars));
    CHECK(B.verify().ok);  // bialgebra axioms hold without an antipode
    CHECK_THROWS_AS(B.solve_antipode(), MathError);
}

TEST_CASE("radical computations") {
    SUBCASE("group algebra is semisimple") {
        FinAbGroup G({6});
        Hopf H = group_algebra(G, CycloField::get(6));
        CHECK(radical_basis(H.algebra_table()).empty());
    }
    SUBCASE("Taft radical is the positive-degree part") {
        Datum d = taft3();
        Hopf H = build_lifting(d, LiftingParams::zero(d));
        auto rad = radical_basis(H.algebra_table());
        CHECK((long)rad.size() == 6);
        // no nonzero kG combination is radical: stack kG basis onto the radical
        RowEchelon span(H.dim());
        std::vector<SparseRow> rows;
        for (const auto& r : rad) rows.push_back(SparseRow(r.begin(), r.end()));
        span.insert_all(std::move(rows));
        long rank_before = span.rank();
        long added = 0;
        for (long b = 0; b < H.dim(); ++b) {
            if (H.basis()[b].xdeg() != 0) continue;
            SparseRow r{{b, Scalar::one(H.field())}};
            if (span.insert(std::move(r))) ++added;
        }
        CHECK(added == 3);  // all of kG is new: radical meets kG trivially
        CHECK(span.rank() == rank_before + 3);
    }
    SUBCASE("2x2 matrix algebra is semisimple") {
        // e_ij basis: e_ij e_kl = [j=k] e_il
        AlgebraTable A;
        A.dim = 4;
        A.F = CycloField::get(1);
        A.mult.assign(4, std::vector<SparseVec>(4));
        auto idx = [](long i, long j) { return 2 * i + j; };
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                for (long k = 0; k < 2; ++k)
                    for (long l = 0; l < 2; ++l)
                        if (j == k) A.mult[idx(i, j)][idx(k, l)][idx(i, l)] = Scalar::one(A.F);
        CHECK(radical_basis(A).empty());
    }
    SUBCASE("nilpotent ideal found: k[x]/(x^2)") {
        AlgebraTable A;
        A.dim = 2;
        A.F = CycloField::get(1);
        A.mult.assign(2, std::vector<SparseVec>(2));
        A.mult[0][0][0] = Scalar::one(A.F);
        A.mult[0][1][1] = Scalar::one(A.F);
        A.mult[1][0][1] = Scalar::one(A.F);
        auto rad = radical_basis(A);
        REQUIRE((long)rad.size() == 1);
        CHECK(rad[0].count(1) == 1);
    }
}

TEST_CASE("coradical filtration") {
    SUBCASE("group algebra is cosemisimple: constant filtration") {
        FinAbGroup G({5});
        Hopf H = group_algebra(G, CycloField::get(5));
        auto f = H.coradical_filtration();
        CHECK(f.dims == std::vector<long>{5});
    }
    SUBCASE("rank-1 lifting dims [6, 12, 18] for any admissible a") {
        Datum d = taft6();
        for (long aval : {0L, 1L, 2L}) {
            LiftingParams p = LiftingParams::zero(d);
            p.diag[0] = Scalar::integer(d.field(), aval);
            Hopf H = build_lifting(d, p);
            auto f = H.coradical_filtration();
            CHECK(f.dims == std::vector<long>{6, 12, 18});
            CHECK(f.layer_dims == std::vector<long>{6, 6, 6});
            // strictly increasing until it exhausts H
            for (size_t i = 1; i < f.dims.size(); ++i) CHECK(f.dims[i] > f.dims[i - 1]);
            CHECK(f.dims.back() == H.dim());
        }
    }
}
