#include "doctest.h"
#include "qlift/qbinom.hpp"
#include "qlift/tensor.hpp"

using namespace qlift;

namespace {

Datum rank1_z6() {  // q = zeta_6^2 of order 3 on Z/6
    return Datum(FinAbGroup({6}), {GrpElt{{1}}}, {Character{{2}}});
}
Datum rank1_primitive(long n) {  // G = Z/n, q = zeta_n, N = n
    return Datum(FinAbGroup({n}), {GrpElt{{1}}}, {Character{{1}}});
}
Datum rank2_cyclic(long p) {  // symmetric rank-2 datum over Z/p
    return Datum(FinAbGroup({p}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{1}}, Character{{p - 1}}});
}
Datum rank2_z6() {  // t = 2 over Z/6, N_1 = N_2 = 3
    return Datum(FinAbGroup({6}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{2}}, Character{{4}}});
}

TensorElt word_elt(const Datum& d, std::initializer_list<int> letters) {
    TensorWord w;
    for (int l : letters) w.push_back((std::uint8_t)l);
    TensorElt t;
    t[w] = Scalar::one(d.field());
    return t;
}

bool elt_eq(const TensorElt& a, const TensorElt& b) { return a == b; }

// compose braid generator actions
TensorElt apply_seq(const Braided& B, std::initializer_list<long> gens, const TensorElt& t) {
    TensorElt cur = t;
    for (long g : gens) cur = B.braid_generator(g, cur);
    return cur;
}

}  // namespace

TEST_CASE("braiding matrix") {
    SUBCASE("symmetric rank-2 pair: [[q, 1/q], [q, 1/q]]") {
        Datum d = rank2_cyclic(5);
        auto m = d.braiding_matrix();
        Scalar q = Scalar::root_of_unity(d.field(), 1);
        CHECK(m[0][0] == q);
        CHECK(m[0][1] == q.inverse());
        CHECK(m[1][0] == q);
        CHECK(m[1][1] == q.inverse());
        CHECK(d.N(0) == 5);
        CHECK(d.N(1) == 5);
    }
    SUBCASE("rank 1") {
        Datum d = rank1_primitive(7);
        auto m = d.braiding_matrix();
        CHECK(m[0][0] == Scalar::root_of_unity(d.field(), 1));
    }
    SUBCASE("QLS condition") {
        Datum d = rank2_z6();
        CHECK((d.q(0, 1) * d.q(1, 0)).is_one());
        // violating pair rejected at construction
        CHECK_THROWS_AS(Datum(FinAbGroup({5}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{1}}, Character{{1}}}),
                        InputError);
    }
}

TEST_CASE("braid generator action and braid relations") {
    Datum d = rank1_z6();
    Braided B(d);
    Scalar q = d.q(0, 0);
    CHECK(elt_eq(B.braid_generator(1, word_elt(d, {0, 0})),
                 TensorElt{{TensorWord{0, 0}, q}}));

    Datum d2 = rank2_z6();
    Braided B2(d2);
    // all adjacent and far relations for every generator pair up to n = 5
    for (long n = 3; n <= 5; ++n) {
        for (const auto& w : B2.word_basis(n)) {
            TensorElt t;
            t[w] = Scalar::one(d2.field());
            for (long i = 1; i + 1 <= n - 1; ++i)
                CHECK(elt_eq(apply_seq(B2, {i, i + 1, i}, t), apply_seq(B2, {i + 1, i, i + 1}, t)));
            for (long i = 1; i <= n - 1; ++i)
                for (long j = i + 2; j <= n - 1; ++j)
                    CHECK(elt_eq(apply_seq(B2, {i, j}, t), apply_seq(B2, {j, i}, t)));
        }
    }
    CHECK_THROWS_AS(B2.braid_generator(3, word_elt(d2, {0, 1})), InputError);
}

TEST_CASE("quantum symmetrizer in rank 1") {
    Datum d = rank1_z6();  // N = 3
    Braided B(d);
    Scalar q = d.q(0, 0);
    // S_2(x (x) x) = (1 + q) x (x) x
    TensorElt s2 = B.symmetrize_word(TensorWord{0, 0});
    CHECK(elt_eq(s2, TensorElt{{TensorWord{0, 0}, Scalar::one(d.field()) + q}}));
    // S_n(x^n) = n_q! x^n, zero exactly at n = ord(q)
    for (long n = 1; n <= 4; ++n) {
        TensorWord w(n, 0);
        TensorElt img = B.symmetrize_word(w);
        Scalar expect = qfactorial(n, q);
        if (expect.is_zero()) {
            CHECK(img.empty());
        } else {
            CHECK(elt_eq(img, TensorElt{{w, expect}}));
        }
        if (n == 3) CHECK(img.empty());
    }
}

TEST_CASE("Matsumoto lift independent of the reduced word") {
    Datum d = rank2_z6();
    Braided B(d);
    for (long n = 2; n <= 4; ++n) {
        auto words = B.word_basis(n);
        for (const auto& perm : all_permutations(n)) {
            auto rw1 = reduced_word_bubble(perm);
            auto rw2 = reduced_word_insertion(perm);
            REQUIRE(rw1.size() == rw2.size());  // both reduced
            for (const auto& w : words) {
                TensorElt t;
                t[w] = Scalar::one(d.field());
                TensorElt a = t, b = t;
                for (auto it = rw1.begin(); it != rw1.end(); ++it) a = B.braid_generator(*it, a);
                for (auto it = rw2.begin(); it != rw2.end(); ++it) b = B.braid_generator(*it, b);
                CHECK(elt_eq(a, b));
            }
        }
    }
}

TEST_CASE("shuffle factorization S_{i,j} (S_i x S_j) = S_n") {
    Datum d = rank2_z6();
    Braided B(d);
    // With the left-action word convention used here the unique coset
    // factorization composes as (S_i (x) S_j) after S_{i,j}; this is the
    // matrix identity behind Delta_A being an algebra map.
    for (long n = 2; n <= 5; ++n) {
        for (long i = 0; i <= n; ++i) {
            long j = n - i;
            for (const auto& w : B.word_basis(n)) {
                TensorElt shuffled = B.shuffle_piece(i, j, w);
                TensorElt lhs;
                for (const auto& [u, c] : shuffled) {
                    TensorWord pre(u.begin(), u.begin() + i);
                    TensorWord suf(u.begin() + i, u.end());
                    TensorElt spre = i ? B.symmetrize_word(pre) : TensorElt{{TensorWord{}, Scalar::one(d.field())}};
                    TensorElt ssuf = j ? B.symmetrize_word(suf) : TensorElt{{TensorWord{}, Scalar::one(d.field())}};
                    for (const auto& [a, ca] : spre)
                        for (const auto& [b, cb] : ssuf) tensor_add(lhs, Braided::concat(a, b), c * ca * cb);
                }
                CHECK(elt_eq(lhs, B.symmetrize_word(w)));
            }
        }
    }
}

TEST_CASE("shuffle coproduct") {
    Datum d = rank1_z6();
    Braided B(d);
    SUBCASE("degree 1 primitives") {
        TensorElt2 del = B.shuffle_coproduct(word_elt(d, {0}));
        TensorElt2 expect;
        tensor_add2(expect, TensorWord{0}, TensorWord{}, Scalar::one(d.field()));
        tensor_add2(expect, TensorWord{}, TensorWord{0}, Scalar::one(d.field()));
        CHECK(del == expect);
    }
    SUBCASE("rank 1: Delta(x^m) = sum of q-binomials") {
        Scalar q = d.q(0, 0);
        for (long m = 1; m <= 5; ++m) {
            TensorElt2 del = B.shuffle_coproduct(TensorElt{{TensorWord(m, 0), Scalar::one(d.field())}});
            TensorElt2 expect;
            for (long r = 0; r <= m; ++r)
                tensor_add2(expect, TensorWord(r, 0), TensorWord(m - r, 0), qbinom(m, r, q));
            CHECK(del == expect);
        }
    }
    SUBCASE("coassociativity on degree <= 4 words, rank 2") {
        Datum d2 = rank2_z6();
        Braided B2(d2);
        for (long n = 1; n <= 4; ++n) {
            for (const auto& w : B2.word_basis(n)) {
                TensorElt t;
                t[w] = Scalar::one(d2.field());
                TensorElt2 del = B2.shuffle_coproduct(t);
                // (Delta x 1) Delta and (1 x Delta) Delta as triple maps
                std::map<std::tuple<TensorWord, TensorWord, TensorWord>, Scalar> lhs, rhs;
                for (const auto& [p, c] : del) {
                    TensorElt left;
                    left[p.first] = c;
                    for (const auto& [pp, cc] : B2.shuffle_coproduct(left)) {
                        auto key = std::make_tuple(pp.first, pp.second, p.second);
                        auto it = lhs.find(key);
                        if (it == lhs.end()) lhs[key] = cc;
                        else { it->second += cc; if (it->second.is_zero()) lhs.erase(it); }
                    }
                    TensorElt right;
                    right[p.second] = c;
                    for (const auto& [pp, cc] : B2.shuffle_coproduct(right)) {
                        auto key = std::make_tuple(p.first, pp.first, pp.second);
                        auto it = rhs.find(key);
                        if (it == rhs.end()) rhs[key] = cc;
                        else { it->second += cc; if (it->second.is_zero()) rhs.erase(it); }
                    }
                }
                CHECK(lhs == rhs);
            }
        }
    }
    SUBCASE("components agree with the S_{i,j} route") {
        Datum d2 = rank2_z6();
        Braided B2(d2);
        for (long n = 1; n <= 4; ++n) {
            for (const auto& w : B2.word_basis(n)) {
                TensorElt t;
                t[w] = Scalar::one(d2.field());
                TensorElt2 del = B2.shuffle_coproduct(t);
                for (long i = 0; i <= n; ++i) {
                    long j = n - i;
                    // collect the (i,j) component of Delta(w)
                    TensorElt2 comp;
                    for (const auto& [p, c] : del)
                        if ((long)p.first.size() == i) tensor_add2(comp, p.first, p.second, c);
                    // S_{i,j} route: split the permuted words
                    TensorElt piece = B2.shuffle_piece(i, j, w);
                    TensorElt2 viaS;
                    for (const auto& [v, c] : piece) {
                        TensorWord a(v.begin(), v.begin() + i), b(v.begin() + i, v.end());
                        tensor_add2(viaS, a, b, c);
                    }
                    CHECK(comp == viaS);
                }
            }
        }
    }
}

TEST_CASE("braided commutators") {
    SUBCASE("[x,x]_c = (1-q) xx in rank 1") {
        Datum d = rank1_z6();
        Braided B(d);
        TensorElt c = B.braided_commutator(B.generator(0), B.generator(0));
        Scalar expect = Scalar::one(d.field()) - d.q(0, 0);
        CHECK(elt_eq(c, TensorElt{{TensorWord{0, 0}, expect}}));
    }
    SUBCASE("QLS pair: c^2 = id and the commutator is primitive") {
        Datum d = rank2_cyclic(3);
        Braided B(d);
        // c^2(x_1 (x) x_2) = x_1 (x) x_2
        TensorElt t = word_elt(d, {0, 1});
        CHECK(elt_eq(B.braid_generator(1, B.braid_generator(1, t)), t));
        // Delta([x_1,x_2]_c) = prim (x) 1 + 1 (x) prim
        TensorElt com = B.braided_commutator(B.generator(0), B.generator(1));
        TensorElt2 del = B.shuffle_coproduct(com);
        TensorElt2 expect;
        for (const auto& [w, c] : com) {
            tensor_add2(expect, w, TensorWord{}, c);
            tensor_add2(expect, TensorWord{}, w, c);
        }
        CHECK(del == expect);
    }
    SUBCASE("iterated ad_c") {
        Datum d = rank2_z6();
        Braided B(d);
        // ad_{x_1}^1(x_2) equals the plain c-bracket
        CHECK(B.ad_power(0, 1, 1) == B.braided_commutator(B.generator(0), B.generator(1)));
    }
}

TEST_CASE("Nichols relations (kernel of the symmetrizer)") {
    SUBCASE("rank 2 QLS degree 2: q-commutators lie in the kernel") {
        Datum d = rank2_z6();
        Braided B(d);
        auto kernel = B.nichols_relations(2);
        // the commutator x_i (x) x_j - chi_j(g_i) x_j (x) x_i is annihilated
        TensorElt com = B.braided_commutator(B.generator(0), B.generator(1));
        CHECK(B.symmetrize(com).empty());
        // and lies in the span of the computed kernel
        RowEchelon span(4);
        std::vector<SparseRow> rows = kernel;
        span.insert_all(rows);
        SparseRow comrow;
        for (const auto& [w, c] : com) comrow[B.word_index(w)] = c;
        CHECK(span.contains(comrow));
    }
    SUBCASE("rank 1: kernel dimension jumps exactly at N") {
        Datum d = rank1_z6();  // N = 3
        Braided B(d);
        CHECK(B.nichols_relations(1).empty());
        CHECK(B.nichols_relations(2).empty());
        auto k3 = B.nichols_relations(3);
        REQUIRE((long)k3.size() == 1);
        // spanned by x^{(x)3}
        CHECK(k3[0].size() == 1);
        CHECK(k3[0].begin()->first == 0);
    }
    SUBCASE("image rank matches the PBW count") {
        Datum d = rank2_z6();  // N_1 = N_2 = 3
        Braided B(d);
        for (long n = 0; n <= 4; ++n) {
            long count = 0;
            for (long a = 0; a <= 2; ++a)
                for (long b = 0; b <= 2; ++b)
                    if (a + b == n) ++count;
            CHECK(B.image_rank(n) == count);
        }
    }
    SUBCASE("kernel is a subcomodule: Delta ker < ker (x) T + T (x) ker") {
        Datum d = rank2_z6();
        Braided B(d);
        for (long n = 2; n <= 4; ++n) {
            auto kernel = B.nichols_relations(n);
            // per bidegree (i, j): quotient by ker_i (x) T_j + T_i (x) ker_j
            for (const auto& kv : kernel) {
                TensorElt e;
                auto words = B.word_basis(n);
                for (const auto& [idx, c] : kv) e[words[idx]] = c;
                TensorElt2 del = B.shuffle_coproduct(e);
                for (long i = 1; i < n; ++i) {
                    long j = n - i;
                    long di = 1, dj = 1;
                    for (long t = 0; t < i; ++t) di *= d.rank();
                    for (long t = 0; t < j; ++t) dj *= d.rank();
                    // building the subspace in T_i (x) T_j coordinates
                    std::vector<SparseRow> gens;
                    for (const auto& kr : B.nichols_relations(i)) {
                        for (long col = 0; col < dj; ++col) {
                            SparseRow r;
                            for (const auto& [idx, c] : kr) r[idx * dj + col] = c;
                            gens.push_back(std::move(r));
                        }
                    }
                    for (const auto& kr : B.nichols_relations(j)) {
                        for (long row = 0; row < di; ++row) {
                            SparseRow r;
                            for (const auto& [idx, c] : kr) r[row * dj + idx] = c;
                            gens.push_back(std::move(r));
                        }
                    }
                    RowEchelon span(di * dj);
                    span.insert_all(std::move(gens));
                    SparseRow comp;
                    for (const auto& [p, c] : del) {
                        if ((long)p.first.size() != i) continue;
                        comp[B.word_index(p.first) * dj + B.word_index(p.second)] = c;
                    }
                    CHECK(span.contains(comp));
                }
            }
        }
    }
}

TEST_CASE("size budget enforcement") {
    Datum d = rank2_z6();
    Braided B(d);
    long saved = Braided::basis_budget;
    Braided::basis_budget = 8;
    CHECK_THROWS_AS(B.word_basis(4), ResourceError);
    Braided::basis_budget = saved;
}
