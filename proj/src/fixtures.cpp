#include "qlift/fixtures.hpp"

namespace qlift::fixtures {

Datum taft_datum(long n, long p) {
    return Datum(FinAbGroup({n * p}), {GrpElt{{1}}}, {Character{{p}}});
}

Datum rank2_cyclic(long p) {
    return Datum(FinAbGroup({p}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{1}}, Character{{p - 1}}});
}

Datum rank2_z6() {
    return Datum(FinAbGroup({6}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{2}}, Character{{4}}});
}

Datum prime_square_datum(long p) {
    return Datum(FinAbGroup({p * p}), {GrpElt{{1}}, GrpElt{{1}}},
                 {Character{{p}}, Character{{p * p - p}}});
}

Datum dim_p3_datum(long p) {
    return Datum(FinAbGroup({p}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{1}}, Character{{p - 1}}});
}

Datum evendim_datum(long p) {
    return Datum(FinAbGroup({2 * p}), {GrpElt{{1}}, GrpElt{{1}}},
                 {Character{{2}}, Character{{2 * p - 2}}});
}

Datum coprime_datum(long r, long s) {
    long n = r * s;
    return Datum(FinAbGroup({n}), {GrpElt{{1}}, GrpElt{{1}}}, {Character{{r}}, Character{{n - r}}});
}

Datum dual_deform_datum(long n, long p1, long p2) {
    return Datum(FinAbGroup({n * p1 * p2}), {GrpElt{{p1}}}, {Character{{p2}}});
}

Func taft_sigma(const Hopf& A, const Datum& d, const Scalar& a) {
    Func sigma = Func::conv_unit(&A, 2);
    long n = d.N(0);
    Scalar q = d.q(0, 0);
    for (long b1 = 0; b1 < A.dim(); ++b1) {
        const PBWMono& m1 = A.basis()[b1];
        for (long b2 = 0; b2 < A.dim(); ++b2) {
            const PBWMono& m2 = A.basis()[b2];
            if (m1.a[0] + m2.a[0] != n) continue;
            long u = m1.g.e[0];
            sigma.add({b1, b2}, a * q.pow(m2.a[0] * u));
        }
    }
    return sigma;
}

SparseVec taft_closed_form(const Hopf& A, const Datum& d, const Scalar& a, long b1, long b2) {
    const FinAbGroup& G = d.group();
    long n = d.N(0);
    Scalar q = d.q(0, 0);
    long i = A.basis()[b1].a[0], j = A.basis()[b1].g.e[0];
    long k = A.basis()[b2].a[0], l = A.basis()[b2].g.e[0];
    long alpha = (i + k) / n;
    long beta = (i + k) % n;
    SparseVec out;
    Scalar pre = q.pow(j * k);
    GrpElt gjl = G.reduce(GrpVec{{j + l}});
    if (i + k < n) {
        sv_add(out, A.index_of(PBWMono{{i + k}, gjl}), pre);
    }
    if (alpha == 1) {
        // a x^beta (1 - g^n) g^{j+l}
        sv_add(out, A.index_of(PBWMono{{beta}, gjl}), pre * a);
        sv_add(out, A.index_of(PBWMono{{beta}, G.reduce(GrpVec{{j + l + n}})}), -(pre * a));
    }
    return out;
}

}  // namespace qlift::fixtures

