#include "qlift/dual.hpp"

#include "qlift/parallel.hpp"
#include "qlift/qbinom.hpp"

namespace qlift {

namespace {

// (Delta x 1) and (1 x Delta) applied to an element of A (x) A
Sparse3 delta_left(const Hopf& H, const Sparse2& v) {
    Sparse3 out;
    for (const auto& [p, c] : v)
        for (const auto& [q, c2] : H.comult(p.first)) s3_add(out, q.first, q.second, p.second, c * c2);
    return out;
}

Sparse3 delta_right(const Hopf& H, const Sparse2& v) {
    Sparse3 out;
    for (const auto& [p, c] : v)
        for (const auto& [q, c2] : H.comult(p.second)) s3_add(out, p.first, q.first, q.second, c * c2);
    return out;
}

Sparse3 embed_left(const Hopf& H, const Sparse2& v) {  // sigma (x) 1
    Sparse3 out;
    for (const auto& [p, c] : v) s3_add(out, p.first, p.second, H.unit(), c);
    return out;
}

Sparse3 embed_right(const Hopf& H, const Sparse2& v) {  // 1 (x) sigma
    Sparse3 out;
    for (const auto& [p, c] : v) s3_add(out, H.unit(), p.first, p.second, c);
    return out;
}

}  // namespace

DualCocycleCheck check_dual_cocycle(const CoCycle& sigma) {
    const Hopf& H = *sigma.H;
    DualCocycleCheck out;
    // counit normalization
    SparseVec l, r;
    for (const auto& [p, c] : sigma.value) {
        sv_add(l, p.second, c * H.counit(p.first));
        sv_add(r, p.first, c * H.counit(p.second));
    }
    SparseVec unit_vec{{H.unit(), Scalar::one(H.field())}};
    out.normalized = (l == unit_vec) && (r == unit_vec);
    // multiplicative 2-cocycle law in A (x) A (x) A
    Sparse3 lhs = H.mul3(embed_left(H, sigma.value), delta_left(H, sigma.value));
    Sparse3 rhs = H.mul3(embed_right(H, sigma.value), delta_right(H, sigma.value));
    out.cocycle = lhs == rhs;
    try {
        (void)s2_inverse(H, sigma.value);
        out.invertible = true;
    } catch (const MathError&) {
        out.invertible = false;
    }
    return out;
}

Sparse2 s2_inverse(const Hopf& H, const Sparse2& v) {
    // v = 1 (x) 1 + nu with nu of positive degree; invert by geometric series
    Sparse2 unit{{{H.unit(), H.unit()}, Scalar::one(H.field())}};
    Sparse2 nu = v;
    {
        auto it = nu.find({H.unit(), H.unit()});
        if (it == nu.end() || !it->second.is_one())
            throw MathError("dual cocycle must have unit coefficient 1 at 1 (x) 1");
        nu.erase(it);
    }
    for (const auto& [p, c] : nu)
        if (H.xdeg(p.first) + H.xdeg(p.second) == 0)
            throw MathError("dual cocycle tail must have positive degree");
    Sparse2 acc = unit;
    Sparse2 term = unit;
    long cap = 2 * H.dim() + 2;
    for (long k = 1; k <= cap; ++k) {
        term = H.mul2(term, nu);
        // negate
        for (auto& [p, c] : term) c = -c;
        if (term.empty()) break;
        for (const auto& [p, c] : term) s2_add(acc, p.first, p.second, c);
        if (k == cap) throw MathError("dual cocycle inverse failed to terminate");
    }
    return acc;
}

Hopf deform_comultiplication(const Hopf& A, const CoCycle& sigma, bool solve_antipode_flag,
                             const VerifyMode* mode_in) {
    DualCocycleCheck chk = check_dual_cocycle(sigma);
    if (!chk.normalized) throw MathError("dual cocycle violates the counit normalization");
    if (!chk.cocycle) throw MathError("dual 2-cocycle law violated");
    Sparse2 inv = s2_inverse(A, sigma.value);
    long n = A.dim();
    std::vector<Sparse2> comult(n);
    par::for_range(n, [&](std::int64_t b) {
        comult[b] = A.mul2(A.mul2(sigma.value, A.comult(b)), inv);
    });
    std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
    std::vector<Scalar> counit(n);
    std::vector<Character> chars(n);
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) mult[i][j] = A.mul(i, j);
        counit[i] = A.counit(i);
        chars[i] = A.action_char(i);
    }
    Hopf H = Hopf::from_tables(A.group(), A.field(), A.basis(), std::move(mult), std::move(comult),
                               std::move(counit), A.unit(), std::move(chars));
    if (solve_antipode_flag) H.solve_antipode();
    VerifyMode mode = mode_in ? *mode_in : VerifyMode::auto_mode(n);
    AxiomReport rep = H.verify(mode);
    if (!rep.ok) {
        std::string what = "dual deformation failed bialgebra verification:";
        for (const auto& v : rep.violations) what += "\n  " + v;
        throw MathError(what);
    }
    return H;
}

CoCycle dual_deform_cocycle(const Hopf& A, const Datum& d, long p1) {
    const FinAbGroup& G = d.group();
    const CycloField* F = d.field();
    long n = d.N(0);
    Scalar q = d.q(0, 0);
    CoCycle out{&A, {}};
    out.value[{A.unit(), A.unit()}] = Scalar::one(F);
    for (long r = 1; r < n; ++r) {
        long s = n - r;
        Scalar a_rs = (qfactorial(r, q) * qfactorial(s, q)).inverse();
        long left = A.index_of(PBWMono{{r}, G.reduce(GrpVec{{p1 * s}})});
        long right = A.index_of(PBWMono{{s}, G.identity()});
        out.value[{left, right}] = a_rs;
    }
    return out;
}

}  // namespace qlift

