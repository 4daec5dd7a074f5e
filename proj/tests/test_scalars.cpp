#include "doctest.h"
#include "qlift/cyclotomic.hpp"
#include "qlift/qbinom.hpp"

#include <vector>

using namespace qlift;

namespace {

// Independent oracle: Gauss polynomial as an integer-coefficient polynomial
// in q, built from the product formula with exact polynomial division,
// then evaluated at the scalar. Never touches the q-Pascal path.
using ZPoly = std::vector<mpz_class>;

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

ZPoly zp_div_exact(ZPoly a, const ZPoly& b) {
    ZPoly q(a.size() - b.size() + 1, mpz_class(0));
    while (a.size() >= b.size()) {
        mpz_class lead = a.back() / b.back();
        REQUIRE(lead * b.back() == a.back());
        size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    REQUIRE(a.empty());
    return q;
}

ZPoly gauss_polynomial(long n, long i) {
    // prod_{k=1}^{i} (1 - q^{n-i+k}) / (1 - q^k)
    ZPoly num{1};
    ZPoly den{1};
    for (long k = 1; k <= i; ++k) {
        ZPoly t1(n - i + k + 1, mpz_class(0));
        t1[0] = 1;
        t1[n - i + k] = -1;
        num = zp_mul(num, t1);
        ZPoly t2(k + 1, mpz_class(0));
        t2[0] = 1;
        t2[k] = -1;
        den = zp_mul(den, t2);
    }
    return zp_div_exact(num, den);
}

Scalar eval_at(const ZPoly& p, const Scalar& q) {
    Scalar acc(q.field());
    Scalar pw = Scalar::one(q.field());
    for (const auto& c : p) {
        acc += Rational(c) * pw;
        pw *= q;
    }
    return acc;
}

}  // namespace

TEST_CASE("cyclotomic field basics") {
    const CycloField* F6 = CycloField::get(6);
    CHECK(F6->degree() == 2);  // phi(6) = 2
    Scalar z = Scalar::root_of_unity(F6, 1);
    // minimal polynomial of zeta_6: z^2 - z + 1 = 0
    CHECK((z * z - z + Scalar::one(F6)).is_zero());
    // full period
    CHECK(Scalar::root_of_unity(F6, 6).is_one());
    // half period
    CHECK(Scalar::root_of_unity(F6, 3) == -Scalar::one(F6));
    // inverse of a root of unity is its complementary power
    for (long N : {5L, 6L, 8L, 12L}) {
        const CycloField* F = CycloField::get(N);
        Scalar zn = Scalar::root_of_unity(F, 1);
        CHECK(zn.inverse() == Scalar::root_of_unity(F, N - 1));
    }
    // vanishing geometric sum: 1 + zeta_3 + zeta_3^2 = 0
    const CycloField* F3 = CycloField::get(3);
    Scalar z3 = Scalar::root_of_unity(F3, 1);
    CHECK((Scalar::one(F3) + z3 + z3 * z3).is_zero());
    // zeta_12^4 is a primitive cube root: satisfies x^2 + x + 1 = 0
    const CycloField* F12 = CycloField::get(12);
    Scalar w = Scalar::root_of_unity(F12, 4);
    CHECK((w * w + w + Scalar::one(F12)).is_zero());
    CHECK(w.mult_order() == 3);
}

TEST_CASE("field axioms hold exactly on random-ish elements") {
    const CycloField* F = CycloField::get(12);
    std::vector<Scalar> xs;
    for (long k = 0; k < 5; ++k) {
        Scalar s = Scalar::root_of_unity(F, k);
        Rational r(k + 1, 3);
        r.canonicalize();
        s += r * Scalar::root_of_unity(F, (2 * k) % 12);
        xs.push_back(s);
    }
    for (const auto& a : xs) {
        for (const auto& b : xs) {
            CHECK(a * b == b * a);
            CHECK(a + b == b + a);
            for (const auto& c : xs) {
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
            if (!b.is_zero()) {
                Scalar q = a * b.inverse();
                CHECK(q * b == a);
            }
        }
    }
    CHECK_THROWS_AS(Scalar::zero(F).inverse(), MathError);
}

TEST_CASE("qbinom against the Gauss polynomial oracle") {
    // frozen oracle value: (4 choose 2)_q = (1+q+q^2)(1+q^2) at q = zeta_5
    const CycloField* F5 = CycloField::get(5);
    Scalar q5 = Scalar::root_of_unity(F5, 1);
    Scalar expect = (Scalar::one(F5) + q5 + q5 * q5) * (Scalar::one(F5) + q5 * q5);
    CHECK(qbinom(4, 2, q5) == expect);

    for (long E : {2L, 3L, 4L, 5L, 7L, 8L, 12L}) {
        const CycloField* F = CycloField::get(E);
        for (long k = 0; k < E; ++k) {
            Scalar q = Scalar::root_of_unity(F, k);
            for (long n = 0; n <= 8; ++n)
                for (long i = 0; i <= n; ++i) CHECK(qbinom(n, i, q) == eval_at(gauss_polynomial(n, i), q));
        }
    }
}

TEST_CASE("qbinom conventions and vanishing at root order") {
    const CycloField* F = CycloField::get(6);
    Scalar q = Scalar::root_of_unity(F, 1);  // order 6
    CHECK(qbinom(3, -1, q).is_zero());
    CHECK(qbinom(3, 4, q).is_zero());
    CHECK(qbinom(5, 0, q).is_one());
    // ord(q) = n makes every inner column vanish
    for (long n : {2L, 3L, 6L}) {
        const CycloField* Fn = CycloField::get(n);
        Scalar qn = Scalar::root_of_unity(Fn, 1);
        for (long i = 1; i < n; ++i) CHECK(qbinom(n, i, qn).is_zero());
    }
}

TEST_CASE("q-factorial compatibility") {
    // (n choose i)_q i_q! (n-i)_q! = n_q! whenever both sides are defined
    for (long E : {4L, 5L, 9L}) {
        const CycloField* F = CycloField::get(E);
        Scalar q = Scalar::root_of_unity(F, 1);
        for (long n = 0; n <= 7; ++n)
            for (long i = 0; i <= n; ++i)
                CHECK(qbinom(n, i, q) * qfactorial(i, q) * qfactorial(n - i, q) == qfactorial(n, q));
    }
}

TEST_CASE("q-Pascal identity across all roots of small orders") {
    for (long E = 1; E <= 12; ++E) {
        const CycloField* F = CycloField::get(E);
        for (long k = 0; k < E; ++k) {
            Scalar q = Scalar::root_of_unity(F, k);
            for (long n = 2; n <= 12; ++n) {
                Scalar qi = q;  // q^i
                for (long i = 1; i < n; ++i) {
                    CHECK(qbinom(n, i, q) == qbinom(n - 1, i - 1, q) + qi * qbinom(n - 1, i, q));
                    qi *= q;
                }
            }
        }
    }
}

TEST_CASE("symmetry under q -> 1/q with i -> n-i") {
    for (long E : {3L, 5L, 8L}) {
        const CycloField* F = CycloField::get(E);
        Scalar q = Scalar::root_of_unity(F, 1);
        Scalar qinv = q.inverse();
        for (long n = 0; n <= 9; ++n)
            for (long i = 0; i <= n; ++i) {
                CHECK(qbinom(n, i, q) == qbinom(n, n - i, q));
                CHECK(qbinom(n, n - i, qinv) * q.pow(i * (n - i)) == qbinom(n, i, q));
            }
    }
}

TEST_CASE("q-Vandermonde convolution identity") {
    for (long E = 2; E <= 8; ++E) {
        const CycloField* F = CycloField::get(E);
        Scalar q = Scalar::root_of_unity(F, 1);
        for (long i = 0; i <= 8; ++i)
            for (long k = 0; k <= 8; ++k)
                for (long beta = 0; beta <= i + k; ++beta) {
                    Scalar lhs(F);
                    for (long s = 0; s <= beta; ++s) {
                        long v = beta - s;
                        lhs += qbinom(i, s, q) * qbinom(k, v, q) * q.pow(s * (k - v));
                    }
                    CHECK(lhs == qbinom(i + k, beta, q));
                }
    }
}

TEST_CASE("evaluation identity at order N") {
    // sum_{u+v=N} (s choose u)_q (p choose v)_q q^{u(p-v)} = 1
    // whenever r+s+p = 2N with 0 <= r,s,p <= N-1, ord(q) = N
    for (long N = 2; N <= 8; ++N) {
        const CycloField* F = CycloField::get(N);
        Scalar q = Scalar::root_of_unity(F, 1);
        REQUIRE(q.mult_order() == N);
        for (long r = 0; r < N; ++r)
            for (long s = 0; s < N; ++s) {
                long p = 2 * N - r - s;
                if (p < 0 || p > N - 1) continue;
                Scalar lhs(F);
                for (long u = 0; u <= N; ++u) {
                    long v = N - u;
                    lhs += qbinom(s, u, q) * qbinom(p, v, q) * q.pow(u * (p - v));
                }
                CHECK(lhs.is_one());
            }
    }
}
