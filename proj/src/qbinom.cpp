#include "qlift/qbinom.hpp"

#include <vector>

namespace qlift {

Scalar qint(long j, const Scalar& q) {
    Scalar acc(q.field());
    Scalar p = Scalar::one(q.field());
    for (long t = 0; t < j; ++t) {
        acc += p;
        p *= q;
    }
    return acc;
}

Scalar qfactorial(long m, const Scalar& q) {
    Scalar acc = Scalar::one(q.field());
    for (long j = 1; j <= m; ++j) acc *= qint(j, q);
    return acc;
}

Scalar qbinom(long n, long i, const Scalar& q) {
    const CycloField* f = q.field();
    if (i < 0 || i > n) return Scalar::zero(f);
    if (i == 0 || i == n) return Scalar::one(f);
    // row-by-row q-Pascal triangle
    std::vector<Scalar> row{Scalar::one(f)};
    for (long m = 1; m <= n; ++m) {
        std::vector<Scalar> next(m + 1, Scalar::zero(f));
        next[0] = Scalar::one(f);
        next[m] = Scalar::one(f);
        Scalar qpow = q;  // q^j for j = 1..
        for (long j = 1; j < m; ++j) {
            next[j] = row[j - 1] + qpow * row[j];
            qpow *= q;
        }
        row = std::move(next);
    }
    return row[i];
}

}  // namespace qlift
