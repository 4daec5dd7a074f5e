#include "qlift/connecting.hpp"

#include "qlift/kdalgebra.hpp"

namespace qlift {

namespace {

// monomial of the q-commutative ambient: exponent vector
using QExp = std::vector<long>;

struct QPlane {
    const Datum* d;
    long cap;
    // q-factor for x^a . x^b = factor x^{a+b}: each x_j (from a) passing
    // x_i (from b) with j > i contributes q_ji
    Scalar mul_factor(const QExp& a, const QExp& b) const {
        Scalar f = Scalar::one(d->field());
        for (long j = 0; j < d->rank(); ++j)
            for (long i = 0; i < j; ++i)
                if (a[j] && b[i]) f *= d->q(j, i).pow(a[j] * b[i]);
        return f;
    }
    long deg(const QExp& a) const {
        long s = 0;
        for (long v : a) s += v;
        return s;
    }
};

}  // namespace

ConnectingResult connecting_delta(const Datum& d, const std::vector<Scalar>& f_values,
                                  const CochainAlgebra& B, long degree_cap) {
    long t = d.rank();
    if (t > 2) throw InputError("connecting map supported for t <= 2 without linking only");
    if ((long)f_values.size() != t) throw InputError("one value per z-generator required");
    const FinAbGroup& G = d.group();
    const CycloField* F = d.field();
    for (long i = 0; i < t; ++i) {
        if (!f_values[i].is_zero() && !G.is_trivial_char(d.eta(i)))
            throw InputError("G-invariance forces f(z_" + std::to_string(i + 1) + ") = 0");
    }
    long cap = degree_cap > 0 ? degree_cap : default_degree_cap(d);
    QPlane R{&d, cap};

    // u^* f on a monomial: f(u(x^e)) with u the PBW-membership projection;
    // f extends multiplicatively over K = k[z_1..z_t] (q-commutative with
    // trivial braiding between the z's restricted appropriately)
    auto uf = [&](const QExp& e) {
        Scalar acc = Scalar::one(F);
        bool in_K = true;
        for (long i = 0; i < t && in_K; ++i) {
            if (e[i] % d.N(i) != 0) in_K = false;
        }
        if (!in_K) return Scalar::zero(F);
        long height = 0;
        for (long i = 0; i < t; ++i) height += e[i] / d.N(i);
        if (height != 1) return Scalar::zero(F);  // f is a functional on K+/(K+)^2
        for (long i = 0; i < t; ++i)
            if (e[i] == d.N(i)) acc = f_values[i];
        return acc;
    };
    // eps on R
    auto eps = [&](const QExp& e) {
        return R.deg(e) == 0 ? Scalar::one(F) : Scalar::zero(F);
    };
    // d(u^* f)(x^a (x) x^b) = eps(a) f(u(b)) - factor f(u(a+b)) + f(u(a)) eps(b)
    auto duf = [&](const QExp& a, const QExp& b) {
        Scalar acc(F);
        acc += eps(a) * uf(b);
        QExp ab(t);
        for (long i = 0; i < t; ++i) ab[i] = a[i] + b[i];
        acc -= R.mul_factor(a, b) * uf(ab);
        acc += uf(a) * eps(b);
        return acc;
    };

    // enumerate monomials of R up to half the cap (pairs stay within the cap)
    std::vector<QExp> monos;
    {
        QExp cur(t, 0);
        std::function<void(long, long)> rec = [&](long k, long deg) {
            if (k == t) {
                monos.push_back(cur);
                return;
            }
            for (long e = 0; deg + e <= cap / 2; ++e) {
                cur[k] = e;
                rec(k + 1, deg + e);
            }
            cur[k] = 0;
        };
        rec(0, 0);
    }

    ConnectingResult out;
    out.retraction = "PBW-membership projection: monomial -> itself if N_i | e_i for all i, else 0";

    // d(u^* f) kills K+ R (x) R + R (x) R K+
    out.kills_mixed_ideal = true;
    for (long i = 0; i < t && out.kills_mixed_ideal; ++i) {
        QExp z(t, 0);
        z[i] = d.N(i);
        for (const auto& a : monos) {
            QExp za(t);
            for (long k = 0; k < t; ++k) za[k] = z[k] + a[k];
            if (R.deg(za) > cap / 2) continue;
            for (const auto& b : monos) {
                // (z a) (x) b and a (x) (b z)
                Scalar v1 = R.mul_factor(z, a) * duf(za, b);
                if (!v1.is_zero()) out.kills_mixed_ideal = false;
                QExp bz(t);
                for (long k = 0; k < t; ++k) bz[k] = b[k] + z[k];
                if (R.deg(bz) > cap / 2) continue;
                Scalar v2 = R.mul_factor(b, z) * duf(a, bz);
                if (!v2.is_zero()) out.kills_mixed_ideal = false;
            }
        }
    }

    // factors through pi (x) pi: vanishes as soon as one side leaves the
    // B-range (some exponent >= N_i)
    out.factors_through_pi = true;
    auto in_B = [&](const QExp& e) {
        for (long i = 0; i < t; ++i)
            if (e[i] >= d.N(i)) return false;
        return true;
    };
    for (const auto& a : monos)
        for (const auto& b : monos) {
            if (in_B(a) && in_B(b)) continue;
            if (!duf(a, b).is_zero()) out.factors_through_pi = false;
        }

    // induced 2-cocycle on B via the monomial section of pi
    std::map<QExp, long> b_index;
    for (long idx = 0; idx < B.dim; ++idx) {
        // recover the exponent vector of the B-basis element from its name
        // ordering: nichols_algebra enumerates exponent vectors lexicographically
        // in the same order as this loop below
    }
    {
        std::vector<QExp> exps;
        QExp a(t, 0);
        while (true) {
            exps.push_back(a);
            long i = t - 1;
            while (i >= 0) {
                if (++a[i] < d.N(i)) break;
                a[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
        std::sort(exps.begin(), exps.end());
        for (long idx = 0; idx < (long)exps.size(); ++idx) b_index[exps[idx]] = idx;
    }
    for (const auto& [ea, ia] : b_index) {
        for (const auto& [eb, ib] : b_index) {
            if (ia == B.unit || ib == B.unit) continue;
            Scalar v = duf(ea, eb);
            if (!v.is_zero()) out.induced[{ia, ib}] = v;
        }
    }
    out.cocycle_on_B = cochain_differential(B, out.induced, 2).empty();
    out.class_is_zero = is_coboundary(B, out.induced, 2, true, &out.primitive);
    return out;
}

}  // namespace qlift

