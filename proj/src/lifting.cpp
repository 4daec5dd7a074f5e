#include "qlift/lifting.hpp"

#include <algorithm>

#include "qlift/parallel.hpp"

namespace qlift {

namespace {
// splice an element supported on group monomials into a letter stream
void splice_group_element(const Element& e, const Word& head, const Word& tail, const Scalar& coeff,
                          std::vector<std::pair<Scalar, Word>>& todo, const FinAbGroup& G) {
    for (const auto& [m, c] : e) {
        if (m.xdeg() != 0) throw MathError("rewriting rule tail must lie in the group algebra");
        Word v = head;
        if (!G.is_identity(m.g)) v.push_back(Letter::group(m.g));
        v.insert(v.end(), tail.begin(), tail.end());
        todo.push_back({coeff * c, std::move(v)});
    }
}
}  // namespace

Rewriter::Rewriter(const Datum& d, const LiftingParams& p) : d_(d) {
    const FinAbGroup& G = d.group();
    power_rhs_.resize(d.rank());
    for (long i = 0; i < d.rank(); ++i) {
        Element e;
        Scalar aii = p.diag_at(i);
        if (!aii.is_zero()) {
            elem_add(e, PBWMono{std::vector<long>(d.rank(), 0), d.h(i)}, aii);
            elem_add(e, PBWMono{std::vector<long>(d.rank(), 0), G.identity()}, -aii);
        }
        power_rhs_[i] = std::move(e);
    }
    for (const auto& [key, val] : p.link) {
        if (val.is_zero()) continue;
        Element e;
        elem_add(e, PBWMono{std::vector<long>(d.rank(), 0), G.mul(d.g(key.first), d.g(key.second))}, val);
        elem_add(e, PBWMono{std::vector<long>(d.rank(), 0), G.identity()}, -val);
        bracket_rhs_[key] = std::move(e);
    }
}

Rewriter::Rewriter(const Datum& d, std::vector<Element> power_rhs,
                   std::map<std::pair<long, long>, Element> bracket_rhs)
    : d_(d), power_rhs_(std::move(power_rhs)), bracket_rhs_(std::move(bracket_rhs)) {
    if ((long)power_rhs_.size() != d.rank()) throw InputError("one power rule tail per generator required");
}

Element Rewriter::normalize(const Word& w0) const {
    const FinAbGroup& G = d_.group();
    const CycloField* F = d_.field();
    Element out;
    // worklist of scaled words
    std::vector<std::pair<Scalar, Word>> todo{{Scalar::one(F), w0}};
    while (!todo.empty()) {
        auto [coeff, w] = std::move(todo.back());
        todo.pop_back();
        if (coeff.is_zero()) continue;
        // scan for the leftmost violation
        bool rewritten = false;
        for (size_t k = 0; k + 1 <= w.size() && !rewritten; ++k) {
            // merge adjacent group letters
            if (k + 1 < w.size() && w[k].gen < 0 && w[k + 1].gen < 0) {
                Word v = w;
                v[k] = Letter::group(G.mul(w[k].grp, w[k + 1].grp));
                v.erase(v.begin() + k + 1);
                todo.push_back({coeff, std::move(v)});
                rewritten = true;
                break;
            }
            // move a group letter right past a generator
            if (k + 1 < w.size() && w[k].gen < 0 && w[k + 1].gen >= 0) {
                long i = w[k + 1].gen;
                Scalar f = G.char_eval(F, d_.chi(i), w[k].grp);
                Word v = w;
                std::swap(v[k], v[k + 1]);
                todo.push_back({coeff * f, std::move(v)});
                rewritten = true;
                break;
            }
            // straighten an out-of-order generator pair
            if (k + 1 < w.size() && w[k].gen >= 0 && w[k + 1].gen >= 0 && w[k].gen > w[k + 1].gen) {
                long j = w[k].gen, i = w[k + 1].gen;
                Scalar f = G.char_eval(F, d_.chi(i), d_.g(j));  // chi_i(g_j)
                Word swapped = w;
                std::swap(swapped[k], swapped[k + 1]);
                todo.push_back({coeff * f, std::move(swapped)});
                auto it = bracket_rhs_.find({i, j});
                if (it != bracket_rhs_.end() && !it->second.empty()) {
                    // x_j x_i = chi_i(g_j)(x_i x_j - B_ij)
                    Word head(w.begin(), w.begin() + k);
                    Word tail(w.begin() + k + 2, w.end());
                    splice_group_element(it->second, head, tail, -(coeff * f), todo, G);
                }
                rewritten = true;
                break;
            }
            // power rule: N_i consecutive copies of x_i
            if (w[k].gen >= 0) {
                long i = w[k].gen;
                long run = 1;
                while (k + run < w.size() && w[k + run].gen == i) ++run;
                if (run >= d_.N(i)) {
                    long Ni = d_.N(i);
                    if (!power_rhs_[i].empty()) {
                        Word head(w.begin(), w.begin() + k);
                        Word tail(w.begin() + k + Ni, w.end());
                        splice_group_element(power_rhs_[i], head, tail, coeff, todo, G);
                    }
                    rewritten = true;
                    break;
                }
            }
        }
        if (rewritten) continue;
        // normal form: ascending generators with short runs, then one group letter
        PBWMono m;
        m.a.assign(d_.rank(), 0);
        m.g = G.identity();
        for (const auto& l : w) {
            if (l.gen >= 0) {
                ++m.a[l.gen];
            } else {
                m.g = G.mul(m.g, l.grp);
            }
        }
        elem_add(out, m, coeff);
    }
    return out;
}

Element Rewriter::mul(const PBWMono& m1, const PBWMono& m2) const {
    // (x^a g)(x^b h) = prod_i chi_i(g)^{b_i} x^a x^b (g h)
    const FinAbGroup& G = d_.group();
    const CycloField* F = d_.field();
    Scalar f = Scalar::one(F);
    for (long i = 0; i < d_.rank(); ++i)
        if (m2.a[i]) f *= G.char_eval(F, d_.chi(i), m1.g).pow(m2.a[i]);
    Word w;
    for (long i = 0; i < d_.rank(); ++i)
        for (long t = 0; t < m1.a[i]; ++t) w.push_back(Letter::x(i));
    for (long i = 0; i < d_.rank(); ++i)
        for (long t = 0; t < m2.a[i]; ++t) w.push_back(Letter::x(i));
    GrpElt g = G.mul(m1.g, m2.g);
    if (!G.is_identity(g)) w.push_back(Letter::group(g));
    return elem_scale(normalize(w), f);
}

Element Rewriter::mul(const Element& e1, const Element& e2) const {
    Element out;
    for (const auto& [m1, c1] : e1)
        for (const auto& [m2, c2] : e2) elem_add(out, mul(m1, m2), c1 * c2);
    return out;
}

std::vector<PBWMono> pbw_basis(const Datum& d) {
    std::vector<PBWMono> out;
    long theta = d.rank();
    std::vector<long> a(theta, 0);
    auto group_elements = d.group().elements();
    while (true) {
        for (const auto& g : group_elements) out.push_back(PBWMono{a, g});
        long i = theta - 1;
        while (i >= 0) {
            if (++a[i] < d.N(i)) break;
            a[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Hopf build_lifting(const Datum& d, const LiftingParams& p0, const VerifyMode* mode_in) {
    std::vector<ForcedZero> forced;
    LiftingParams p = validate_params(d, p0, &forced);
    Rewriter rw(d, p);
    return build_from_rewriter(d, rw, mode_in);
}

Hopf build_from_rewriter(const Datum& d, const Rewriter& rw, const VerifyMode* mode_in) {
    const FinAbGroup& G = d.group();
    const CycloField* F = d.field();
    auto basis = pbw_basis(d);
    long n = (long)basis.size();
    std::map<PBWMono, long> index;
    for (long i = 0; i < n; ++i) index[basis[i]] = i;
    auto to_sv = [&](const Element& e) {
        SparseVec v;
        for (const auto& [m, c] : e) sv_add(v, index.at(m), c);
        return v;
    };

    std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
    par::for_range(n, [&](std::int64_t i) {
        for (long j = 0; j < n; ++j) mult[i][j] = to_sv(rw.mul(basis[i], basis[j]));
    });

    // comultiplication: Delta(x_i) = x_i (x) 1 + g_i (x) x_i, Delta(g) = g (x) g,
    // extended multiplicatively in H (x) H
    long unit = index.at(PBWMono{std::vector<long>(d.rank(), 0), G.identity()});
    std::vector<Sparse2> comult(n);
    // precompute Delta(x_i) as Sparse2 and the mono indices
    auto mono_index = [&](std::vector<long> a, const GrpElt& g) { return index.at(PBWMono{std::move(a), g}); };
    std::vector<Sparse2> delta_gen(d.rank());
    for (long i = 0; i < d.rank(); ++i) {
        std::vector<long> e(d.rank(), 0);
        e[i] = 1;
        long xi = mono_index(e, G.identity());
        long gi = mono_index(std::vector<long>(d.rank(), 0), d.g(i));
        Sparse2 s;
        s[{xi, unit}] = Scalar::one(F);
        s[{gi, xi}] = Scalar::one(F);
        delta_gen[i] = std::move(s);
    }
    // we need mul2 on raw tables before the Hopf object exists
    auto mul2_raw = [&](const Sparse2& x, const Sparse2& y) {
        Sparse2 out;
        for (const auto& [pp, cp] : x)
            for (const auto& [q, cq] : y) {
                Scalar c = cp * cq;
                for (const auto& [u, cu] : mult[pp.first][q.first])
                    for (const auto& [v, cv] : mult[pp.second][q.second]) s2_add(out, u, v, c * cu * cv);
            }
        return out;
    };
    par::for_range(n, [&](std::int64_t b) {
        const PBWMono& m = basis[b];
        Sparse2 acc;
        long gidx = mono_index(std::vector<long>(d.rank(), 0), m.g);
        acc[{gidx, gidx}] = Scalar::one(F);
        for (long i = d.rank() - 1; i >= 0; --i)
            for (long t = 0; t < m.a[i]; ++t) acc = mul2_raw(delta_gen[i], acc);
        comult[b] = std::move(acc);
    });

    std::vector<Scalar> counit(n, Scalar::zero(F));
    for (long b = 0; b < n; ++b)
        if (basis[b].xdeg() == 0) counit[b] = Scalar::one(F);

    // diagonal G-action character of x^a g: sum a_i chi_i
    std::vector<Character> chars(n, G.trivial_char());
    for (long b = 0; b < n; ++b) {
        Character c = G.trivial_char();
        for (long i = 0; i < d.rank(); ++i)
            if (basis[b].a[i]) c = G.char_mul(c, G.power(d.chi(i), basis[b].a[i]));
        chars[b] = c;
    }

    Hopf H = Hopf::from_tables(G, F, basis, std::move(mult), std::move(comult), std::move(counit), unit,
                               std::move(chars));

    // antipode from the generator formulas s(g) = g^{-1}, s(x_i) = -g_i^{-1} x_i,
    // extended as a reversed-multiplicative map
    {
        std::vector<SparseVec> s(n);
        std::vector<Element> s_gen(d.rank());
        for (long i = 0; i < d.rank(); ++i) {
            Word w{Letter::group(G.inv(d.g(i))), Letter::x(i)};
            s_gen[i] = elem_scale(rw.normalize(w), -Scalar::one(F));
        }
        for (long b = 0; b < n; ++b) {
            const PBWMono& m = H.basis()[b];
            Element acc;
            acc[PBWMono{std::vector<long>(d.rank(), 0), G.inv(m.g)}] = Scalar::one(F);
            for (long i = d.rank() - 1; i >= 0; --i)
                for (long t = 0; t < m.a[i]; ++t) acc = rw.mul(acc, s_gen[i]);
            SparseVec v;
            for (const auto& [mm, c] : acc) sv_add(v, index.at(mm), c);
            s[b] = std::move(v);
        }
        H.set_antipode(std::move(s));
    }

    VerifyMode mode = mode_in ? *mode_in : VerifyMode::auto_mode(n);
    AxiomReport rep = H.verify(mode);
    if (!rep.ok) {
        std::string what = "lifting construction failed axiom verification:";
        for (const auto& v : rep.violations) what += "\n  " + v;
        // try the solver fallback for the antipode before giving up
        bool antipode_only = true;
        for (const auto& v : rep.violations)
            if (v.find("antipode") == std::string::npos) antipode_only = false;
        if (antipode_only) {
            Hopf H2 = H;
            H2.solve_antipode();
            AxiomReport rep2 = H2.verify(mode);
            if (rep2.ok) return H2;
        }
        throw MathError(what);
    }
    return H;
}

std::vector<GrpElt> constraint_subgroup(const Datum& d, const LiftingParams& p) {
    const FinAbGroup& G = d.group();
    std::vector<GrpElt> gens;
    for (long i = 0; i < d.rank(); ++i)
        if (!p.diag_at(i).is_zero()) gens.push_back(d.h(i));
    for (const auto& [key, val] : p.link)
        if (!val.is_zero()) gens.push_back(G.mul(d.g(key.first), d.g(key.second)));
    if (gens.empty()) gens.push_back(G.identity());
    return G.subgroup(gens);
}

std::vector<Character> grouplikes_of_dual(const Datum& d, const LiftingParams& p) {
    return d.group().annihilator(constraint_subgroup(d, p));
}

DualInvariants dual_invariants(const Datum& d, const LiftingParams& p, const Hopf& H) {
    DualInvariants out;
    out.gprime = constraint_subgroup(d, p);
    out.grouplikes = grouplikes_of_dual(d, p);
    out.grouplike_count = (long)out.grouplikes.size();
    out.dim = H.dim();
    out.radical_dim = (long)radical_basis(H.algebra_table()).size();
    out.dual_coradical_dim = out.dim - out.radical_dim;
    out.dual_pointed = out.dual_coradical_dim <= out.grouplike_count;
    return out;
}

}  // namespace qlift

