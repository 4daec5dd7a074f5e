#include "qlift/hopf.hpp"

#include <sstream>

#include "qlift/linalg.hpp"
#include "qlift/parallel.hpp"

namespace qlift {

void sv_add(SparseVec& dst, long i, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = dst.find(i);
    if (it == dst.end()) {
        dst.emplace(i, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

void sv_add(SparseVec& dst, const SparseVec& src, const Scalar& c) {
    for (const auto& [i, v] : src) sv_add(dst, i, c * v);
}

void s2_add(Sparse2& dst, long i, long j, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(i, j);
    auto it = dst.find(key);
    if (it == dst.end()) {
        dst.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

void s3_add(Sparse3& dst, long i, long j, long k, const Scalar& c) {
    if (c.is_zero()) return;
    std::array<long, 3> key{i, j, k};
    auto it = dst.find(key);
    if (it == dst.end()) {
        dst.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

Hopf Hopf::from_tables(const FinAbGroup& G, const CycloField* F, std::vector<PBWMono> basis,
                       std::vector<std::vector<SparseVec>> mult, std::vector<Sparse2> comult,
                       std::vector<Scalar> counit, long unit_index, std::vector<Character> action_chars) {
    Hopf H;
    H.dim_ = (long)basis.size();
    H.F_ = F;
    H.unit_ = unit_index;
    H.basis_ = std::move(basis);
    H.mult_ = std::move(mult);
    H.comult_ = std::move(comult);
    H.counit_ = std::move(counit);
    H.action_char_ = std::move(action_chars);
    H.group_ = std::make_shared<FinAbGroup>(G);
    for (long i = 0; i < H.dim_; ++i) H.index_[H.basis_[i]] = i;
    // two-fold coproducts and the comultiplication transpose, cached once
    H.comult2_.resize(H.dim_);
    H.transpose_.resize(H.dim_ * H.dim_);
    for (long i = 0; i < H.dim_; ++i) {
        Sparse3 d2;
        for (const auto& [p, c] : H.comult_[i]) {
            for (const auto& [q, c2] : H.comult_[p.first]) s3_add(d2, q.first, q.second, p.second, c * c2);
        }
        H.comult2_[i] = std::move(d2);
        for (const auto& [p, c] : H.comult_[i])
            H.transpose_[p.first * H.dim_ + p.second].push_back({i, c});
    }
    return H;
}

const std::vector<std::pair<long, Scalar>>& Hopf::comult_sources(long u, long v) const {
    return transpose_[u * dim_ + v];
}

long Hopf::index_of(const PBWMono& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw InputError("monomial is not a basis element");
    return it->second;
}

SparseVec Hopf::mul(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) sv_add(out, mult_[i][j], ci * cj);
    return out;
}

Sparse2 Hopf::comult(const SparseVec& x) const {
    Sparse2 out;
    for (const auto& [i, c] : x)
        for (const auto& [p, c2] : comult_[i]) s2_add(out, p.first, p.second, c * c2);
    return out;
}

Scalar Hopf::counit(const SparseVec& x) const {
    Scalar acc(F_);
    for (const auto& [i, c] : x) acc += c * counit_[i];
    return acc;
}

const SparseVec& Hopf::antipode(long i) const {
    if (antipode_.empty()) throw MathError("antipode has not been constructed");
    return antipode_[i];
}

SparseVec Hopf::antipode(const SparseVec& x) const {
    SparseVec out;
    for (const auto& [i, c] : x) sv_add(out, antipode(i), c);
    return out;
}

Sparse2 Hopf::mul2(const Sparse2& x, const Sparse2& y) const {
    Sparse2 out;
    for (const auto& [p, cp] : x) {
        for (const auto& [q, cq] : y) {
            Scalar c = cp * cq;
            for (const auto& [u, cu] : mult_[p.first][q.first])
                for (const auto& [v, cv] : mult_[p.second][q.second]) s2_add(out, u, v, c * cu * cv);
        }
    }
    return out;
}

Sparse3 Hopf::mul3(const Sparse3& x, const Sparse3& y) const {
    Sparse3 out;
    for (const auto& [p, cp] : x) {
        for (const auto& [q, cq] : y) {
            Scalar c = cp * cq;
            for (const auto& [u, cu] : mult_[p[0]][q[0]])
                for (const auto& [v, cv] : mult_[p[1]][q[1]])
                    for (const auto& [w, cw] : mult_[p[2]][q[2]]) s3_add(out, u, v, w, c * cu * cv * cw);
        }
    }
    return out;
}

namespace {
// SplitMix64: deterministic triples for the sampled verification mode.
struct SplitMix {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};
}  // namespace

AxiomReport Hopf::verify(const VerifyMode& mode) const {
    AxiomReport rep;
    rep.mode = mode.full ? "full" : ("sampled(" + std::to_string(mode.seed) + "," + std::to_string(mode.count) + ")");
    const long n = dim_;

    // unit and counit sanity
    for (long i = 0; i < n; ++i) {
        bool lok = mult_[unit_][i].size() == 1 && mult_[unit_][i].count(i) && mult_[unit_][i].at(i).is_one();
        bool rok = mult_[i][unit_].size() == 1 && mult_[i][unit_].count(i) && mult_[i][unit_].at(i).is_one();
        if (!lok) rep.fail("unit law 1*b failed at basis " + std::to_string(i));
        if (!rok) rep.fail("unit law b*1 failed at basis " + std::to_string(i));
    }
    if (!counit_[unit_].is_one()) rep.fail("counit(1) != 1");

    // coassociativity + counit laws, always full (linear in dim)
    for (long b = 0; b < n; ++b) {
        Sparse3 left, right;
        for (const auto& [p, c] : comult_[b])
            for (const auto& [q, c2] : comult_[p.first]) s3_add(left, q.first, q.second, p.second, c * c2);
        for (const auto& [p, c] : comult_[b])
            for (const auto& [q, c2] : comult_[p.second]) s3_add(right, p.first, q.first, q.second, c * c2);
        if (left != right) rep.fail("coassociativity failed at basis " + std::to_string(b));
        SparseVec l, r;
        for (const auto& [p, c] : comult_[b]) {
            sv_add(l, p.second, c * counit_[p.first]);
            sv_add(r, p.first, c * counit_[p.second]);
        }
        SparseVec expect{{b, Scalar::one(F_)}};
        if (l != expect) rep.fail("left counit law failed at basis " + std::to_string(b));
        if (r != expect) rep.fail("right counit law failed at basis " + std::to_string(b));
    }
    {
        Sparse2 expect{{{unit_, unit_}, Scalar::one(F_)}};
        if (comult_[unit_] != expect) rep.fail("Delta(1) != 1 (x) 1");
    }

    // associativity on triples
    struct Part {
        long count = 0;
        std::vector<std::string> bad;
    };
    auto check_triple = [&](long i, long j, long k, Part& part) {
        SparseVec lhs, rhs;
        for (const auto& [t, c] : mult_[i][j]) sv_add(lhs, mult_[t][k], c);
        for (const auto& [t, c] : mult_[j][k]) sv_add(rhs, mult_[i][t], c);
        ++part.count;
        if (lhs != rhs && part.bad.size() < 8)
            part.bad.push_back("associativity failed at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")");
    };
    Part assoc;
    if (mode.full) {
        std::int64_t total = (std::int64_t)n * n * n;
        assoc = par::map_reduce(
            total, Part{},
            [&](std::int64_t lo, std::int64_t hi) {
                Part part;
                for (std::int64_t t = lo; t < hi; ++t) {
                    long i = (long)(t / ((std::int64_t)n * n));
                    long j = (long)((t / n) % n);
                    long k = (long)(t % n);
                    check_triple(i, j, k, part);
                }
                return part;
            },
            [](Part a, const Part& b) {
                a.count += b.count;
                a.bad.insert(a.bad.end(), b.bad.begin(), b.bad.end());
                return a;
            });
    } else {
        SplitMix rng{mode.seed};
        for (long t = 0; t < mode.count; ++t) {
            long i = (long)(rng.next() % (std::uint64_t)n);
            long j = (long)(rng.next() % (std::uint64_t)n);
            long k = (long)(rng.next() % (std::uint64_t)n);
            check_triple(i, j, k, assoc);
        }
    }
    rep.checked_triples = assoc.count;
    for (const auto& v : assoc.bad) rep.fail(v);

    // compatibility Delta(ab) = Delta(a) Delta(b) on basis pairs
    {
        struct P2 {
            std::vector<std::string> bad;
        };
        std::vector<std::pair<long, long>> pairs;
        if (mode.full) {
            pairs.reserve(n * n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) pairs.push_back({i, j});
        } else {
            SplitMix rng{mode.seed ^ 0xabcdefULL};
            for (long t = 0; t < mode.count; ++t)
                pairs.push_back({(long)(rng.next() % (std::uint64_t)n), (long)(rng.next() % (std::uint64_t)n)});
        }
        P2 comp = par::map_reduce(
            (std::int64_t)pairs.size(), P2{},
            [&](std::int64_t lo, std::int64_t hi) {
                P2 part;
                for (std::int64_t t = lo; t < hi; ++t) {
                    auto [i, j] = pairs[t];
                    Sparse2 lhs = comult(mult_[i][j]);
                    Sparse2 rhs = mul2(comult_[i], comult_[j]);
                    if (lhs != rhs && part.bad.size() < 8)
                        part.bad.push_back("comultiplication not multiplicative at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
                    Scalar el = counit(mult_[i][j]);
                    if (el != counit_[i] * counit_[j] && part.bad.size() < 8)
                        part.bad.push_back("counit not multiplicative at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
                }
                return part;
            },
            [](P2 a, const P2& b) {
                a.bad.insert(a.bad.end(), b.bad.begin(), b.bad.end());
                return a;
            });
        for (const auto& v : comp.bad) rep.fail(v);
    }

    // antipode law when present
    if (!antipode_.empty()) {
        for (long b = 0; b < n; ++b) {
            SparseVec lhs, rhs;
            for (const auto& [p, c] : comult_[b]) {
                for (const auto& [w, cw] : antipode_[p.first]) sv_add(lhs, mult_[w][p.second], c * cw);
                for (const auto& [w, cw] : antipode_[p.second]) sv_add(rhs, mult_[p.first][w], c * cw);
            }
            SparseVec expect;
            sv_add(expect, unit_, counit_[b]);
            if (lhs != expect) rep.fail("antipode law m(s x 1)Delta failed at basis " + std::to_string(b));
            if (rhs != expect) rep.fail("antipode law m(1 x s)Delta failed at basis " + std::to_string(b));
        }
    }
    return rep;
}

void Hopf::solve_antipode() {
    // unknowns S[u][w] indexed u*dim+w, one extra homogenizing column;
    // equations from both antipode laws on every basis element
    long n = dim_;
    long t_col = n * n;
    std::vector<SparseRow> rows;
    for (long b = 0; b < n; ++b) {
        std::map<long, SparseRow> eq_l, eq_r;
        for (const auto& [p, c] : comult_[b]) {
            for (long w = 0; w < n; ++w) {
                for (const auto& [tgt, cm] : mult_[w][p.second]) {
                    Scalar add = c * cm;
                    if (!add.is_zero()) {
                        auto& cell = eq_l[tgt][p.first * n + w];
                        cell += add;
                    }
                }
                for (const auto& [tgt, cm] : mult_[p.first][w]) {
                    Scalar add = c * cm;
                    if (!add.is_zero()) {
                        auto& cell = eq_r[tgt][p.second * n + w];
                        cell += add;
                    }
                }
            }
        }
        auto emit = [&](std::map<long, SparseRow>& eq) {
            eq[unit_][t_col] += -counit_[b];
            for (auto& [tgt, row] : eq) {
                SparseRow clean;
                for (auto& [col, v] : row)
                    if (!v.is_zero()) clean[col] = v;
                if (!clean.empty()) rows.push_back(std::move(clean));
            }
        };
        emit(eq_l);
        emit(eq_r);
    }
    auto kern = kernel_basis(F_, n * n + 1, std::move(rows));
    for (const auto& k : kern) {
        auto it = k.find(t_col);
        if (it == k.end()) continue;
        Scalar scale = it->second.inverse();
        std::vector<SparseVec> s(n);
        for (const auto& [col, v] : k) {
            if (col == t_col) continue;
            sv_add(s[col / n], col % n, scale * v);
        }
        antipode_ = std::move(s);
        return;
    }
    throw MathError("no antipode: the antipode law has no solution");
}

AlgebraTable Hopf::algebra_table() const { return AlgebraTable{dim_, F_, mult_}; }

AlgebraTable Hopf::dual_algebra_table() const {
    AlgebraTable A;
    A.dim = dim_;
    A.F = F_;
    A.mult.assign(dim_, std::vector<SparseVec>(dim_));
    for (long b = 0; b < dim_; ++b)
        for (const auto& [p, c] : comult_[b]) sv_add(A.mult[p.first][p.second], b, c);
    return A;
}

std::vector<SparseVec> radical_basis(const AlgebraTable& A) {
    long n = A.dim;
    // tr(L_z) per basis element
    std::vector<Scalar> trace(n, Scalar::zero(A.F));
    for (long z = 0; z < n; ++z) {
        Scalar acc(A.F);
        for (long j = 0; j < n; ++j) {
            auto it = A.mult[z][j].find(j);
            if (it != A.mult[z][j].end()) acc += it->second;
        }
        trace[z] = acc;
    }
    // Gram matrix rows: G[i][j] = tr(L_{b_i b_j})
    std::vector<SparseRow> gram(n);
    par::for_range(n, [&](std::int64_t i) {
        SparseRow row;
        for (long j = 0; j < n; ++j) {
            Scalar acc(A.F);
            for (const auto& [z, c] : A.mult[i][j]) acc += c * trace[z];
            if (!acc.is_zero()) row[j] = acc;
        }
        gram[i] = std::move(row);
    });
    std::vector<SparseRow> kern = kernel_basis(A.F, n, std::move(gram));
    std::vector<SparseVec> out;
    for (auto& k : kern) out.push_back(SparseVec(k.begin(), k.end()));
    return out;
}

Hopf::Filtration Hopf::coradical_filtration() const {
    Filtration out;
    // H_0 = annihilator of Rad(H^*) inside H
    auto dual = dual_algebra_table();
    auto rad = radical_basis(dual);
    std::vector<SparseRow> constraints;
    for (const auto& r : rad) constraints.push_back(SparseRow(r.begin(), r.end()));
    auto h0 = kernel_basis(F_, dim_, std::move(constraints));
    std::vector<std::vector<SparseVec>> bases;
    std::vector<SparseVec> cur;
    for (auto& v : h0) cur.push_back(SparseVec(v.begin(), v.end()));
    bases.push_back(cur);
    out.dims.push_back((long)cur.size());
    while ((long)cur.size() < dim_) {
        std::vector<SparseRow> w;
        for (const auto& u : bases.front())
            for (long j = 0; j < dim_; ++j) {
                SparseRow r;
                for (const auto& [i, c] : u) r[i * dim_ + j] = c;
                w.push_back(std::move(r));
            }
        for (const auto& v : cur)
            for (long i = 0; i < dim_; ++i) {
                SparseRow r;
                for (const auto& [j, c] : v) r[i * dim_ + j] = c;
                w.push_back(std::move(r));
            }
        RowEchelon span(dim_ * dim_);
        span.insert_all(std::move(w));
        std::vector<SparseRow> cols(dim_);
        par::for_range(dim_, [&](std::int64_t b) {
            SparseRow db;
            for (const auto& [p, c] : comult_[b]) db[p.first * dim_ + p.second] = c;
            cols[b] = span.reduce(std::move(db));
        });
        std::vector<SparseRow> mat;
        std::map<long, SparseRow> by_coord;
        for (long b = 0; b < dim_; ++b)
            for (const auto& [coord, c] : cols[b]) by_coord[coord][b] = c;
        for (auto& [coord, row] : by_coord) mat.push_back(std::move(row));
        auto hn = kernel_basis(F_, dim_, std::move(mat));
        std::vector<SparseVec> next;
        for (auto& v : hn) next.push_back(SparseVec(v.begin(), v.end()));
        if ((long)next.size() <= (long)cur.size())
            throw MathError("coradical filtration failed to grow");
        cur = std::move(next);
        bases.push_back(cur);
        out.dims.push_back((long)cur.size());
    }
    out.bases = std::move(bases);
    out.layer_dims.push_back(out.dims[0]);
    for (size_t i = 1; i < out.dims.size(); ++i) out.layer_dims.push_back(out.dims[i] - out.dims[i - 1]);
    return out;
}

std::vector<long> Hopf::grouplike_basis() const {
    std::vector<long> out;
    for (long b = 0; b < dim_; ++b) {
        Sparse2 expect{{{b, b}, Scalar::one(F_)}};
        if (comult_[b] == expect && counit_[b].is_one()) out.push_back(b);
    }
    return out;
}

std::string Hopf::render(const SparseVec& x) const {
    Element e;
    for (const auto& [i, c] : x) e[basis_[i]] = c;
    return render_element(e, *group_);
}

Endo endo_convolve(const Hopf& H, const Endo& f, const Endo& g) {
    Endo out(H.dim());
    for (long b = 0; b < H.dim(); ++b) {
        SparseVec acc;
        for (const auto& [p, c] : H.comult(b)) {
            for (const auto& [u, cu] : f[p.first])
                for (const auto& [v, cv] : g[p.second]) sv_add(acc, H.mul(u, v), c * cu * cv);
        }
        out[b] = std::move(acc);
    }
    return out;
}

Endo endo_identity(const Hopf& H) {
    Endo out(H.dim());
    for (long b = 0; b < H.dim(); ++b) out[b][b] = Scalar::one(H.field());
    return out;
}

Endo endo_conv_unit(const Hopf& H) {
    Endo out(H.dim());
    for (long b = 0; b < H.dim(); ++b) sv_add(out[b], H.unit(), H.counit(b));
    return out;
}

Hopf group_algebra(const FinAbGroup& G, const CycloField* F) {
    auto els = G.elements();
    long n = (long)els.size();
    std::vector<PBWMono> basis(n);
    std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
    std::vector<Sparse2> comult(n);
    std::vector<Scalar> counit(n, Scalar::one(F));
    std::vector<Character> chars(n, G.trivial_char());
    for (long i = 0; i < n; ++i) {
        basis[i] = PBWMono{{}, els[i]};
        comult[i][{i, i}] = Scalar::one(F);
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) mult[i][j][G.index_of(G.mul(els[i], els[j]))] = Scalar::one(F);
    long unit = G.index_of(G.identity());
    Hopf H = Hopf::from_tables(G, F, std::move(basis), std::move(mult), std::move(comult), std::move(counit),
                               unit, std::move(chars));
    std::vector<SparseVec> s(n);
    for (long i = 0; i < n; ++i) s[i][G.index_of(G.inv(els[i]))] = Scalar::one(F);
    H.set_antipode(std::move(s));
    return H;
}

}  // namespace qlift

