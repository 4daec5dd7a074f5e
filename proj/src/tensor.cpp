#include "qlift/tensor.hpp"

#include <algorithm>
#include <sstream>

#include "qlift/parallel.hpp"

namespace qlift {

long Braided::basis_budget = 20000;

void tensor_add(TensorElt& dst, const TensorWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = dst.find(w);
    if (it == dst.end()) {
        dst.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

void tensor_add2(TensorElt2& dst, const TensorWord& a, const TensorWord& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = dst.find(key);
    if (it == dst.end()) {
        dst.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

std::vector<int> reduced_word_bubble(std::vector<int> perm) {
    // record adjacent swaps that sort perm to the identity, then reverse:
    // the reversed sequence transforms the identity into perm, with length
    // equal to the inversion number (hence reduced)
    std::vector<int> word;
    long n = (long)perm.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (long i = 0; i + 1 < n; ++i) {
            if (perm[i] > perm[i + 1]) {
                std::swap(perm[i], perm[i + 1]);
                word.push_back((int)i + 1);  // 1-based transposition index
                changed = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<int> reduced_word_insertion(std::vector<int> perm) {
    // alternative reduced word: repeatedly move the largest value to its slot
    std::vector<int> word;
    long n = (long)perm.size();
    std::vector<int> arr = perm;
    for (long target = n - 1; target >= 0; --target) {
        long pos = std::find(arr.begin(), arr.end(), (int)target) - arr.begin();
        while (pos < target) {
            std::swap(arr[pos], arr[pos + 1]);
            word.push_back((int)pos + 1);
            ++pos;
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<std::vector<int>> all_permutations(long n) {
    std::vector<int> p(n);
    for (long i = 0; i < n; ++i) p[i] = (int)i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<int>> shuffles(long i, long j) {
    long n = i + j;
    std::vector<std::vector<int>> out;
    // choose the i source positions whose letters move to the front
    std::vector<int> pick(i);
    for (long t = 0; t < i; ++t) pick[t] = (int)t;
    while (true) {
        std::vector<int> perm;
        perm.reserve(n);
        std::vector<bool> in(n, false);
        for (int p : pick) in[p] = true;
        for (long t = 0; t < n; ++t)
            if (in[t]) perm.push_back((int)t);
        for (long t = 0; t < n; ++t)
            if (!in[t]) perm.push_back((int)t);
        out.push_back(perm);
        // next combination
        long t = i - 1;
        while (t >= 0 && pick[t] == (int)(n - i + t)) --t;
        if (t < 0) break;
        ++pick[t];
        for (long u = t + 1; u < i; ++u) pick[u] = pick[u - 1] + 1;
    }
    return out;
}

TensorElt Braided::braid_generator(long i, const TensorElt& t) const {
    TensorElt out;
    for (const auto& [w, c] : t) {
        long n = (long)w.size();
        if (i < 1 || i > n - 1) throw InputError("braid generator index out of range");
        TensorWord v = w;
        Scalar f = q_of(v[i - 1], v[i]);
        std::swap(v[i - 1], v[i]);
        tensor_add(out, v, c * f);
    }
    return out;
}

void Braided::apply_permutation(const std::vector<int>& perm, const TensorWord& w, TensorElt& out,
                                const Scalar& coeff) const {
    std::vector<int> rw = reduced_word_bubble(perm);
    TensorWord v = w;
    Scalar f = coeff;
    for (int s : rw) {
        f *= q_of(v[s - 1], v[s]);
        std::swap(v[s - 1], v[s]);
    }
    tensor_add(out, v, f);
}

TensorElt Braided::symmetrize_word(const TensorWord& w) const {
    TensorElt out;
    Scalar one = Scalar::one(d_.field());
    for (const auto& perm : all_permutations((long)w.size())) apply_permutation(perm, w, out, one);
    return out;
}

TensorElt Braided::symmetrize(const TensorElt& t) const {
    TensorElt out;
    for (const auto& [w, c] : t) {
        TensorElt s = symmetrize_word(w);
        for (const auto& [v, x] : s) tensor_add(out, v, c * x);
    }
    return out;
}

TensorElt Braided::shuffle_piece(long i, long j, const TensorWord& w) const {
    if (i + j != (long)w.size()) throw InputError("shuffle piece degrees must sum to the word degree");
    TensorElt out;
    Scalar one = Scalar::one(d_.field());
    for (const auto& perm : shuffles(i, j)) apply_permutation(perm, w, out, one);
    return out;
}

TensorWord Braided::concat(const TensorWord& a, const TensorWord& b) {
    TensorWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Scalar Braided::cross_factor(const TensorWord& a, const TensorWord& b) const {
    Scalar f = Scalar::one(d_.field());
    for (auto x : a)
        for (auto y : b) f *= q_of(x, y);
    return f;
}

TensorElt2 Braided::mult2(const TensorElt2& a, const TensorElt2& b) const {
    TensorElt2 out;
    for (const auto& [pa, ca] : a) {
        for (const auto& [pb, cb] : b) {
            Scalar f = ca * cb * cross_factor(pa.second, pb.first);
            tensor_add2(out, concat(pa.first, pb.first), concat(pa.second, pb.second), f);
        }
    }
    return out;
}

TensorElt2 Braided::shuffle_coproduct(const TensorElt& t) const {
    TensorElt2 out;
    for (const auto& [w, c] : t) {
        long n = (long)w.size();
        // expand prod_k (x_k (x) 1 + 1 (x) x_k): subset S goes to the left leg
        for (long mask = 0; mask < (1L << n); ++mask) {
            TensorWord left, right;
            Scalar f = c;
            for (long k = 0; k < n; ++k) {
                if (mask & (1L << k)) {
                    // letter k goes left; it crosses every earlier letter that went right
                    for (long m = 0; m < k; ++m)
                        if (!(mask & (1L << m))) f *= q_of(w[m], w[k]);
                    left.push_back(w[k]);
                } else {
                    right.push_back(w[k]);
                }
            }
            tensor_add2(out, left, right, f);
        }
    }
    return out;
}

TensorElt Braided::generator(long i) const {
    TensorElt t;
    t[TensorWord{(std::uint8_t)i}] = Scalar::one(d_.field());
    return t;
}

TensorElt Braided::braided_commutator(const TensorElt& a, const TensorElt& b) const {
    TensorElt out;
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) {
            Scalar c = cu * cv;
            tensor_add(out, concat(u, v), c);
            tensor_add(out, concat(v, u), -(c * cross_factor(u, v)));
        }
    }
    return out;
}

TensorElt Braided::ad_power(long i, long m, long j) const {
    TensorElt acc = generator(j);
    TensorElt xi = generator(i);
    for (long t = 0; t < m; ++t) acc = braided_commutator(xi, acc);
    return acc;
}

std::vector<TensorWord> Braided::word_basis(long n) const {
    check_budget(n);
    long theta = d_.rank();
    std::vector<TensorWord> out;
    TensorWord cur(n, 0);
    long total = 1;
    for (long t = 0; t < n; ++t) total *= theta;
    out.reserve(total);
    for (long c = 0; c < total; ++c) {
        out.push_back(cur);
        for (long k = n - 1; k >= 0; --k) {
            if (++cur[k] < theta) break;
            cur[k] = 0;
        }
    }
    return out;
}

long Braided::word_index(const TensorWord& w) const {
    long theta = d_.rank();
    long idx = 0;
    for (auto l : w) idx = idx * theta + l;
    return idx;
}

void Braided::check_budget(long n) const {
    double size = 1;
    for (long t = 0; t < n; ++t) size *= (double)d_.rank();
    if (size > (double)basis_budget) {
        std::ostringstream os;
        os << "tensor degree " << n << " needs " << size << " basis words, budget is " << basis_budget;
        throw ResourceError(os.str());
    }
}

std::vector<SparseRow> Braided::nichols_relations(long n) const {
    auto words = word_basis(n);
    // we want vectors x with S_n(x) = 0, i.e. sum_k x_k S_n(w_k) = 0:
    // assemble the matrix whose columns are S_n(w_k), rows indexed by target word
    std::vector<SparseRow> cols(words.size());
    par::for_range((std::int64_t)words.size(), [&](std::int64_t k) {
        TensorElt img = symmetrize_word(words[k]);
        SparseRow r;
        for (const auto& [v, c] : img) r[word_index(v)] = c;
        cols[k] = std::move(r);
    });
    std::vector<SparseRow> mat(words.size());  // transpose into row-major
    for (size_t k = 0; k < cols.size(); ++k)
        for (const auto& [row, c] : cols[k]) mat[row][(long)k] = c;
    return kernel_basis(d_.field(), (long)words.size(), std::move(mat));
}

long Braided::image_rank(long n) const {
    auto words = word_basis(n);
    std::vector<SparseRow> rows(words.size());
    par::for_range((std::int64_t)words.size(), [&](std::int64_t k) {
        TensorElt img = symmetrize_word(words[k]);
        SparseRow r;
        for (const auto& [v, c] : img) r[word_index(v)] = c;
        rows[k] = std::move(r);
    });
    return matrix_rank((long)words.size(), std::move(rows));
}

}  // namespace qlift
