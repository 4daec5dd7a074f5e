#include "qlift/linalg.hpp"

#include <algorithm>

#include "qlift/parallel.hpp"

namespace qlift {

void row_add_scaled(SparseRow& dst, const Scalar& c, const SparseRow& src) {
    if (c.is_zero()) return;
    for (const auto& [col, val] : src) {
        auto it = dst.find(col);
        if (it == dst.end()) {
            Scalar nv = c * val;
            if (!nv.is_zero()) dst.emplace(col, std::move(nv));
        } else {
            it->second += c * val;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

SparseRow RowEchelon::reduce(SparseRow v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        auto it = v.find(pivot_cols_[i]);
        if (it == v.end()) continue;
        Scalar c = -it->second;
        row_add_scaled(v, c, rows_[i]);
    }
    return v;
}

bool RowEchelon::insert(SparseRow v) {
    long my_index = inserted_++;
    SparseRow expr;  // expression of the reduced row in terms of inserted vectors
    for (size_t i = 0; i < rows_.size(); ++i) {
        auto it = v.find(pivot_cols_[i]);
        if (it == v.end()) continue;
        Scalar c = -it->second;
        row_add_scaled(v, c, rows_[i]);
        if (tracking_) row_add_scaled(expr, c, history_[i]);
    }
    if (v.empty()) return false;
    long pc = v.begin()->first;
    Scalar inv = v.begin()->second.inverse();
    SparseRow norm;
    for (auto& [col, val] : v) norm[col] = inv * val;
    if (tracking_) {
        SparseRow hist = expr;
        auto one = Scalar::one(inv.field());
        auto it = hist.find(my_index);
        hist[my_index] = (it == hist.end() ? Scalar() : it->second) + one;
        SparseRow scaled;
        for (auto& [k, val] : hist) {
            Scalar s = inv * val;
            if (!s.is_zero()) scaled[k] = s;
        }
        history_.push_back(std::move(scaled));
    }
    rows_.push_back(std::move(norm));
    pivot_cols_.push_back(pc);
    return true;
}

void RowEchelon::insert_all(std::vector<SparseRow> in) {
    // Eliminate all pending rows against each new pivot in parallel; the
    // sequential pivot selection keeps the result deterministic.
    while (true) {
        // find the next nonzero row (first by index) after reduction
        long found = -1;
        for (size_t i = 0; i < in.size(); ++i) {
            if (!in[i].empty()) {
                found = (long)i;
                break;
            }
        }
        if (found < 0) break;
        SparseRow v = std::move(in[found]);
        in[found].clear();
        SparseRow r = reduce(std::move(v));
        if (r.empty()) continue;
        long pc = r.begin()->first;
        Scalar inv = r.begin()->second.inverse();
        SparseRow norm;
        for (auto& [col, val] : r) norm[col] = inv * val;
        rows_.push_back(std::move(norm));
        pivot_cols_.push_back(pc);
        const SparseRow& pivot_row = rows_.back();
        // knock the new pivot column out of every pending row
        par::for_range((std::int64_t)in.size(), [&](std::int64_t i) {
            auto it = in[i].find(pc);
            if (it == in[i].end()) return;
            Scalar c = -it->second;
            row_add_scaled(in[i], c, pivot_row);
        });
    }
}

bool RowEchelon::contains(const SparseRow& v) const { return reduce(v).empty(); }

std::vector<std::pair<long, Scalar>> RowEchelon::coordinates(SparseRow v) const {
    if (!tracking_) throw MathError("coordinate tracking was not enabled");
    SparseRow expr;
    for (size_t i = 0; i < rows_.size(); ++i) {
        auto it = v.find(pivot_cols_[i]);
        if (it == v.end()) continue;
        Scalar c = it->second;
        row_add_scaled(v, -c, rows_[i]);
        row_add_scaled(expr, c, history_[i]);
    }
    if (!v.empty()) throw MathError("vector lies outside the tracked span");
    std::vector<std::pair<long, Scalar>> out(expr.begin(), expr.end());
    return out;
}

long matrix_rank(long ncols, std::vector<SparseRow> rows) {
    RowEchelon ech(ncols);
    ech.insert_all(std::move(rows));
    return ech.rank();
}

std::vector<SparseRow> kernel_basis(const CycloField* f, long ncols, std::vector<SparseRow> rows) {
    // reduce to RREF
    RowEchelon ech(ncols);
    ech.insert_all(std::move(rows));
    // back-substitute to full reduced form
    std::vector<SparseRow> rref = ech.rows();
    std::vector<long> pivots = ech.pivots();
    // order rows by pivot column
    std::vector<size_t> order(rref.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return pivots[a] < pivots[b]; });
    std::vector<SparseRow> r2;
    std::vector<long> p2;
    for (size_t i : order) {
        r2.push_back(rref[i]);
        p2.push_back(pivots[i]);
    }
    // eliminate above pivots
    for (size_t i = r2.size(); i-- > 0;) {
        for (size_t j = 0; j < i; ++j) {
            auto it = r2[j].find(p2[i]);
            if (it == r2[j].end()) continue;
            Scalar c = -it->second;
            row_add_scaled(r2[j], c, r2[i]);
        }
    }
    std::vector<bool> is_pivot(ncols, false);
    for (long p : p2) is_pivot[p] = true;
    std::vector<SparseRow> kernel;
    for (long col = 0; col < ncols; ++col) {
        if (is_pivot[col]) continue;
        SparseRow k;
        // x_col = 1, pivot variables read off the RREF
        for (size_t i = 0; i < r2.size(); ++i) {
            auto it = r2[i].find(col);
            if (it != r2[i].end()) k[p2[i]] = -it->second;
        }
        k[col] = Scalar::one(f);
        kernel.push_back(std::move(k));
    }
    return kernel;
}

std::vector<Scalar> solve_combination(long ncols, const std::vector<SparseRow>& rows,
                                      const SparseRow& target, bool* ok) {
    RowEchelon ech(ncols);
    ech.enable_tracking();
    for (const auto& r : rows) ech.insert(r);
    std::vector<Scalar> coeffs(rows.size(), Scalar());
    try {
        auto combo = ech.coordinates(target);
        for (auto& [idx, c] : combo) coeffs[idx] = c;
        if (ok) *ok = true;
    } catch (const MathError&) {
        if (ok) *ok = false;
    }
    return coeffs;
}

}  // namespace qlift
