#pragma once

#include <map>
#include <vector>

#include "qlift/cyclotomic.hpp"

namespace qlift {

// Sparse row vector over Q(zeta_E), keyed by column index.
using SparseRow = std::map<long, Scalar>;

void row_add_scaled(SparseRow& dst, const Scalar& c, const SparseRow& src);

// Exact row-echelon machinery. Rows are eliminated in place; the parallel
// path distributes the per-pivot row updates across workers, which commutes
// with the serial order (each row update is independent), so results are
// identical for any worker count.
class RowEchelon {
  public:
    explicit RowEchelon(long ncols) : ncols_(ncols) {}

    // Reduce v against the current echelon set; returns the remainder.
    SparseRow reduce(SparseRow v) const;

    // Insert a vector; returns true if it enlarged the span.
    bool insert(SparseRow v);

    // Insert many vectors at once (possibly in parallel).
    void insert_all(std::vector<SparseRow> rows);

    long rank() const { return (long)rows_.size(); }
    long ncols() const { return ncols_; }
    bool contains(const SparseRow& v) const;

    // Coordinates of v against the originally inserted vectors, if tracking
    // was enabled before any insert. Throws MathError when v is outside the span.
    void enable_tracking() { tracking_ = true; }
    std::vector<std::pair<long, Scalar>> coordinates(SparseRow v) const;

    const std::vector<SparseRow>& rows() const { return rows_; }
    const std::vector<long>& pivots() const { return pivot_cols_; }

  private:
    long ncols_;
    bool tracking_ = false;
    std::vector<SparseRow> rows_;        // echelon rows, pivot normalized to 1
    std::vector<long> pivot_cols_;       // pivot column per row
    std::vector<SparseRow> history_;     // row i of the transform matrix (tracking)
    long inserted_ = 0;
};

// Rank of a matrix given as a list of sparse rows.
long matrix_rank(long ncols, std::vector<SparseRow> rows);

// Basis of the right kernel of the ncols-column matrix (vectors x with Ax=0),
// where `rows` are the matrix rows. Deterministic ordering (by free column).
std::vector<SparseRow> kernel_basis(const CycloField* f, long ncols, std::vector<SparseRow> rows);

// Solve A^T ... convenience: find x with sum_i x_i rows[i] = target.
// Returns empty optional-like flag via thrown MathError when unsolvable.
std::vector<Scalar> solve_combination(long ncols, const std::vector<SparseRow>& rows,
                                      const SparseRow& target, bool* ok);

}  // namespace qlift
