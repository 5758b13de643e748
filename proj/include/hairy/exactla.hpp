#pragma once

#include "hairy/linear.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace hairy {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Row-sparse matrix over Q. Rows are kept sorted by column with no stored zeros.
class SparseMatrix {
public:
    explicit SparseMatrix(std::uint32_t ncols = 0) : ncols_(ncols) {}

    std::uint32_t ncols() const { return ncols_; }
    std::size_t nrows() const { return rows_.size(); }
    const std::vector<SparseRow>& rows() const { return rows_; }

    /// Adds a row given as (column, value) pairs in any order; duplicates are summed.
    void add_row(SparseRow row);
    void reserve(std::size_t n) { rows_.reserve(n); }

private:
    std::uint32_t ncols_;
    std::vector<SparseRow> rows_;
};

/// Rank over Q by fraction-free elimination on content-normalised integer rows.
/// Pivots are chosen by Markowitz cost among the sparsest columns; ties go to
/// the smallest (row, column). Deterministic and single threaded.
std::size_t rank(const SparseMatrix& m);

/// Rank by incremental echelon reduction with rational pivots. Slower; kept as
/// a second route for cross-checking `rank`.
std::size_t rank_rational(const SparseMatrix& m);

/// ambient - rank(relations). Throws std::invalid_argument if the column count
/// differs from `ambient`.
std::size_t quotient_dim(std::size_t ambient, const SparseMatrix& relations);

}  // namespace hairy
