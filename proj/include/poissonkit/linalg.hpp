#pragma once

#include <vector>

#include "poissonkit/rational.hpp"

namespace poissonkit {

/// Dense matrix over arbitrary-precision integers, row-major.
class ZMatrix {
public:
    ZMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    void swap_rows(int i, int j);

private:
    int rows_, cols_;
    std::vector<Integer> a_;
};

struct EchelonForm {
    ZMatrix m;                   // fraction-free row echelon form
    std::vector<int> pivot_cols; // ascending, one per pivot row
    int rank = 0;
};

/// One-step Bareiss fraction-free elimination. Columns are processed left
/// to right and the pivot is the first row with a nonzero entry, so the
/// result is deterministic; all divisions are exact. Honors the
/// POISSON_KIT_CAP_MB memory cap.
EchelonForm bareiss_echelon(ZMatrix m);

int exact_rank(ZMatrix m);

/// Nullspace basis, one vector per free column in ascending column order.
/// Vectors are primitive integer vectors (content 1) with a positive entry
/// at their free column; fully deterministic.
std::vector<std::vector<Integer>> nullspace_primitive(const ZMatrix& m);

/// Clears denominators row by row (rank is invariant under row scaling).
ZMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows, int cols);

} // namespace poissonkit
