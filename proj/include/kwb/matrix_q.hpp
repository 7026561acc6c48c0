#pragma once

#include <kwb/partitions.hpp>
#include <kwb/rational.hpp>

#include <cstddef>
#include <vector>

namespace kwb {

// Dense exact-rational matrix.  Row and column labels are optional partition
// tags carried along for serialization; they play no role in the arithmetic.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Partition> row_labels;
    std::vector<Partition> col_labels;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Exact rank over the rationals: rows are scaled to integers, then
// fraction-free (Bareiss) elimination with first-nonzero pivoting.
// Deterministic for a fixed input.
std::size_t matrix_rank(const MatrixQ& m);

// Exact determinant of a square matrix, same elimination scheme.
Rational matrix_det(const MatrixQ& m);

}  // namespace kwb
