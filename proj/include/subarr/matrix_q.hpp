#ifndef SUBARR_MATRIX_Q_HPP
#define SUBARR_MATRIX_Q_HPP

#include "subarr/rational.hpp"

#include <cstddef>
#include <vector>

namespace subarr {

// Dense row-major matrix over Q. Rows/cols may be zero (an empty equation
// system or the zero subspace both show up as 0 x n matrices).
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static MatrixQ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    void append_row(const std::vector<Rational>& row);
    void swap_rows(std::size_t a, std::size_t b);

    bool operator==(const MatrixQ& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    MatrixQ matrix; // reduced row echelon form, zero rows dropped
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan elimination over Q. The returned matrix is the canonical
// representative of the row space of m.
RrefResult rref(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

// Canonical basis (RREF rows) of {x : m x = 0}.
MatrixQ kernel_basis(const MatrixQ& m);

// Rows of a on top of rows of b; column counts must agree.
MatrixQ stack(const MatrixQ& a, const MatrixQ& b);

} // namespace subarr

#endif
