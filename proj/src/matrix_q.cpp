#include "subarr/matrix_q.hpp"

#include "subarr/error.hpp"

#include <cassert>
#include <utility>

namespace subarr {

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void MatrixQ::append_row(const std::vector<Rational>& row) {
    assert(row.size() == cols_ || rows_ == 0);
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    assert(row.size() == cols_);
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

void MatrixQ::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(at(a, c), at(b, c));
    }
}

RrefResult rref(const MatrixQ& m) {
    MatrixQ work = m;
    const std::size_t rows = work.rows();
    const std::size_t cols = work.cols();

    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && work.at(sel, col) == 0) ++sel;
        if (sel == rows) continue;
        work.swap_rows(pivot_row, sel);

        const Rational inv = Rational(1) / work.at(pivot_row, col);
        for (std::size_t c = col; c < cols; ++c) {
            work.at(pivot_row, c) *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || work.at(r, col) == 0) continue;
            const Rational factor = work.at(r, col);
            for (std::size_t c = col; c < cols; ++c) {
                work.at(r, c) -= factor * work.at(pivot_row, c);
            }
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    MatrixQ result(pivot_row, cols);
    for (std::size_t r = 0; r < pivot_row; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            result.at(r, c) = work.at(r, c);
        }
    }
    return RrefResult{std::move(result), pivot_row, std::move(pivot_cols)};
}

std::size_t rank(const MatrixQ& m) { return rref(m).rank; }

MatrixQ kernel_basis(const MatrixQ& m) {
    const RrefResult red = rref(m);
    const std::size_t cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : red.pivot_cols) is_pivot[p] = true;

    MatrixQ basis(cols - red.rank, cols);
    std::size_t row = 0;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(row, free_col) = 1;
        for (std::size_t i = 0; i < red.rank; ++i) {
            basis.at(row, red.pivot_cols[i]) = -red.matrix.at(i, free_col);
        }
        ++row;
    }
    // Re-reduce so the kernel shares the same canonical form as every other
    // subspace basis in the system.
    return rref(basis).matrix;
}

MatrixQ stack(const MatrixQ& a, const MatrixQ& b) {
    const bool a_blank = a.rows() == 0 && a.cols() == 0;
    const bool b_blank = b.rows() == 0 && b.cols() == 0;
    if (!a_blank && !b_blank && a.cols() != b.cols()) {
        input_error("cannot stack matrices with different column counts");
    }
    const std::size_t cols = a_blank ? b.cols() : a.cols();
    MatrixQ out(a.rows() + b.rows(), cols);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = a.at(r, c);
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out.at(a.rows() + r, c) = b.at(r, c);
        }
    }
    return out;
}

} // namespace subarr
