#include "subarr/gf2.hpp"

#include <algorithm>
#include <bit>

namespace subarr {

int bit_lowest(const BitVec& v) {
    for (std::size_t w = 0; w < v.size(); ++w) {
        if (v[w]) {
            return static_cast<int>(w * 64 + std::countr_zero(v[w]));
        }
    }
    return -1;
}

std::size_t rank_gf2(const GF2Matrix& m) {
    Gf2Solver solver(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        solver.add(m.row_copy(r));
    }
    return solver.rank();
}

std::vector<BitVec> kernel_basis_gf2(const GF2Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    // Gauss-Jordan on the rows, pivot columns ascending.
    std::vector<BitVec> work;
    work.reserve(rows);
    for (std::size_t r = 0; r < rows; ++r) work.push_back(m.row_copy(r));

    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t sel = pr;
        while (sel < rows && !bit_get(work[sel], col)) ++sel;
        if (sel == rows) continue;
        std::swap(work[pr], work[sel]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != pr && bit_get(work[r], col)) bit_xor(work[r], work[pr]);
        }
        pivot_cols.push_back(col);
        ++pr;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<BitVec> kernel;
    kernel.reserve(cols - pivot_cols.size());
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVec v = make_bitvec(cols);
        bit_set(v, free_col);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            if (bit_get(work[i], free_col)) bit_set(v, pivot_cols[i]);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

namespace {

void xor_coords(BitVec& a, const BitVec& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    bit_xor(a, b);
}

} // namespace

bool Gf2Solver::add(BitVec v) {
    BitVec coords = make_bitvec(added_ + 1);
    bit_set(coords, added_);
    ++added_;

    for (const PivotRow& row : pivots_) {
        if (bit_get(v, static_cast<std::size_t>(row.pivot))) {
            bit_xor(v, row.value);
            xor_coords(coords, row.coords);
        }
    }
    const int pivot = bit_lowest(v);
    if (pivot < 0) return false;

    // Jordan maintenance: clear the new pivot position from every stored
    // row, so a single reduction pass works regardless of pivot order.
    for (PivotRow& row : pivots_) {
        if (bit_get(row.value, static_cast<std::size_t>(pivot))) {
            bit_xor(row.value, v);
            xor_coords(row.coords, coords);
        }
    }

    PivotRow row{pivot, std::move(v), std::move(coords)};
    const auto pos = std::lower_bound(
        pivots_.begin(), pivots_.end(), pivot,
        [](const PivotRow& r, int p) { return r.pivot < p; });
    pivots_.insert(pos, std::move(row));
    return true;
}

std::optional<BitVec> Gf2Solver::express(BitVec target) const {
    BitVec coords = make_bitvec(std::max<std::size_t>(added_, 1));
    for (const PivotRow& row : pivots_) {
        if (bit_get(target, static_cast<std::size_t>(row.pivot))) {
            bit_xor(target, row.value);
            bit_xor(coords, row.coords);
        }
    }
    if (!bit_is_zero(target)) return std::nullopt;
    return coords;
}

std::optional<BitVec> solve_membership(const std::vector<BitVec>& basis,
                                       std::size_t width, const BitVec& target) {
    Gf2Solver solver(width);
    for (const BitVec& b : basis) solver.add(b);
    return solver.express(target);
}

} // namespace subarr
