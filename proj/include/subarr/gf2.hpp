#ifndef SUBARR_GF2_HPP
#define SUBARR_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace subarr {

// Packed GF(2) vector, 64 coordinates per word.
using BitVec = std::vector<std::uint64_t>;

inline std::size_t bitvec_words(std::size_t bits) { return (bits + 63) / 64; }

inline BitVec make_bitvec(std::size_t bits) { return BitVec(bitvec_words(bits), 0); }

inline void bit_set(BitVec& v, std::size_t i) { v[i >> 6] |= std::uint64_t{1} << (i & 63); }

inline bool bit_get(const BitVec& v, std::size_t i) {
    return (v[i >> 6] >> (i & 63)) & 1;
}

inline void bit_xor(BitVec& a, const BitVec& b) {
    for (std::size_t w = 0; w < b.size(); ++w) a[w] ^= b[w];
}

inline bool bit_is_zero(const BitVec& v) {
    for (std::uint64_t w : v) {
        if (w) return false;
    }
    return true;
}

// Index of the lowest set bit, -1 on zero.
int bit_lowest(const BitVec& v);

// Dense bit-packed matrix, row-major.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_(bitvec_words(cols)),
          data_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c) {
        data_[r * words_ + (c >> 6)] |= std::uint64_t{1} << (c & 63);
    }
    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_ + (c >> 6)] >> (c & 63)) & 1;
    }
    BitVec row_copy(std::size_t r) const {
        return BitVec(data_.begin() + r * words_, data_.begin() + (r + 1) * words_);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

std::size_t rank_gf2(const GF2Matrix& m);

// Basis of the right kernel {x : m x = 0}, one BitVec of length cols per
// free column, free columns ascending.
std::vector<BitVec> kernel_basis_gf2(const GF2Matrix& m);

// Incremental GF(2) span with coordinate tracking. Vectors handed to add()
// are numbered by arrival order; express() reports combinations in those
// numbers, including vectors that turned out to be dependent (their
// coefficient is simply never used).
class Gf2Solver {
public:
    explicit Gf2Solver(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t generators_added() const { return added_; }
    std::size_t rank() const { return pivots_.size(); }

    // True when v enlarged the span.
    bool add(BitVec v);

    // Coordinates over the added generators, or nullopt when target is
    // outside the span.
    std::optional<BitVec> express(BitVec target) const;

private:
    struct PivotRow {
        int pivot;
        BitVec value;
        BitVec coords;
    };

    std::size_t width_;
    std::size_t added_ = 0;
    std::vector<PivotRow> pivots_; // sorted by pivot bit
};

// Coordinates of target in the span of basis (vectors of length width), or
// a definite not-in-span verdict (nullopt).
std::optional<BitVec> solve_membership(const std::vector<BitVec>& basis,
                                       std::size_t width, const BitVec& target);

} // namespace subarr

#endif
