#ifndef SUBARR_SUBSPACE_HPP
#define SUBARR_SUBSPACE_HPP

#include "subarr/matrix_q.hpp"

#include <cstddef>
#include <string>

namespace subarr {

// A linear subspace of Q^n in canonical form: the basis matrix is the RREF
// of whatever spanning or equation rows the subspace was built from, with
// zero rows dropped. Two SubspaceBasis values describe the same subspace iff
// they compare equal, so the basis doubles as an identity key.
class SubspaceBasis {
public:
    SubspaceBasis() = default;

    static SubspaceBasis from_span(std::size_t ambient_dim, const MatrixQ& rows);
    static SubspaceBasis from_equations(std::size_t ambient_dim, const MatrixQ& equations);
    static SubspaceBasis full_space(std::size_t ambient_dim);
    static SubspaceBasis zero_space(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.rows(); }
    const MatrixQ& basis() const { return basis_; }

    // Canonical equation matrix E with this = {x : E x = 0}.
    MatrixQ equations() const;

    bool operator==(const SubspaceBasis& other) const = default;

    // Stable textual key, used for poset node deduplication.
    std::string key() const;

private:
    std::size_t ambient_dim_ = 0;
    MatrixQ basis_; // RREF, full row rank
};

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

// dim(a + b), the rank of the stacked bases.
std::size_t sum_dim(const SubspaceBasis& a, const SubspaceBasis& b);

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b);

// True iff inner is contained in outer.
bool subspace_contains(const SubspaceBasis& outer, const SubspaceBasis& inner);

} // namespace subarr

#endif
