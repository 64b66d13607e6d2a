#ifndef SUBARR_DGA_HPP
#define SUBARR_DGA_HPP

#include "subarr/poset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace subarr {

// Homogeneous Z_2 cochain: a formal sum of atom subsets of equal degree,
// kept as a sorted, duplicate-free mask list.
struct Cochain {
    int degree = 0;
    std::vector<AtomMask> terms;

    bool is_zero() const { return terms.empty(); }
};

// XOR-normalizes an unsorted term list (sorts, cancels pairs).
void normalize_terms(std::vector<AtomMask>& terms);

struct DgaBlock {
    std::int32_t node = 0; // common join of every subset in the block
    int degree = 0;        // ambient - |subset| - dim(join)
    std::vector<AtomMask> masks; // ascending
};

// Flat view of all blocks sharing one degree, in block order; used to give
// every subset of that degree a global column index.
struct DegreeSlice {
    int degree = 0;
    std::vector<std::size_t> block_indices;
    std::vector<std::size_t> offsets; // parallel to block_indices
    std::size_t total = 0;
};

// Basis of the relative atomic cochain algebra: every subset of the atom
// set, filed under (join node, degree). Joins are memoized for all masks in
// one sweep (join of a mask extends the join of the mask without its lowest
// atom), which also serves every later coboundary/product query.
class GradedBasis {
public:
    GradedBasis(const IntersectionPoset& poset, std::size_t max_total_subsets);

    const IntersectionPoset& poset() const { return *poset_; }
    std::size_t atom_count() const { return poset_->atom_count(); }
    std::size_t total_subsets() const { return join_of_mask_.size(); }

    std::int32_t join_of(AtomMask m) const { return join_of_mask_[m]; }
    int degree_of(AtomMask m) const {
        return static_cast<int>(poset_->ambient_dim()) -
               std::popcount(m) -
               static_cast<int>(poset_->dim(join_of_mask_[m]));
    }

    const std::vector<DgaBlock>& blocks() const { return blocks_; }
    // -1 when that (node, degree) block is empty.
    int block_of(std::int32_t node, int degree) const;
    // Position of a mask inside the block that files it.
    std::size_t position_in_block(int block_index, AtomMask m) const;

    const DegreeSlice* degree_slice(int degree) const;
    // Column index of m within its degree's slice.
    std::size_t flat_index(AtomMask m) const;

    // Join-preserving single-atom removals; ascending masks. Every term has
    // the same join as m and degree degree_of(m) + 1.
    std::vector<AtomMask> coboundary(AtomMask m) const;
    Cochain coboundary(const Cochain& c) const;

    // Union of the two subsets when their joins sum to the ambient space,
    // nullopt otherwise (the zero cochain).
    std::optional<AtomMask> product(AtomMask a, AtomMask b) const;
    Cochain product(const Cochain& a, const Cochain& b) const;

private:
    const IntersectionPoset* poset_;
    std::vector<std::int32_t> join_of_mask_;
    std::vector<DgaBlock> blocks_;
    std::map<std::pair<std::int32_t, int>, int> block_index_;
    std::map<int, DegreeSlice> degree_slices_;
};

// Exhaustive delta-squared check over every enumerated subset; returns the
// first offending mask or nullopt when the differential squares to zero.
std::optional<AtomMask> find_delta_squared_failure(const GradedBasis& basis);

// Pairwise audit of the cochain-level product: Leibniz rule
// d(a*b) = da*b + a*db, degree additivity and disjointness of nonzero
// products. Exhaustive over all subset pairs up to `pair_budget`; beyond
// that a deterministic stride sample is taken and `exhaustive` is false.
struct ProductAudit {
    std::size_t pairs_checked = 0;
    bool exhaustive = true;
    std::size_t nonzero_products = 0;
    bool degree_additivity_ok = true;
    bool disjointness_ok = true;
    std::vector<std::string> leibniz_violations; // capped witness list
    std::size_t leibniz_violation_count = 0;
    std::vector<std::string> grading_violations;
};

ProductAudit audit_products(const GradedBasis& basis, unsigned width = 1,
                            std::size_t pair_budget = std::size_t{1} << 28);

} // namespace subarr

#endif
