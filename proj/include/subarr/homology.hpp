#ifndef SUBARR_HOMOLOGY_HPP
#define SUBARR_HOMOLOGY_HPP

#include "subarr/dga.hpp"
#include "subarr/gf2.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace subarr {

struct BlockHomology {
    std::int32_t node = 0;
    int degree = 0;
    std::size_t block_dim = 0;
    std::size_t betti = 0;
    // Cocycle representatives spanning a complement of the coboundary space
    // inside the cocycle space, pivot-chosen from the kernel basis.
    std::vector<std::vector<AtomMask>> representatives;
    std::vector<std::vector<AtomMask>> coboundary_basis;
    std::vector<AtomMask> coboundary_preimages; // delta(preimage) = basis elt
};

struct HomologySummary {
    std::vector<BlockHomology> blocks; // aligned with GradedBasis::blocks()
    std::map<int, std::size_t> betti_by_degree;

    // Betti numbers for degrees 0..top inclusive.
    std::vector<std::size_t> betti_vector(std::size_t top) const;
};

// Per-block kernels, coboundary bases and Betti numbers of the graded
// cochain complex. The differential maps each (node, degree) block into the
// (node, degree + 1) block, so blocks are independent; they are processed in
// parallel up to `width` threads with a deterministic merge.
HomologySummary homology(const GradedBasis& basis, unsigned width = 1);

} // namespace subarr

#endif
