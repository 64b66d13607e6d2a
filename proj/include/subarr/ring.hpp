#ifndef SUBARR_RING_HPP
#define SUBARR_RING_HPP

#include "subarr/dga.hpp"
#include "subarr/homology.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace subarr {

struct RingClass {
    std::size_t index = 0; // global, ordered by (degree, block, rep)
    int degree = 0;
    std::int32_t node = 0;
    std::vector<AtomMask> representative;
    std::string label; // "h<degree>.<position within degree>"
};

// Graded class basis with structure constants. products[(a, b)] lists the
// class indices (ascending) whose sum is the class of rep(a) * rep(b); the
// table covers every ordered pair and is symmetric.
struct CohomologyRing {
    std::vector<RingClass> classes;
    std::map<int, std::vector<std::size_t>> classes_by_degree;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>
        products;
    std::size_t unit_class = 0;

    const std::vector<std::size_t>& product(std::size_t a, std::size_t b) const {
        return products.at({a, b});
    }
};

// Multiplies class representatives pairwise, checks each product is a
// cocycle, and reduces it modulo coboundaries to class coordinates. A
// product that fails to be a cocycle or to reduce is a consistency error
// carrying the witness pair.
CohomologyRing compute_ring(const GradedBasis& basis,
                            const HomologySummary& hom);

struct IndependenceAudit {
    std::size_t perturbations_per_class = 0;
    std::size_t classes_audited = 0;
    std::size_t products_checked = 0;
    std::vector<std::string> discrepancies; // witness text, empty when clean
};

// Perturbs each class representative by random coboundaries and recomputes
// its full product row; any class-level change is recorded (not thrown).
IndependenceAudit audit_representative_independence(
    const CohomologyRing& ring, const GradedBasis& basis,
    const HomologySummary& hom, std::size_t perturbations_per_class,
    std::uint64_t seed, unsigned width = 1);

} // namespace subarr

#endif
