#ifndef SUBARR_SIMPLICIAL_HPP
#define SUBARR_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

namespace subarr {

// Abstract simplicial complex, stored as an explicit list of simplices per
// dimension. Simplices are strictly increasing tuples of vertex indices
// (positions into vertex_labels), and each per-dimension list is sorted
// lexicographically. Faces are implied: every chain complex consumer
// generates them on demand.
//
// is_void marks the complex with an empty vertex set. Reduced homology
// treats it as the complex whose only face is the empty simplex, so
// H~_{-1} = Z_2 there and vanishes as soon as a vertex exists.
struct SimplicialComplex {
    std::vector<std::int32_t> vertex_labels;
    bool is_void = true;
    std::vector<std::vector<std::vector<std::int32_t>>> simplices_by_dim;

    std::size_t vertex_count() const { return vertex_labels.size(); }
    int max_dim() const { return static_cast<int>(simplices_by_dim.size()) - 1; }
};

// Builds the complex of all strictly increasing chains of a relation given
// by less(i, j) ("i precedes j") on vertices 0..count-1. The relation must
// be a strict partial order compatible with index order (less(i,j) implies
// i < j).
SimplicialComplex chain_complex_of_relation(
    const std::vector<std::int32_t>& vertex_labels,
    const std::vector<std::vector<bool>>& less);

} // namespace subarr

#endif
