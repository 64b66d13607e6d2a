#ifndef SUBARR_POSET_HPP
#define SUBARR_POSET_HPP

#include "subarr/arrangement.hpp"
#include "subarr/simplicial.hpp"
#include "subarr/subspace.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace subarr {

// 64-bit masks index atoms; bit a corresponds to Arrangement::atoms[a].
using AtomMask = std::uint64_t;
constexpr std::size_t kMaxAtomBits = 62;

struct PosetNode {
    std::int32_t id = 0;
    SubspaceBasis subspace;
    std::size_t dim = 0;
    AtomMask atoms_above = 0; // atoms whose subspace contains this node's
};

struct PosetCaps {
    std::size_t max_nodes = 200000;
};

// All intersections of atom subsets, ordered by reverse inclusion. Node 0 is
// the ambient space (the empty intersection); the order goes downward in
// subspace dimension. Closed under pairwise intersection by construction, so
// joins stay inside the node set.
class IntersectionPoset {
public:
    static constexpr std::int32_t kBottom = 0;

    const std::vector<PosetNode>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t atom_count() const { return atom_count_; }
    std::size_t dim(std::int32_t u) const { return nodes_[u].dim; }

    // Node realizing atom a as a poset element.
    std::int32_t atom_node(std::size_t a) const { return join_with_atom_[0][a]; }

    // -1 when the arrangement is empty (the top ∩A only exists otherwise).
    std::int32_t top() const { return top_; }

    std::int32_t join_with_atom(std::int32_t u, std::size_t a) const {
        return join_with_atom_[u][a];
    }

    // Poset join = subspace intersection; folds join_with_atom over the
    // atoms above v.
    std::int32_t join(std::int32_t u, std::int32_t v) const;

    // u <= v in the reverse-inclusion order.
    bool leq(std::int32_t u, std::int32_t v) const;

    // dim(u) + dim(v) - dim(u v join) == ambient dimension, i.e. the two
    // subspaces sum to the whole space.
    bool sum_is_ambient(std::int32_t u, std::int32_t v) const;

    // Mobius values mu(bottom, u) for every node.
    std::vector<std::int64_t> mobius_from_bottom() const;

    // Order complex of the open interval (bottom, u); u must not be the
    // bottom. Vertices are labeled with poset node ids.
    SimplicialComplex open_interval_complex(std::int32_t u) const;

    std::vector<std::pair<std::int32_t, std::int32_t>> cover_relations() const;

    friend IntersectionPoset build_poset(const Arrangement& a, const PosetCaps& caps);
    friend IntersectionPoset poset_closure(std::size_t ambient_dim,
                                           const std::vector<SubspaceBasis>& generators,
                                           const PosetCaps& caps);

private:
    std::size_t ambient_dim_ = 0;
    std::size_t atom_count_ = 0;
    std::int32_t top_ = -1;
    std::vector<PosetNode> nodes_;
    std::vector<std::vector<std::int32_t>> join_with_atom_;
};

IntersectionPoset build_poset(const Arrangement& a, const PosetCaps& caps = {});

// Worklist closure over an arbitrary generating set of subspaces (no
// antichain requirements); build_poset delegates here and the idempotence
// tests call it directly.
IntersectionPoset poset_closure(std::size_t ambient_dim,
                                const std::vector<SubspaceBasis>& generators,
                                const PosetCaps& caps = {});

} // namespace subarr

#endif
