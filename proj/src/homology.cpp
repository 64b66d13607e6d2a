#include "subarr/homology.hpp"

#include "subarr/error.hpp"
#include "subarr/util.hpp"

#include <string>

namespace subarr {

std::vector<std::size_t> HomologySummary::betti_vector(std::size_t top) const {
    std::vector<std::size_t> out(top + 1, 0);
    for (const auto& [degree, count] : betti_by_degree) {
        if (degree >= 0 && degree <= static_cast<int>(top)) {
            out[degree] = count;
        }
    }
    return out;
}

namespace {

// Coboundary of block element `m` as a bit vector over the positions of the
// next block in the same node.
BitVec coboundary_in_next_block(const GradedBasis& basis, int next_block,
                                std::size_t next_dim, AtomMask m) {
    BitVec v = make_bitvec(next_dim == 0 ? 1 : next_dim);
    for (AtomMask t : basis.coboundary(m)) {
        if (next_block < 0) {
            consistency_error("coboundary term escapes the graded basis");
        }
        bit_set(v, basis.position_in_block(next_block, t));
    }
    return v;
}

} // namespace

HomologySummary homology(const GradedBasis& basis, unsigned width) {
    if (const auto bad = find_delta_squared_failure(basis)) {
        consistency_error(
            "differential does not square to zero on subset mask " +
            std::to_string(*bad));
    }

    const auto& blocks = basis.blocks();
    HomologySummary summary;
    summary.blocks.resize(blocks.size());

    parallel_for(blocks.size(), width, [&](std::size_t b) {
        const DgaBlock& block = blocks[b];
        const std::size_t dim = block.masks.size();

        BlockHomology out;
        out.node = block.node;
        out.degree = block.degree;
        out.block_dim = dim;

        const int next = basis.block_of(block.node, block.degree + 1);
        const std::size_t next_dim =
            next >= 0 ? blocks[next].masks.size() : 0;

        // Kernel of the outgoing differential.
        GF2Matrix outgoing(next_dim, dim);
        for (std::size_t s = 0; s < dim; ++s) {
            for (AtomMask t : basis.coboundary(block.masks[s])) {
                outgoing.set(basis.position_in_block(next, t), s);
            }
        }
        const std::vector<BitVec> kernel = kernel_basis_gf2(outgoing);

        // Image of the incoming differential, with recorded preimages.
        Gf2Solver span(dim == 0 ? 1 : dim);
        const int prev = basis.block_of(block.node, block.degree - 1);
        if (prev >= 0) {
            for (AtomMask source : blocks[prev].masks) {
                BitVec image =
                    coboundary_in_next_block(basis, static_cast<int>(b), dim, source);
                if (bit_is_zero(image)) continue;
                std::vector<AtomMask> image_masks;
                for (AtomMask t : basis.coboundary(source)) image_masks.push_back(t);
                if (span.add(std::move(image))) {
                    out.coboundary_basis.push_back(std::move(image_masks));
                    out.coboundary_preimages.push_back(source);
                }
            }
        }
        const std::size_t image_rank = span.rank();

        // Complete the coboundary space to the cocycle space; the added
        // kernel vectors are the class representatives.
        for (const BitVec& z : kernel) {
            BitVec copy = z;
            if (!span.add(std::move(copy))) continue;
            std::vector<AtomMask> rep;
            for (std::size_t i = 0; i < dim; ++i) {
                if (bit_get(z, i)) rep.push_back(block.masks[i]);
            }
            out.representatives.push_back(std::move(rep));
        }
        out.betti = out.representatives.size();
        if (out.betti != kernel.size() - image_rank) {
            consistency_error(
                "block homology bookkeeping failed at node " +
                std::to_string(block.node) + " degree " +
                std::to_string(block.degree));
        }
        summary.blocks[b] = std::move(out);
    });

    for (const BlockHomology& block : summary.blocks) {
        if (block.betti > 0) summary.betti_by_degree[block.degree] += block.betti;
    }
    return summary;
}

} // namespace subarr
