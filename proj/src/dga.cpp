#include "subarr/dga.hpp"

#include "subarr/error.hpp"
#include "subarr/util.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace subarr {

void normalize_terms(std::vector<AtomMask>& terms) {
    std::sort(terms.begin(), terms.end());
    std::vector<AtomMask> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms[i]);
        i = j;
    }
    terms = std::move(out);
}

GradedBasis::GradedBasis(const IntersectionPoset& poset,
                         std::size_t max_total_subsets)
    : poset_(&poset) {
    const std::size_t atoms = poset.atom_count();
    const std::size_t total = std::size_t{1} << atoms;
    if (total > max_total_subsets) {
        cap_error("enumerating 2^" + std::to_string(atoms) + " = " +
                  std::to_string(total) +
                  " atom subsets (the top node has all " +
                  std::to_string(atoms) +
                  " atoms above it) exceeds max_block_dim = " +
                  std::to_string(max_total_subsets));
    }

    join_of_mask_.assign(total, 0);
    for (AtomMask m = 1; m < total; ++m) {
        const int lowest = std::countr_zero(m);
        join_of_mask_[m] =
            poset.join_with_atom(join_of_mask_[m & (m - 1)], lowest);
    }

    std::map<std::pair<std::int32_t, int>, std::vector<AtomMask>> filed;
    for (AtomMask m = 0; m < total; ++m) {
        filed[{join_of_mask_[m], degree_of(m)}].push_back(m);
    }

    blocks_.reserve(filed.size());
    for (auto& [key, masks] : filed) {
        const int idx = static_cast<int>(blocks_.size());
        block_index_.emplace(key, idx);
        DgaBlock block;
        block.node = key.first;
        block.degree = key.second;
        block.masks = std::move(masks); // ascending: filed in mask order
        blocks_.push_back(std::move(block));
    }

    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        DegreeSlice& slice = degree_slices_[blocks_[b].degree];
        slice.degree = blocks_[b].degree;
        slice.block_indices.push_back(b);
        slice.offsets.push_back(slice.total);
        slice.total += blocks_[b].masks.size();
    }
}

int GradedBasis::block_of(std::int32_t node, int degree) const {
    const auto it = block_index_.find({node, degree});
    return it == block_index_.end() ? -1 : it->second;
}

std::size_t GradedBasis::position_in_block(int block_index, AtomMask m) const {
    const auto& masks = blocks_[block_index].masks;
    const auto it = std::lower_bound(masks.begin(), masks.end(), m);
    return static_cast<std::size_t>(it - masks.begin());
}

const DegreeSlice* GradedBasis::degree_slice(int degree) const {
    const auto it = degree_slices_.find(degree);
    return it == degree_slices_.end() ? nullptr : &it->second;
}

std::size_t GradedBasis::flat_index(AtomMask m) const {
    const int b = block_of(join_of_mask_[m], degree_of(m));
    const DegreeSlice& slice = degree_slices_.at(blocks_[b].degree);
    for (std::size_t i = 0; i < slice.block_indices.size(); ++i) {
        if (slice.block_indices[i] == static_cast<std::size_t>(b)) {
            return slice.offsets[i] + position_in_block(b, m);
        }
    }
    consistency_error("mask not filed in its degree slice");
}

std::vector<AtomMask> GradedBasis::coboundary(AtomMask m) const {
    std::vector<AtomMask> out;
    const std::int32_t join = join_of_mask_[m];
    AtomMask bits = m;
    while (bits) {
        const AtomMask low = bits & (~bits + 1);
        bits &= bits - 1;
        const AtomMask removed = m ^ low;
        if (join_of_mask_[removed] == join) out.push_back(removed);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Cochain GradedBasis::coboundary(const Cochain& c) const {
    Cochain out;
    out.degree = c.degree + 1;
    for (AtomMask m : c.terms) {
        const auto terms = coboundary(m);
        out.terms.insert(out.terms.end(), terms.begin(), terms.end());
    }
    normalize_terms(out.terms);
    return out;
}

std::optional<AtomMask> GradedBasis::product(AtomMask a, AtomMask b) const {
    const std::int32_t ja = join_of_mask_[a];
    const std::int32_t jb = join_of_mask_[b];
    const AtomMask both = a | b;
    if (poset_->dim(ja) + poset_->dim(jb) !=
        poset_->ambient_dim() + poset_->dim(join_of_mask_[both])) {
        return std::nullopt;
    }
    return both;
}

Cochain GradedBasis::product(const Cochain& a, const Cochain& b) const {
    Cochain out;
    out.degree = a.degree + b.degree;
    for (AtomMask ma : a.terms) {
        for (AtomMask mb : b.terms) {
            if (const auto m = product(ma, mb)) out.terms.push_back(*m);
        }
    }
    normalize_terms(out.terms);
    return out;
}

std::optional<AtomMask> find_delta_squared_failure(const GradedBasis& basis) {
    const std::size_t total = basis.total_subsets();
    for (AtomMask m = 0; m < total; ++m) {
        std::vector<AtomMask> twice;
        for (AtomMask t : basis.coboundary(m)) {
            const auto second = basis.coboundary(t);
            twice.insert(twice.end(), second.begin(), second.end());
        }
        normalize_terms(twice);
        if (!twice.empty()) return m;
    }
    return std::nullopt;
}

ProductAudit audit_products(const GradedBasis& basis, unsigned width,
                            std::size_t pair_budget) {
    const std::size_t total = basis.total_subsets();
    ProductAudit audit;

    // tau stride > 1 only for arrangements too large for the full pair grid.
    std::size_t stride = 1;
    if (total > pair_budget / total) {
        stride = (total * total) / pair_budget;
        if (stride == 0) stride = 1;
        audit.exhaustive = stride == 1;
    }

    // Coboundary lists are reused heavily in the inner loop; precompute them
    // while the table stays small.
    const bool precomputed = total <= (std::size_t{1} << 16);
    std::vector<std::vector<AtomMask>> cob;
    if (precomputed) {
        cob.resize(total);
        for (AtomMask m = 0; m < total; ++m) cob[m] = basis.coboundary(m);
    }

    struct Slot {
        std::size_t pairs = 0;
        std::size_t nonzero = 0;
        bool additivity = true;
        bool disjoint = true;
        std::vector<std::string> leibniz;
        std::size_t leibniz_count = 0;
        std::vector<std::string> grading;
    };
    std::vector<Slot> slots(total);

    parallel_for(total, width, [&](std::size_t si) {
        const auto sigma = static_cast<AtomMask>(si);
        Slot& slot = slots[si];
        const std::vector<AtomMask> cob_sigma = basis.coboundary(sigma);
        std::vector<AtomMask> cob_tau_local, lhs, rhs;
        for (AtomMask tau = sigma % stride; tau < total; tau += stride) {
            ++slot.pairs;
            const std::vector<AtomMask>* cob_tau;
            if (precomputed) {
                cob_tau = &cob[tau];
            } else {
                cob_tau_local = basis.coboundary(tau);
                cob_tau = &cob_tau_local;
            }

            const auto prod = basis.product(sigma, tau);
            if (prod) {
                ++slot.nonzero;
                if (sigma & tau) slot.disjoint = false;
                if (basis.degree_of(*prod) !=
                    basis.degree_of(sigma) + basis.degree_of(tau)) {
                    slot.additivity = false;
                    if (slot.grading.size() < 8) {
                        slot.grading.push_back(
                            "deg(" + std::to_string(sigma) + " * " +
                            std::to_string(tau) + ") != deg sum");
                    }
                }
            }

            lhs.clear();
            if (prod) lhs = basis.coboundary(*prod);
            rhs.clear();
            for (AtomMask t : cob_sigma) {
                if (const auto p = basis.product(t, tau)) rhs.push_back(*p);
            }
            for (AtomMask t : *cob_tau) {
                if (const auto p = basis.product(sigma, t)) rhs.push_back(*p);
            }
            normalize_terms(rhs);
            if (lhs != rhs) {
                ++slot.leibniz_count;
                if (slot.leibniz.size() < 8) {
                    slot.leibniz.push_back(
                        "sigma=" + std::to_string(sigma) +
                        " tau=" + std::to_string(tau));
                }
            }
        }
    });

    for (const Slot& slot : slots) {
        audit.pairs_checked += slot.pairs;
        audit.nonzero_products += slot.nonzero;
        audit.degree_additivity_ok &= slot.additivity;
        audit.disjointness_ok &= slot.disjoint;
        audit.leibniz_violation_count += slot.leibniz_count;
        for (const auto& w : slot.leibniz) {
            if (audit.leibniz_violations.size() < 20) {
                audit.leibniz_violations.push_back(w);
            }
        }
        for (const auto& w : slot.grading) {
            if (audit.grading_violations.size() < 20) {
                audit.grading_violations.push_back(w);
            }
        }
    }
    return audit;
}

} // namespace subarr
