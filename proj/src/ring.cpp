#include "subarr/ring.hpp"

#include "subarr/error.hpp"
#include "subarr/util.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace subarr {

namespace {

// Reduction context for one degree: a solver over the degree's flat
// coordinate space seeded with every coboundary-basis vector (in block
// order) and then every class representative. Class coordinates of a
// cocycle are the tail coefficients of its expression.
struct DegreeReducer {
    std::size_t width = 0;
    std::size_t coboundary_generators = 0;
    std::vector<std::size_t> tail_class; // generator idx - cob count -> class
    Gf2Solver solver{1};
};

BitVec to_flat(const GradedBasis& basis, const std::vector<AtomMask>& terms,
               std::size_t width) {
    BitVec v = make_bitvec(width == 0 ? 1 : width);
    for (AtomMask m : terms) bit_set(v, basis.flat_index(m));
    return v;
}

std::string term_list(const std::vector<AtomMask>& terms) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out << ',';
        out << terms[i];
    }
    out << '}';
    return out.str();
}

struct RingBuilder {
    RingBuilder(const GradedBasis& basis, const HomologySummary& hom)
        : basis_(basis), hom_(hom) {}

    CohomologyRing build();

    const DegreeReducer& reducer(int degree);

    // Class coordinates (ascending indices) of a cocycle cochain; nullopt
    // when the cochain is not in the span of coboundaries and
    // representatives.
    std::optional<std::vector<std::size_t>> reduce(const Cochain& c,
                                                   DegreeReducer const& red) const;

    const GradedBasis& basis_;
    const HomologySummary& hom_;
    std::map<int, DegreeReducer> reducers_;
    CohomologyRing ring_;
};

const DegreeReducer& RingBuilder::reducer(int degree) {
    const auto found = reducers_.find(degree);
    if (found != reducers_.end()) return found->second;

    DegreeReducer red;
    const DegreeSlice* slice = basis_.degree_slice(degree);
    red.width = slice ? slice->total : 0;
    red.solver = Gf2Solver(red.width == 0 ? 1 : red.width);

    if (slice) {
        for (std::size_t b : slice->block_indices) {
            const BlockHomology& block = hom_.blocks[b];
            for (const auto& cob : block.coboundary_basis) {
                if (!red.solver.add(to_flat(basis_, cob, red.width))) {
                    consistency_error("dependent coboundary basis vector");
                }
                ++red.coboundary_generators;
            }
        }
    }
    const auto degree_classes = ring_.classes_by_degree.find(degree);
    if (degree_classes != ring_.classes_by_degree.end()) {
        for (std::size_t cls : degree_classes->second) {
            if (!red.solver.add(to_flat(
                    basis_, ring_.classes[cls].representative, red.width))) {
                consistency_error("class representative lies in the "
                                  "coboundary space");
            }
            red.tail_class.push_back(cls);
        }
    }
    return reducers_.emplace(degree, std::move(red)).first->second;
}

std::optional<std::vector<std::size_t>> RingBuilder::reduce(
    const Cochain& c, const DegreeReducer& red) const {
    if (c.terms.empty()) return std::vector<std::size_t>{};
    if (red.width == 0) return std::nullopt;
    const auto coords = red.solver.express(to_flat(basis_, c.terms, red.width));
    if (!coords) return std::nullopt;
    std::vector<std::size_t> classes;
    for (std::size_t t = 0; t < red.tail_class.size(); ++t) {
        if (bit_get(*coords, red.coboundary_generators + t)) {
            classes.push_back(red.tail_class[t]);
        }
    }
    return classes;
}

CohomologyRing RingBuilder::build() {
    // Classes ordered by (degree, node, representative position); blocks
    // within one degree slice already come in node order.
    std::vector<int> degrees;
    for (const BlockHomology& block : hom_.blocks) {
        if (block.betti > 0) degrees.push_back(block.degree);
    }
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    for (int degree : degrees) {
        const DegreeSlice* slice = basis_.degree_slice(degree);
        auto& index_list = ring_.classes_by_degree[degree];
        for (std::size_t b : slice->block_indices) {
            const BlockHomology& block = hom_.blocks[b];
            for (const auto& rep : block.representatives) {
                RingClass cls;
                cls.index = ring_.classes.size();
                cls.degree = degree;
                cls.node = block.node;
                cls.representative = rep;
                cls.label = "h" + std::to_string(degree) + "." +
                            std::to_string(index_list.size());
                index_list.push_back(cls.index);
                ring_.classes.push_back(std::move(cls));
                if (degree == 0 && rep.size() == 1 && rep[0] == 0) {
                    ring_.unit_class = ring_.classes.back().index;
                }
            }
        }
    }

    for (std::size_t a = 0; a < ring_.classes.size(); ++a) {
        for (std::size_t b = a; b < ring_.classes.size(); ++b) {
            const RingClass& ca = ring_.classes[a];
            const RingClass& cb = ring_.classes[b];
            Cochain pa{ca.degree, ca.representative};
            Cochain pb{cb.degree, cb.representative};
            const Cochain prod = basis_.product(pa, pb);
            if (!basis_.coboundary(prod).is_zero()) {
                consistency_error("product of cocycles " + ca.label + " * " +
                                  cb.label + " = " + term_list(prod.terms) +
                                  " is not a cocycle");
            }
            const auto coords = reduce(prod, reducer(prod.degree));
            if (!coords) {
                consistency_error("product " + ca.label + " * " + cb.label +
                                  " = " + term_list(prod.terms) +
                                  " does not reduce to class coordinates");
            }
            ring_.products[{a, b}] = *coords;
            if (a != b) ring_.products[{b, a}] = *coords;
        }
    }
    return std::move(ring_);
}

} // namespace

CohomologyRing compute_ring(const GradedBasis& basis,
                            const HomologySummary& hom) {
    return RingBuilder(basis, hom).build();
}

IndependenceAudit audit_representative_independence(
    const CohomologyRing& ring, const GradedBasis& basis,
    const HomologySummary& hom, std::size_t perturbations_per_class,
    std::uint64_t seed, unsigned width) {
    IndependenceAudit audit;
    audit.perturbations_per_class = perturbations_per_class;
    audit.classes_audited = ring.classes.size();

    // Shared reducers, rebuilt from the stored ring (read-only afterwards).
    RingBuilder shadow(basis, hom);
    shadow.ring_ = ring;
    std::map<int, const DegreeReducer*> reducers;
    {
        std::vector<int> degrees;
        for (const auto& cls : ring.classes) degrees.push_back(cls.degree);
        for (const auto& a : ring.classes) {
            for (const auto& b : ring.classes) {
                degrees.push_back(a.degree + b.degree);
            }
        }
        std::sort(degrees.begin(), degrees.end());
        degrees.erase(std::unique(degrees.begin(), degrees.end()),
                      degrees.end());
        for (int d : degrees) reducers[d] = &shadow.reducer(d);
    }

    // Coboundary-basis mask lists per degree, in block order.
    std::map<int, std::vector<const std::vector<AtomMask>*>> cobs_by_degree;
    for (const BlockHomology& block : hom.blocks) {
        for (const auto& cob : block.coboundary_basis) {
            cobs_by_degree[block.degree].push_back(&cob);
        }
    }

    std::vector<std::vector<std::string>> found(ring.classes.size());
    std::vector<std::size_t> checked(ring.classes.size(), 0);

    parallel_for(ring.classes.size(), width, [&](std::size_t a) {
        const RingClass& ca = ring.classes[a];
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (a + 1)));
        const auto cobs_it = cobs_by_degree.find(ca.degree);

        for (std::size_t s = 0; s < perturbations_per_class; ++s) {
            std::vector<AtomMask> perturbed = ca.representative;
            if (cobs_it != cobs_by_degree.end()) {
                for (const auto* cob : cobs_it->second) {
                    if (rng() & 1) {
                        perturbed.insert(perturbed.end(), cob->begin(),
                                         cob->end());
                    }
                }
            }
            normalize_terms(perturbed);
            const Cochain za{ca.degree, perturbed};

            for (std::size_t b = 0; b < ring.classes.size(); ++b) {
                const RingClass& cb = ring.classes[b];
                const Cochain prod =
                    basis.product(za, Cochain{cb.degree, cb.representative});
                const auto coords =
                    shadow.reduce(prod, *reducers.at(ca.degree + cb.degree));
                ++checked[a];
                const auto& expected = ring.product(a, b);
                if (!coords || *coords != expected) {
                    std::ostringstream msg;
                    msg << ca.label << " * " << cb.label
                        << " changed under coboundary perturbation #" << s
                        << " of " << ca.label << ": representative "
                        << term_list(perturbed);
                    found[a].push_back(msg.str());
                }
            }
        }
    });

    for (std::size_t a = 0; a < ring.classes.size(); ++a) {
        audit.products_checked += checked[a];
        audit.discrepancies.insert(audit.discrepancies.end(),
                                   found[a].begin(), found[a].end());
    }
    return audit;
}

} // namespace subarr
