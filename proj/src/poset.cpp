#include "subarr/poset.hpp"

#include "subarr/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

namespace subarr {

std::int32_t IntersectionPoset::join(std::int32_t u, std::int32_t v) const {
    std::int32_t w = u;
    AtomMask bits = nodes_[v].atoms_above;
    while (bits) {
        const int a = std::countr_zero(bits);
        bits &= bits - 1;
        w = join_with_atom_[w][a];
    }
    return w;
}

bool IntersectionPoset::leq(std::int32_t u, std::int32_t v) const {
    return join(u, v) == v;
}

bool IntersectionPoset::sum_is_ambient(std::int32_t u, std::int32_t v) const {
    return nodes_[u].dim + nodes_[v].dim ==
           ambient_dim_ + nodes_[join(u, v)].dim;
}

std::vector<std::int64_t> IntersectionPoset::mobius_from_bottom() const {
    // mu(W, u) = -sum over v < u of mu(W, v); nodes sorted by descending
    // dimension so every strictly smaller element is ready first.
    std::vector<std::int32_t> order(nodes_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::int32_t a, std::int32_t b) {
                         return nodes_[a].dim > nodes_[b].dim;
                     });

    std::vector<std::int64_t> mu(nodes_.size(), 0);
    for (std::int32_t u : order) {
        if (u == kBottom) {
            mu[u] = 1;
            continue;
        }
        std::int64_t acc = 0;
        for (std::int32_t v = 0; v < static_cast<std::int32_t>(nodes_.size()); ++v) {
            if (v != u && leq(v, u)) acc += mu[v];
        }
        mu[u] = -acc;
    }
    return mu;
}

SimplicialComplex IntersectionPoset::open_interval_complex(std::int32_t u) const {
    if (u == kBottom) {
        input_error("open interval below the ambient space is undefined");
    }
    std::vector<std::int32_t> verts;
    for (std::int32_t v = 0; v < static_cast<std::int32_t>(nodes_.size()); ++v) {
        if (v == kBottom || v == u) continue;
        if (leq(v, u)) verts.push_back(v);
    }
    // Chains descend in subspace dimension, so this order is
    // topological for the strict order on the interval.
    std::stable_sort(verts.begin(), verts.end(),
                     [&](std::int32_t a, std::int32_t b) {
                         if (nodes_[a].dim != nodes_[b].dim) {
                             return nodes_[a].dim > nodes_[b].dim;
                         }
                         return a < b;
                     });

    std::vector<std::vector<bool>> less(verts.size(),
                                        std::vector<bool>(verts.size(), false));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (nodes_[verts[j]].dim < nodes_[verts[i]].dim &&
                leq(verts[i], verts[j])) {
                less[i][j] = true;
            }
        }
    }
    return chain_complex_of_relation(verts, less);
}

std::vector<std::pair<std::int32_t, std::int32_t>>
IntersectionPoset::cover_relations() const {
    const auto n = static_cast<std::int32_t>(nodes_.size());
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::int32_t u = 0; u < n; ++u) {
        for (std::int32_t v = 0; v < n; ++v) {
            if (u != v && leq(u, v)) lt[u][v] = true;
        }
    }
    std::vector<std::pair<std::int32_t, std::int32_t>> covers;
    for (std::int32_t u = 0; u < n; ++u) {
        for (std::int32_t v = 0; v < n; ++v) {
            if (!lt[u][v]) continue;
            bool direct = true;
            for (std::int32_t w = 0; w < n && direct; ++w) {
                if (lt[u][w] && lt[w][v]) direct = false;
            }
            if (direct) covers.emplace_back(u, v);
        }
    }
    return covers;
}

IntersectionPoset poset_closure(std::size_t ambient_dim,
                                const std::vector<SubspaceBasis>& generators,
                                const PosetCaps& caps) {
    if (generators.size() > kMaxAtomBits) {
        input_error("atom masks are 64-bit: at most " +
                    std::to_string(kMaxAtomBits) + " atoms supported, got " +
                    std::to_string(generators.size()));
    }

    IntersectionPoset p;
    p.ambient_dim_ = ambient_dim;
    p.atom_count_ = generators.size();

    std::vector<MatrixQ> generator_eqs;
    generator_eqs.reserve(generators.size());
    for (const SubspaceBasis& g : generators) {
        if (g.ambient_dim() != ambient_dim) {
            input_error("generator ambient dimension mismatch");
        }
        generator_eqs.push_back(g.equations());
    }

    std::unordered_map<std::string, std::int32_t> index;
    std::vector<MatrixQ> node_eqs; // canonical equation rows per node

    const auto add_node = [&](SubspaceBasis&& s, MatrixQ&& eqs) {
        const auto id = static_cast<std::int32_t>(p.nodes_.size());
        if (p.nodes_.size() >= caps.max_nodes) {
            cap_error("intersection poset exceeds max_poset_nodes = " +
                      std::to_string(caps.max_nodes));
        }
        index.emplace(s.key(), id);
        PosetNode node;
        node.id = id;
        node.dim = s.dim();
        node.subspace = std::move(s);
        p.nodes_.push_back(std::move(node));
        node_eqs.push_back(std::move(eqs));
        return id;
    };

    add_node(SubspaceBasis::full_space(ambient_dim), MatrixQ(0, ambient_dim));

    // Worklist closure: every (node, generator) intersection either already
    // exists or strictly drops dimension, so this terminates.
    for (std::int32_t u = 0; u < static_cast<std::int32_t>(p.nodes_.size()); ++u) {
        p.join_with_atom_.emplace_back(generators.size(), -1);
        for (std::size_t a = 0; a < generators.size(); ++a) {
            MatrixQ stacked = rref(stack(node_eqs[u], generator_eqs[a])).matrix;
            SubspaceBasis meet =
                SubspaceBasis::from_equations(ambient_dim, stacked);
            const auto it = index.find(meet.key());
            std::int32_t target;
            if (it != index.end()) {
                target = it->second;
            } else {
                target = add_node(std::move(meet), std::move(stacked));
            }
            p.join_with_atom_[u][a] = target;
        }
    }

    for (PosetNode& node : p.nodes_) {
        AtomMask above = 0;
        for (std::size_t a = 0; a < generators.size(); ++a) {
            if (p.join_with_atom_[node.id][a] == node.id) {
                above |= AtomMask{1} << a;
            }
        }
        node.atoms_above = above;
    }

    if (!generators.empty()) {
        std::int32_t t = 0;
        for (std::size_t a = 0; a < generators.size(); ++a) {
            t = p.join_with_atom_[t][a];
        }
        p.top_ = t;
    }
    return p;
}

IntersectionPoset build_poset(const Arrangement& a, const PosetCaps& caps) {
    std::vector<SubspaceBasis> generators;
    generators.reserve(a.atoms.size());
    for (const Atom& atom : a.atoms) generators.push_back(atom.subspace);
    return poset_closure(a.ambient_dim, generators, caps);
}

} // namespace subarr
