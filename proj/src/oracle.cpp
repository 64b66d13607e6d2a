#include "subarr/oracle.hpp"

#include "subarr/error.hpp"
#include "subarr/gf2.hpp"
#include "subarr/util.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace subarr {

std::map<int, std::size_t> reduced_betti_z2(const SimplicialComplex& c) {
    std::map<int, std::size_t> betti;
    if (c.is_void) {
        betti[-1] = 1;
        return betti;
    }

    // Augmented chain complex: C_{-1} = Z_2 generated by the empty simplex,
    // the boundary of every vertex hitting it.
    const int top = c.max_dim();
    std::vector<std::size_t> dims(top + 2);
    dims[0] = 1; // C_{-1}
    for (int k = 0; k <= top; ++k) dims[k + 1] = c.simplices_by_dim[k].size();

    // ranks[k] = rank of boundary C_k -> C_{k-1}, k = 0..top.
    std::vector<std::size_t> ranks(top + 1, 0);
    for (int k = 0; k <= top; ++k) {
        GF2Matrix boundary(dims[k], dims[k + 1]);
        const auto& simplices = c.simplices_by_dim[k];
        for (std::size_t s = 0; s < simplices.size(); ++s) {
            if (k == 0) {
                boundary.set(0, s);
                continue;
            }
            const auto& simplex = simplices[s];
            const auto& faces = c.simplices_by_dim[k - 1];
            for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
                std::vector<std::int32_t> f;
                f.reserve(simplex.size() - 1);
                for (std::size_t i = 0; i < simplex.size(); ++i) {
                    if (i != drop) f.push_back(simplex[i]);
                }
                const auto it =
                    std::lower_bound(faces.begin(), faces.end(), f);
                boundary.set(static_cast<std::size_t>(it - faces.begin()), s);
            }
        }
        ranks[k] = rank_gf2(boundary);
    }

    // H~_k = dim ker d_k - rank d_{k+1}.
    for (int k = -1; k <= top; ++k) {
        const std::size_t chains = dims[k + 1];
        const std::size_t rank_out = k >= 0 ? ranks[k] : 0;
        const std::size_t rank_in = k + 1 <= top ? ranks[k + 1] : 0;
        const std::size_t b = chains - rank_out - rank_in;
        if (b > 0) betti[k] = b;
    }
    return betti;
}

std::vector<std::size_t> gm_betti(const IntersectionPoset& p, unsigned width) {
    const std::size_t ambient = p.ambient_dim();
    std::vector<std::size_t> out(ambient + 1, 0);
    out[0] = 1; // the bottom node: the whole space contributes one component

    const std::size_t count = p.node_count();
    std::vector<std::map<int, std::size_t>> interval_betti(count);
    parallel_for(count - 1, width, [&](std::size_t i) {
        const auto u = static_cast<std::int32_t>(i + 1);
        interval_betti[u] = reduced_betti_z2(p.open_interval_complex(u));
    });

    for (std::size_t u = 1; u < count; ++u) {
        const int codim =
            static_cast<int>(ambient) - static_cast<int>(p.dim(static_cast<std::int32_t>(u)));
        for (const auto& [j, b] : interval_betti[u]) {
            const int k = codim - j - 2;
            if (k >= 0 && k <= static_cast<int>(ambient)) out[k] += b;
        }
    }
    return out;
}

std::size_t zaslavsky_chambers(const IntersectionPoset& p) {
    for (std::size_t a = 0; a < p.atom_count(); ++a) {
        if (p.dim(p.atom_node(a)) + 1 != p.ambient_dim()) {
            input_error("chamber counting applies to hyperplane arrangements "
                        "only; atom " + std::to_string(a) +
                        " has codimension > 1");
        }
    }
    std::size_t total = 0;
    for (const std::int64_t mu : p.mobius_from_bottom()) {
        total += static_cast<std::size_t>(mu < 0 ? -mu : mu);
    }
    return total;
}

ChamberSample sample_chambers(const Arrangement& a, std::uint64_t seed,
                              std::size_t batch) {
    // Integerized functional per atom (hyperplanes have one equation row).
    std::vector<std::vector<Integer>> functionals;
    for (const Atom& atom : a.atoms) {
        const MatrixQ eq = atom.subspace.equations();
        if (eq.rows() != 1) {
            input_error("sign-vector sampling applies to hyperplane "
                        "arrangements only; atom " + std::to_string(atom.id) +
                        " has codimension " + std::to_string(eq.rows()));
        }
        Integer scale = 1;
        for (std::size_t c = 0; c < eq.cols(); ++c) {
            scale = lcm(scale, denominator(eq.at(0, c)));
        }
        std::vector<Integer> row(eq.cols());
        for (std::size_t c = 0; c < eq.cols(); ++c) {
            row[c] = numerator(eq.at(0, c)) * (scale / denominator(eq.at(0, c)));
        }
        functionals.push_back(std::move(row));
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coord(-1000000, 1000000);

    std::set<std::string> signatures;
    ChamberSample sample;
    std::size_t quiet_batches = 0;
    const std::size_t max_points = 1 << 22;

    while (quiet_batches < 6 && sample.points_used < max_points) {
        const std::size_t before = signatures.size();
        for (std::size_t i = 0; i < batch; ++i) {
            ++sample.points_used;
            std::vector<Integer> point(a.ambient_dim);
            for (auto& x : point) x = coord(rng);

            std::string sig;
            sig.reserve(functionals.size());
            bool on_wall = false;
            for (const auto& f : functionals) {
                Integer dot = 0;
                for (std::size_t c = 0; c < f.size(); ++c) dot += f[c] * point[c];
                if (dot == 0) {
                    on_wall = true;
                    break;
                }
                sig.push_back(dot > 0 ? '+' : '-');
            }
            if (!on_wall) signatures.insert(std::move(sig));
        }
        quiet_batches = signatures.size() == before ? quiet_batches + 1 : 0;
    }
    sample.distinct = signatures.size();
    sample.stable = quiet_batches >= 6;
    return sample;
}

BettiComparison compare_betti(const HomologySummary& dga,
                              const std::vector<std::size_t>& oracle,
                              std::size_t ambient_dim) {
    BettiComparison cmp;
    cmp.dga = dga.betti_vector(ambient_dim);
    cmp.oracle = oracle;
    cmp.oracle.resize(ambient_dim + 1, 0);

    for (std::size_t k = 0; k <= ambient_dim; ++k) {
        if (cmp.dga[k] != cmp.oracle[k]) {
            cmp.mismatched_degrees.push_back(static_cast<int>(k));
        }
    }
    for (const auto& [degree, count] : dga.betti_by_degree) {
        if (degree < 0 || degree > static_cast<int>(ambient_dim)) {
            cmp.dga_out_of_range.emplace_back(degree, count);
        }
        const long long sign = ((degree % 2) + 2) % 2 == 0 ? 1 : -1;
        cmp.euler_dga += sign * static_cast<long long>(count);
    }
    for (std::size_t k = 0; k <= ambient_dim; ++k) {
        cmp.euler_oracle +=
            (k % 2 == 0 ? 1 : -1) * static_cast<long long>(cmp.oracle[k]);
    }
    return cmp;
}

} // namespace subarr
