#ifndef SUBARR_ORACLE_HPP
#define SUBARR_ORACLE_HPP

#include "subarr/arrangement.hpp"
#include "subarr/homology.hpp"
#include "subarr/poset.hpp"
#include "subarr/simplicial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace subarr {

// Reduced simplicial Z_2 Betti numbers. The complex on the empty vertex set
// carries H~_{-1} = Z_2; any nonempty complex has H~_{-1} = 0. Only nonzero
// entries appear in the map.
std::map<int, std::size_t> reduced_betti_z2(const SimplicialComplex& c);

// Betti numbers of the arrangement complement, computed entirely from the
// order complexes of open intervals of the intersection poset: the bottom
// node contributes one unit to b^0, and every higher node u contributes
// dim H~_{d(W)-d(u)-k-2} of its interval to b^k. Indices 0..ambient_dim.
std::vector<std::size_t> gm_betti(const IntersectionPoset& p, unsigned width = 1);

// Chamber count of a real hyperplane arrangement: sum of |mu(W,u)| over the
// poset. Errors unless every atom has codimension 1.
std::size_t zaslavsky_chambers(const IntersectionPoset& p);

struct ChamberSample {
    std::size_t distinct = 0;   // distinct full sign vectors seen
    std::size_t points_used = 0;
    bool stable = false;        // sampling plateaued before the point cap
};

// Monte-Carlo cross-check of the chamber count: evaluates every atom's
// defining functional at random integer points and counts distinct sign
// vectors, sampling until the count plateaus. Exact arithmetic, fixed seed.
ChamberSample sample_chambers(const Arrangement& a,
                              std::uint64_t seed = 0xC0FFEE, std::size_t batch = 1024);

struct BettiComparison {
    std::vector<std::size_t> dga;    // degrees 0..ambient
    std::vector<std::size_t> oracle; // degrees 0..ambient
    std::vector<int> mismatched_degrees;
    // Nonzero DGA Betti outside [0, ambient]; any entry is a mismatch.
    std::vector<std::pair<int, std::size_t>> dga_out_of_range;
    long long euler_dga = 0;
    long long euler_oracle = 0;

    bool betti_equal() const {
        return mismatched_degrees.empty() && dga_out_of_range.empty();
    }
    bool euler_equal() const { return euler_dga == euler_oracle; }
};

BettiComparison compare_betti(const HomologySummary& dga,
                              const std::vector<std::size_t>& oracle,
                              std::size_t ambient_dim);

} // namespace subarr

#endif
