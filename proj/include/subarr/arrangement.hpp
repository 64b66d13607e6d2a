#ifndef SUBARR_ARRANGEMENT_HPP
#define SUBARR_ARRANGEMENT_HPP

#include "subarr/subspace.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace subarr {

struct Atom {
    std::size_t id = 0;
    std::string name;
    SubspaceBasis subspace;
};

// A finite set of proper linear subspaces of the ambient space, pairwise
// distinct and forming an antichain under inclusion. Generators produce
// atoms in a fixed deterministic order so ids are reproducible.
struct Arrangement {
    std::size_t ambient_dim = 0;
    std::vector<Atom> atoms;
};

// Distinctness, properness and the antichain condition. Throws Error(Input)
// naming the offending atom ids.
void validate_arrangement(const Arrangement& a);

// Atoms x_i = g(x_j) for 1 <= i < j <= n and g a coordinatewise sign vector
// in {+1,-1}^m, in lexicographic (i, j, g) order where g is read as a binary
// number with bit k-1 set iff g_k = -1. Ambient dimension m*n, every atom of
// codimension m, C(n,2) * 2^m atoms in total.
Arrangement orbit_config_arrangement(std::size_t m, std::size_t n);

// Diagonal atoms x_i = x_j (codimension k) in R^(k*n).
Arrangement diagonal_arrangement(std::size_t k, std::size_t n);

// JSON document schema:
//   { "ambient_dim": N,
//     "atoms": [ { "name": "...", "equations": [["1","-1",...],...] }
//              | { "name": "...", "span": [["1","0",...],...] } ] }
// Exactly one of "equations" / "span" per atom; entries are decimal-integer
// or "p/q" strings.
Arrangement load_arrangement(const std::string& json_text);
std::string save_arrangement(const Arrangement& a);

} // namespace subarr

#endif
