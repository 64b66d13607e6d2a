#include "subarr/simplicial.hpp"

#include <algorithm>

namespace subarr {

namespace {

void extend_chain(const std::vector<std::vector<bool>>& less,
                  std::vector<std::int32_t>& chain,
                  std::vector<std::vector<std::vector<std::int32_t>>>& out) {
    const std::size_t dim = chain.size() - 1;
    if (out.size() <= dim) out.resize(dim + 1);
    out[dim].push_back(chain);

    const std::int32_t last = chain.back();
    for (std::size_t next = last + 1; next < less.size(); ++next) {
        if (!less[last][next]) continue;
        chain.push_back(static_cast<std::int32_t>(next));
        extend_chain(less, chain, out);
        chain.pop_back();
    }
}

} // namespace

SimplicialComplex chain_complex_of_relation(
    const std::vector<std::int32_t>& vertex_labels,
    const std::vector<std::vector<bool>>& less) {
    SimplicialComplex c;
    c.vertex_labels = vertex_labels;
    c.is_void = vertex_labels.empty();
    for (std::size_t v = 0; v < vertex_labels.size(); ++v) {
        std::vector<std::int32_t> chain{static_cast<std::int32_t>(v)};
        extend_chain(less, chain, c.simplices_by_dim);
    }
    for (auto& level : c.simplices_by_dim) {
        std::sort(level.begin(), level.end());
    }
    return c;
}

} // namespace subarr
