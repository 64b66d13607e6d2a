#include "subarr/poset.hpp"

#include "subarr/error.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

using namespace subarr;

namespace {

const Arrangement& worked_example() {
    static const Arrangement arr = subarr::test::example_h_arrangement();
    return arr;
}

std::map<std::size_t, int> dim_histogram(const IntersectionPoset& p) {
    std::map<std::size_t, int> hist;
    for (const PosetNode& node : p.nodes()) ++hist[node.dim];
    return hist;
}

} // namespace

TEST_CASE("worked example poset has the 10 expected nodes") {
    const IntersectionPoset p = build_poset(worked_example());
    CHECK(p.node_count() == 10);
    const auto hist = dim_histogram(p);
    CHECK(hist == std::map<std::size_t, int>{{4, 1}, {2, 4}, {1, 4}, {0, 1}});
    REQUIRE(p.top() >= 0);
    CHECK(p.dim(p.top()) == 0);
}

TEST_CASE("empty arrangement gives the one-node poset") {
    Arrangement arr;
    arr.ambient_dim = 3;
    const IntersectionPoset p = build_poset(arr);
    CHECK(p.node_count() == 1);
    CHECK(p.top() == -1);
    CHECK(p.dim(IntersectionPoset::kBottom) == 3);
}

TEST_CASE("single diagonal atom gives a two-node poset") {
    const IntersectionPoset p = build_poset(diagonal_arrangement(2, 2));
    CHECK(p.node_count() == 2);
    CHECK(p.top() == 1);
}

TEST_CASE("joins against the bottom and self") {
    const IntersectionPoset p = build_poset(worked_example());
    for (const PosetNode& node : p.nodes()) {
        CHECK(p.join(IntersectionPoset::kBottom, node.id) == node.id);
        CHECK(p.join(node.id, node.id) == node.id);
    }
}

TEST_CASE("H1 join H3 is the origin") {
    const IntersectionPoset p = build_poset(worked_example());
    const std::int32_t joined = p.join(p.atom_node(0), p.atom_node(2));
    CHECK(p.dim(joined) == 0);
    CHECK(joined == p.top());
}

TEST_CASE("sum_is_ambient matches the worked dimensions") {
    const IntersectionPoset p = build_poset(worked_example());
    CHECK(p.sum_is_ambient(p.atom_node(0), p.atom_node(2)));       // H1+H3
    CHECK_FALSE(p.sum_is_ambient(p.atom_node(0), p.atom_node(1))); // H1+H2
    for (const PosetNode& node : p.nodes()) {
        CHECK(p.sum_is_ambient(IntersectionPoset::kBottom, node.id));
    }
}

TEST_CASE("mobius values for two lines through the origin in the plane") {
    const IntersectionPoset p = build_poset(orbit_config_arrangement(1, 2));
    const auto mu = p.mobius_from_bottom();
    REQUIRE(mu.size() == 4);
    CHECK(mu[IntersectionPoset::kBottom] == 1);
    CHECK(mu[p.atom_node(0)] == -1);
    CHECK(mu[p.atom_node(1)] == -1);
    CHECK(mu[p.top()] == 1);
}

TEST_CASE("mobius value of the worked example origin is -1") {
    const IntersectionPoset p = build_poset(worked_example());
    const auto mu = p.mobius_from_bottom();
    CHECK(mu[IntersectionPoset::kBottom] == 1);
    CHECK(mu[p.top()] == -1);
}

TEST_CASE("mobius values sum to zero on posets with a top") {
    for (const Arrangement& arr :
         {orbit_config_arrangement(1, 2), orbit_config_arrangement(2, 2),
          orbit_config_arrangement(1, 3), diagonal_arrangement(1, 3)}) {
        const IntersectionPoset p = build_poset(arr);
        REQUIRE(p.node_count() >= 2);
        const auto mu = p.mobius_from_bottom();
        CHECK(std::accumulate(mu.begin(), mu.end(), std::int64_t{0}) == 0);
    }
}

TEST_CASE("interval below an atom is the void complex") {
    const IntersectionPoset p = build_poset(worked_example());
    const SimplicialComplex c = p.open_interval_complex(p.atom_node(0));
    CHECK(c.is_void);
    CHECK(c.vertex_count() == 0);
}

TEST_CASE("interval below the origin is an eight-cycle") {
    const IntersectionPoset p = build_poset(worked_example());
    const SimplicialComplex c = p.open_interval_complex(p.top());
    REQUIRE(c.vertex_count() == 8);
    REQUIRE(c.max_dim() == 1);
    const auto& edges = c.simplices_by_dim[1];
    CHECK(edges.size() == 8);

    std::vector<int> degree(8, 0);
    std::vector<int> parent(8);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : edges) {
        ++degree[e[0]];
        ++degree[e[1]];
        parent[find(e[0])] = find(e[1]);
    }
    for (int v = 0; v < 8; ++v) {
        CHECK(degree[v] == 2);
        CHECK(find(v) == find(0));
    }
}

TEST_CASE("interval below a line is two isolated atoms") {
    const IntersectionPoset p = build_poset(worked_example());
    const std::int32_t line12 = p.join(p.atom_node(0), p.atom_node(1));
    REQUIRE(p.dim(line12) == 1);
    const SimplicialComplex c = p.open_interval_complex(line12);
    CHECK(c.vertex_count() == 2);
    CHECK(c.max_dim() == 0);
    const std::set<std::int32_t> labels(c.vertex_labels.begin(),
                                        c.vertex_labels.end());
    CHECK(labels == std::set<std::int32_t>{p.atom_node(0), p.atom_node(1)});
}

TEST_CASE("interval below the bottom is rejected") {
    const IntersectionPoset p = build_poset(worked_example());
    CHECK_THROWS_AS(p.open_interval_complex(IntersectionPoset::kBottom), Error);
}

TEST_CASE("joins realize subspace intersections") {
    for (const Arrangement& arr :
         {worked_example(), orbit_config_arrangement(1, 3),
          diagonal_arrangement(1, 3)}) {
        const IntersectionPoset p = build_poset(arr);
        for (const PosetNode& u : p.nodes()) {
            for (const PosetNode& v : p.nodes()) {
                const std::int32_t j = p.join(u.id, v.id);
                CHECK(p.nodes()[j].subspace ==
                      intersect(u.subspace, v.subspace));
                CHECK((p.nodes()[j].atoms_above &
                       (u.atoms_above | v.atoms_above)) ==
                      (u.atoms_above | v.atoms_above));
            }
        }
    }
}

TEST_CASE("rebuilding from the node subspaces reproduces the node set") {
    for (const Arrangement& arr :
         {worked_example(), orbit_config_arrangement(1, 3)}) {
        const IntersectionPoset p = build_poset(arr);
        std::vector<SubspaceBasis> generators;
        for (const PosetNode& node : p.nodes()) generators.push_back(node.subspace);
        const IntersectionPoset again =
            poset_closure(arr.ambient_dim, generators);
        std::set<std::string> before, after;
        for (const PosetNode& node : p.nodes()) before.insert(node.subspace.key());
        for (const PosetNode& node : again.nodes()) after.insert(node.subspace.key());
        CHECK(before == after);
    }
}

TEST_CASE("cover relations of the worked example") {
    const IntersectionPoset p = build_poset(worked_example());
    const auto covers = p.cover_relations();
    // 4 bottom->atom covers, 8 atom->line covers (every atom sits over two
    // lines), 4 line->origin covers; no atom covers the origin directly.
    std::map<std::pair<std::size_t, std::size_t>, int> by_dims;
    for (const auto& [u, v] : covers) {
        ++by_dims[{p.dim(u), p.dim(v)}];
    }
    CHECK(by_dims[{4, 2}] == 4);
    CHECK(by_dims[{2, 1}] == 8);
    CHECK(by_dims[{1, 0}] == 4);
    CHECK(by_dims[{2, 0}] == 0);
}

TEST_CASE("node cap triggers a cap error") {
    CHECK_THROWS_AS(build_poset(worked_example(), PosetCaps{5}), Error);
    try {
        build_poset(worked_example(), PosetCaps{5});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Cap);
    }
}
