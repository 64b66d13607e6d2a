#include "subarr/ring.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>

using namespace subarr;

namespace {

struct Built {
    Arrangement arr;
    IntersectionPoset poset;
    GradedBasis basis;
    HomologySummary hom;
    CohomologyRing ring;

    explicit Built(Arrangement a)
        : arr(std::move(a)),
          poset(build_poset(arr)),
          basis(poset, 1 << 20),
          hom(homology(basis, 2)),
          ring(compute_ring(basis, hom)) {}
};

const Built& worked() {
    static const Built b(subarr::test::example_h_arrangement());
    return b;
}

} // namespace

TEST_CASE("worked example ring has one unit and nine degree-1 classes") {
    const CohomologyRing& ring = worked().ring;
    REQUIRE(ring.classes.size() == 10);
    CHECK(ring.classes_by_degree.at(0).size() == 1);
    CHECK(ring.classes_by_degree.at(1).size() == 9);
    CHECK(ring.classes[ring.unit_class].degree == 0);
    CHECK(ring.classes[ring.unit_class].representative ==
          std::vector<AtomMask>{0});
}

TEST_CASE("all positive-degree products vanish in the worked example") {
    const CohomologyRing& ring = worked().ring;
    for (const auto& [pair, coords] : ring.products) {
        const RingClass& a = ring.classes[pair.first];
        const RingClass& b = ring.classes[pair.second];
        if (a.degree > 0 && b.degree > 0) CHECK(coords.empty());
    }
}

TEST_CASE("the unit row is the identity") {
    const CohomologyRing& ring = worked().ring;
    for (std::size_t x = 0; x < ring.classes.size(); ++x) {
        CHECK(ring.product(ring.unit_class, x) == std::vector<std::size_t>{x});
        CHECK(ring.product(x, ring.unit_class) == std::vector<std::size_t>{x});
    }
}

TEST_CASE("nonzero cochain products can still be zero classes") {
    const Built& built = worked();
    // {H1} * {H3} = {H1,H3} at the cochain level, which is the coboundary
    // of the triple {H1,H2,H3}; its class must vanish.
    const auto prod = built.basis.product(AtomMask{0b0001}, AtomMask{0b0100});
    REQUIRE(prod.has_value());

    const auto h1 = std::find_if(
        built.ring.classes.begin(), built.ring.classes.end(),
        [](const RingClass& c) {
            return c.representative == std::vector<AtomMask>{0b0001};
        });
    const auto h3 = std::find_if(
        built.ring.classes.begin(), built.ring.classes.end(),
        [](const RingClass& c) {
            return c.representative == std::vector<AtomMask>{0b0100};
        });
    REQUIRE(h1 != built.ring.classes.end());
    REQUIRE(h3 != built.ring.classes.end());
    CHECK(built.ring.product(h1->index, h3->index).empty());
}

TEST_CASE("structure constants are symmetric") {
    for (const Arrangement& arr :
         {subarr::test::example_h_arrangement(), diagonal_arrangement(1, 3),
          orbit_config_arrangement(1, 3)}) {
        const Built built(arr);
        for (const auto& [pair, coords] : built.ring.products) {
            CHECK(built.ring.product(pair.second, pair.first) == coords);
        }
    }
}

TEST_CASE("products beyond the top nonzero degree vanish") {
    const Built& built = worked();
    int top_degree = 0;
    for (const auto& cls : built.ring.classes) {
        top_degree = std::max(top_degree, cls.degree);
    }
    for (const auto& [pair, coords] : built.ring.products) {
        const int sum = built.ring.classes[pair.first].degree +
                        built.ring.classes[pair.second].degree;
        if (sum > top_degree) CHECK(coords.empty());
    }
}

TEST_CASE("the braid arrangement ring multiplies its six components") {
    // Six chambers in degree 0: H^0 of a six-point space. The ring is
    // determined by the unit decomposition, so the product table of the
    // degree-0 classes must be symmetric, associative and idempotent-rich;
    // here we at least pin symmetry and the unit law exactly.
    const Built built(diagonal_arrangement(1, 3));
    REQUIRE(built.ring.classes.size() == 6);
    for (std::size_t x = 0; x < 6; ++x) {
        CHECK(built.ring.product(built.ring.unit_class, x) ==
              std::vector<std::size_t>{x});
    }
}

TEST_CASE("representative independence audits come back clean") {
    SUBCASE("worked example, 100 perturbations per class") {
        const IndependenceAudit audit = audit_representative_independence(
            worked().ring, worked().basis, worked().hom, 100, 0x5eed, 2);
        CHECK(audit.perturbations_per_class == 100);
        CHECK(audit.classes_audited == 10);
        CHECK(audit.discrepancies.empty());
        CHECK(audit.products_checked == 100 * 10 * 10);
    }
    SUBCASE("empty arrangement") {
        Arrangement empty;
        empty.ambient_dim = 2;
        const Built built(empty);
        const IndependenceAudit audit = audit_representative_independence(
            built.ring, built.basis, built.hom, 50, 1, 1);
        CHECK(audit.discrepancies.empty());
    }
    SUBCASE("braid arrangement") {
        const Built built(diagonal_arrangement(1, 3));
        const IndependenceAudit audit = audit_representative_independence(
            built.ring, built.basis, built.hom, 100, 7, 2);
        CHECK(audit.discrepancies.empty());
    }
}

TEST_CASE("audit results do not depend on the parallel width") {
    const Built built(orbit_config_arrangement(1, 3));
    const IndependenceAudit one = audit_representative_independence(
        built.ring, built.basis, built.hom, 20, 3, 1);
    const IndependenceAudit eight = audit_representative_independence(
        built.ring, built.basis, built.hom, 20, 3, 8);
    CHECK(one.discrepancies == eight.discrepancies);
    CHECK(one.products_checked == eight.products_checked);
}
