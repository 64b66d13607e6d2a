#include "subarr/report.hpp"

#include "subarr/error.hpp"
#include "test_util.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace subarr;
using nlohmann::json;

TEST_CASE("digest is stable across save/load and distinguishes inputs") {
    const Arrangement a = orbit_config_arrangement(2, 2);
    const Arrangement b = load_arrangement(save_arrangement(a));
    CHECK(arrangement_digest(a) == arrangement_digest(b));
    CHECK(arrangement_digest(a) !=
          arrangement_digest(orbit_config_arrangement(1, 2)));
}

TEST_CASE("generation caps name the binding constraint") {
    PipelineOptions roomy;
    roomy.max_block_dim = std::size_t{1} << 25;
    enforce_generation_caps(24, roomy); // fits both caps

    // 24 atoms clear max_atoms, but 2^24 subsets overrun the default
    // max_block_dim; the message must name the actual bottleneck.
    try {
        enforce_generation_caps(24, PipelineOptions{});
        FAIL("expected a cap error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Cap);
        CHECK(std::string(e.what()).find("max_block_dim") != std::string::npos);
    }
    try {
        enforce_generation_caps(30, PipelineOptions{});
        FAIL("expected a cap error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Cap);
        CHECK(std::string(e.what()).find("max_atoms") != std::string::npos);
    }
}

TEST_CASE("poset report carries nodes, covers and the top") {
    const json doc =
        json::parse(poset_report(orbit_config_arrangement(2, 2), {}));
    CHECK(doc["command"] == "poset");
    CHECK(doc["node_count"] == 10);
    CHECK(doc["nodes"].size() == 10);
    CHECK(doc["cover_relations"].size() == 16);
    CHECK(doc["top"].is_number());
    CHECK(doc["nodes"][0]["dim"] == 4);
    CHECK(doc["nodes"][0]["atoms_above"].empty());
}

TEST_CASE("betti report matches the worked example") {
    const json doc =
        json::parse(betti_report(orbit_config_arrangement(2, 2), {}));
    CHECK(doc["betti_dga"] == json::array({1, 9, 0, 0, 0}));
    CHECK(doc["euler"] == -8);
    CHECK(doc["total_subsets"] == 16);
}

TEST_CASE("betti report on the empty arrangement") {
    Arrangement empty;
    empty.ambient_dim = 2;
    const json doc = json::parse(betti_report(empty, {}));
    CHECK(doc["betti_dga"] == json::array({1, 0, 0}));
}

TEST_CASE("verify report passes on the worked example") {
    const VerifyResult result =
        verify_report(orbit_config_arrangement(2, 2), {});
    CHECK(result.ok);
    const json doc = json::parse(result.json);
    CHECK(doc["status"] == "ok");
    CHECK(doc["betti_dga"] == doc["betti_oracle"]);
    CHECK(doc["betti_match"] == true);
    CHECK(doc["euler"]["match"] == true);
    CHECK(doc["chambers"].is_null());
    CHECK(doc["products"]["positive_degree_products_all_zero"] == true);
    CHECK(doc["audits"]["leibniz"]["violation_count"] == 0);
    CHECK(doc["audits"]["representative_independence"]["discrepancies"].empty());
    CHECK(doc["digest"] == arrangement_digest(orbit_config_arrangement(2, 2)));
}

TEST_CASE("verify reports chambers for hyperplane arrangements") {
    const VerifyResult result =
        verify_report(orbit_config_arrangement(1, 2), {});
    CHECK(result.ok);
    const json doc = json::parse(result.json);
    CHECK(doc["chambers"]["mobius_sum"] == 4);
    CHECK(doc["chambers"]["sampled_distinct"] == 4);
    CHECK(doc["chambers"]["matches_b0"] == true);
    CHECK(doc["betti_dga"] == json::array({4, 0, 0}));
}

TEST_CASE("a removed point splits the line into two chambers") {
    const Arrangement arr = load_arrangement(R"({
      "ambient_dim": 1,
      "atoms": [{"name": "origin", "span": []}]
    })");
    const VerifyResult result = verify_report(arr, {});
    CHECK(result.ok);
    const json doc = json::parse(result.json);
    CHECK(doc["betti_dga"] == json::array({2, 0}));
    CHECK(doc["betti_oracle"] == json::array({2, 0}));
    CHECK(doc["chambers"]["mobius_sum"] == 2);
    CHECK(doc["chambers"]["sampled_distinct"] == 2);
}

TEST_CASE("reports are byte-identical across parallel widths") {
    const Arrangement arr = orbit_config_arrangement(2, 2);
    PipelineOptions narrow;
    narrow.threads = 1;
    PipelineOptions wide;
    wide.threads = 8;
    CHECK(verify_report(arr, narrow).json == verify_report(arr, wide).json);
    CHECK(betti_report(arr, narrow) == betti_report(arr, wide));
    CHECK(oracle_report(arr, narrow) == oracle_report(arr, wide));
}

TEST_CASE("atom cap applies to pipeline commands") {
    PipelineOptions opts;
    opts.max_atoms = 3;
    CHECK_THROWS_AS(betti_report(orbit_config_arrangement(2, 2), opts), Error);
}

TEST_CASE("text rendering mentions the essentials") {
    const VerifyResult result =
        verify_report(orbit_config_arrangement(2, 2), {});
    const std::string text = render_text(result.json);
    CHECK(text.find("betti (cochain algebra): 1 9 0 0 0") != std::string::npos);
    CHECK(text.find("status: ok") != std::string::npos);
    CHECK(text.find("all positive-degree products vanish") != std::string::npos);
}
