#include "subarr/report.hpp"

#include "subarr/dga.hpp"
#include "subarr/error.hpp"
#include "subarr/homology.hpp"
#include "subarr/oracle.hpp"
#include "subarr/poset.hpp"
#include "subarr/ring.hpp"
#include "subarr/util.hpp"

#include <json.hpp>

#include <bit>
#include <sstream>

namespace subarr {

namespace {

using ordered_json = nlohmann::ordered_json;

unsigned effective_width(const PipelineOptions& opts) {
    return opts.threads == 0 ? hardware_width() : opts.threads;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ordered_json header(const char* command, const Arrangement& a) {
    ordered_json doc;
    doc["command"] = command;
    doc["digest"] = arrangement_digest(a);
    doc["ambient_dim"] = a.ambient_dim;
    doc["atom_count"] = a.atoms.size();
    return doc;
}

ordered_json atom_index_list(AtomMask m) {
    ordered_json out = ordered_json::array();
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

ordered_json cochain_json(const std::vector<AtomMask>& terms) {
    ordered_json out = ordered_json::array();
    for (AtomMask m : terms) out.push_back(atom_index_list(m));
    return out;
}

ordered_json betti_map_json(const std::map<int, std::size_t>& betti) {
    ordered_json out = ordered_json::object();
    for (const auto& [degree, count] : betti) {
        out[std::to_string(degree)] = count;
    }
    return out;
}

struct Pipeline {
    IntersectionPoset poset;
    GradedBasis basis;
    HomologySummary hom;

    Pipeline(const Arrangement& a, const PipelineOptions& opts)
        : poset(build_poset(a, PosetCaps{opts.max_poset_nodes})),
          basis(poset, opts.max_block_dim),
          hom(homology(basis, effective_width(opts))) {}
};

ordered_json classes_json(const CohomologyRing& ring) {
    ordered_json out = ordered_json::array();
    for (const RingClass& cls : ring.classes) {
        ordered_json entry;
        entry["label"] = cls.label;
        entry["degree"] = cls.degree;
        entry["representative"] = cochain_json(cls.representative);
        out.push_back(std::move(entry));
    }
    return out;
}

ordered_json products_json(const CohomologyRing& ring, bool* positive_all_zero) {
    ordered_json nonzero = ordered_json::array();
    bool all_zero = true;
    for (const auto& [pair, coords] : ring.products) {
        if (coords.empty() || pair.first > pair.second) continue;
        const RingClass& a = ring.classes[pair.first];
        const RingClass& b = ring.classes[pair.second];
        if (a.degree > 0 && b.degree > 0) all_zero = false;
        ordered_json entry;
        entry["a"] = a.label;
        entry["b"] = b.label;
        ordered_json value = ordered_json::array();
        for (std::size_t c : coords) value.push_back(ring.classes[c].label);
        entry["value"] = std::move(value);
        nonzero.push_back(std::move(entry));
    }
    if (positive_all_zero) *positive_all_zero = all_zero;
    ordered_json out;
    out["nonzero"] = std::move(nonzero);
    out["positive_degree_products_all_zero"] = all_zero;
    return out;
}

bool unit_law_holds(const CohomologyRing& ring) {
    for (std::size_t x = 0; x < ring.classes.size(); ++x) {
        const auto& coords = ring.product(ring.unit_class, x);
        if (coords != std::vector<std::size_t>{x}) return false;
    }
    return true;
}

bool products_symmetric(const CohomologyRing& ring) {
    for (const auto& [pair, coords] : ring.products) {
        if (ring.product(pair.second, pair.first) != coords) return false;
    }
    return true;
}

} // namespace

std::string arrangement_digest(const Arrangement& a) {
    std::ostringstream text;
    text << a.ambient_dim << '#';
    for (const Atom& atom : a.atoms) {
        text << atom.subspace.key() << ';';
    }
    std::ostringstream hex;
    hex << std::hex << fnv1a(text.str());
    return hex.str();
}

void enforce_atom_cap(std::size_t atom_count, const PipelineOptions& opts) {
    if (atom_count > opts.max_atoms) {
        cap_error("arrangement has " + std::to_string(atom_count) +
                  " atoms, exceeding max_atoms = " +
                  std::to_string(opts.max_atoms));
    }
}

void enforce_generation_caps(std::size_t atom_count,
                             const PipelineOptions& opts) {
    if (atom_count > opts.max_atoms) {
        cap_error("generator would produce " + std::to_string(atom_count) +
                  " atoms, exceeding max_atoms = " +
                  std::to_string(opts.max_atoms));
    }
    if (atom_count >= 63 ||
        (std::size_t{1} << atom_count) > opts.max_block_dim) {
        cap_error("generator would produce " + std::to_string(atom_count) +
                  " atoms; enumerating 2^" + std::to_string(atom_count) +
                  " atom subsets exceeds max_block_dim = " +
                  std::to_string(opts.max_block_dim) +
                  " (the bottleneck is subset enumeration, not the atom count)");
    }
}

std::string poset_report(const Arrangement& a, const PipelineOptions& opts) {
    enforce_atom_cap(a.atoms.size(), opts);
    const IntersectionPoset p = build_poset(a, PosetCaps{opts.max_poset_nodes});

    ordered_json doc = header("poset", a);
    doc["node_count"] = p.node_count();
    if (p.top() >= 0) {
        doc["top"] = p.top();
    } else {
        doc["top"] = nullptr;
    }
    ordered_json nodes = ordered_json::array();
    for (const PosetNode& node : p.nodes()) {
        ordered_json entry;
        entry["id"] = node.id;
        entry["dim"] = node.dim;
        entry["atoms_above"] = atom_index_list(node.atoms_above);
        nodes.push_back(std::move(entry));
    }
    doc["nodes"] = std::move(nodes);
    ordered_json covers = ordered_json::array();
    for (const auto& [u, v] : p.cover_relations()) {
        covers.push_back(ordered_json::array({u, v}));
    }
    doc["cover_relations"] = std::move(covers);
    return doc.dump(2);
}

std::string betti_report(const Arrangement& a, const PipelineOptions& opts) {
    enforce_atom_cap(a.atoms.size(), opts);
    const Pipeline pipe(a, opts);

    ordered_json doc = header("betti", a);
    doc["betti_dga"] = pipe.hom.betti_vector(a.ambient_dim);
    doc["betti_by_degree"] = betti_map_json(pipe.hom.betti_by_degree);
    long long euler = 0;
    for (const auto& [degree, count] : pipe.hom.betti_by_degree) {
        euler += (((degree % 2) + 2) % 2 == 0 ? 1 : -1) *
                 static_cast<long long>(count);
    }
    doc["euler"] = euler;
    doc["total_subsets"] = pipe.basis.total_subsets();
    doc["block_count"] = pipe.basis.blocks().size();
    return doc.dump(2);
}

std::string ring_report(const Arrangement& a, const PipelineOptions& opts) {
    enforce_atom_cap(a.atoms.size(), opts);
    const Pipeline pipe(a, opts);
    const CohomologyRing ring = compute_ring(pipe.basis, pipe.hom);

    ordered_json doc = header("ring", a);
    doc["betti_dga"] = pipe.hom.betti_vector(a.ambient_dim);
    doc["unit"] = ring.classes.empty() ? "" : ring.classes[ring.unit_class].label;
    doc["classes"] = classes_json(ring);
    doc["products"] = products_json(ring, nullptr);
    return doc.dump(2);
}

namespace {

ordered_json chambers_json(const Arrangement& a, const IntersectionPoset& p,
                           const std::vector<std::size_t>& oracle_betti,
                           bool* consistent) {
    // Applies exactly when every atom is a hyperplane (vacuously true for
    // the empty arrangement, whose complement is the single chamber R^d).
    bool hyperplanes = true;
    for (const Atom& atom : a.atoms) {
        if (atom.subspace.dim() + 1 != a.ambient_dim) hyperplanes = false;
    }
    if (!hyperplanes) {
        return ordered_json(nullptr);
    }
    const std::size_t mobius_count = zaslavsky_chambers(p);
    const ChamberSample sampled = sample_chambers(a);
    // A hyperplane complement is a disjoint union of open convex chambers,
    // so cohomology is concentrated in degree zero.
    bool higher_zero = true;
    for (std::size_t k = 1; k < oracle_betti.size(); ++k) {
        if (oracle_betti[k] != 0) higher_zero = false;
    }
    ordered_json out;
    out["mobius_sum"] = mobius_count;
    out["matches_b0"] = mobius_count == oracle_betti[0];
    out["higher_betti_zero"] = higher_zero;
    out["sampled_distinct"] = sampled.distinct;
    out["sampled_points"] = sampled.points_used;
    out["sampling_stable"] = sampled.stable;
    out["sampled_matches"] = sampled.distinct == mobius_count;
    if (consistent) {
        *consistent = mobius_count == oracle_betti[0] && higher_zero &&
                      sampled.distinct == mobius_count && sampled.stable;
    }
    return out;
}

} // namespace

std::string oracle_report(const Arrangement& a, const PipelineOptions& opts) {
    enforce_atom_cap(a.atoms.size(), opts);
    const IntersectionPoset p = build_poset(a, PosetCaps{opts.max_poset_nodes});
    const std::vector<std::size_t> betti = gm_betti(p, effective_width(opts));

    ordered_json doc = header("oracle", a);
    doc["betti_oracle"] = betti;
    long long euler = 0;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        euler += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(betti[k]);
    }
    doc["euler"] = euler;
    doc["chambers"] = chambers_json(a, p, betti, nullptr);
    return doc.dump(2);
}

VerifyResult verify_report(const Arrangement& a, const PipelineOptions& opts) {
    enforce_atom_cap(a.atoms.size(), opts);
    const unsigned width = effective_width(opts);
    const Pipeline pipe(a, opts);

    // Graded-algebra side: ring, structure constants, audits.
    const CohomologyRing ring = compute_ring(pipe.basis, pipe.hom);
    const ProductAudit products = audit_products(pipe.basis, width);
    const IndependenceAudit independence = audit_representative_independence(
        ring, pipe.basis, pipe.hom, opts.audit_samples, 0x5eedULL, width);

    // Oracle side.
    const std::vector<std::size_t> oracle = gm_betti(pipe.poset, width);
    const BettiComparison cmp = compare_betti(pipe.hom, oracle, a.ambient_dim);

    ordered_json doc = header("verify", a);
    doc["betti_dga"] = cmp.dga;
    doc["betti_oracle"] = cmp.oracle;
    doc["betti_match"] = cmp.betti_equal();
    doc["mismatched_degrees"] = cmp.mismatched_degrees;
    ordered_json out_of_range = ordered_json::array();
    for (const auto& [degree, count] : cmp.dga_out_of_range) {
        out_of_range.push_back(
            ordered_json{{"degree", degree}, {"betti", count}});
    }
    doc["dga_out_of_range"] = std::move(out_of_range);
    doc["euler"] = ordered_json{{"dga", cmp.euler_dga},
                                {"oracle", cmp.euler_oracle},
                                {"match", cmp.euler_equal()}};

    bool chambers_consistent = true;
    doc["chambers"] = chambers_json(a, pipe.poset, cmp.oracle, &chambers_consistent);

    doc["classes"] = classes_json(ring);
    doc["products"] = products_json(ring, nullptr);

    const bool unit_ok = unit_law_holds(ring);
    const bool symmetric_ok = products_symmetric(ring);

    ordered_json audits;
    audits["delta_squared_ok"] = true; // homology() refuses to run otherwise
    audits["leibniz"] = ordered_json{
        {"pairs_checked", products.pairs_checked},
        {"exhaustive", products.exhaustive},
        {"violation_count", products.leibniz_violation_count},
        {"violations", products.leibniz_violations}};
    audits["product_grading"] = ordered_json{
        {"nonzero_products", products.nonzero_products},
        {"degree_additivity_ok", products.degree_additivity_ok},
        {"disjointness_ok", products.disjointness_ok},
        {"violations", products.grading_violations}};
    audits["representative_independence"] = ordered_json{
        {"perturbations_per_class", independence.perturbations_per_class},
        {"classes", independence.classes_audited},
        {"products_checked", independence.products_checked},
        {"discrepancies", independence.discrepancies}};
    audits["unit_law_ok"] = unit_ok;
    audits["product_symmetry_ok"] = symmetric_ok;
    doc["audits"] = std::move(audits);

    const bool ok = cmp.betti_equal() && cmp.euler_equal() &&
                    chambers_consistent &&
                    products.leibniz_violation_count == 0 &&
                    products.degree_additivity_ok &&
                    products.disjointness_ok &&
                    independence.discrepancies.empty() && unit_ok &&
                    symmetric_ok;
    doc["status"] = ok ? "ok" : "mismatch";
    return VerifyResult{doc.dump(2), ok};
}

std::string render_text(const std::string& report_json) {
    const ordered_json doc = ordered_json::parse(report_json);
    std::ostringstream out;
    const std::string command = doc.value("command", "?");
    out << "command: " << command << "\n";
    out << "digest:  " << doc.value("digest", "") << "\n";
    if (doc.contains("ambient_dim")) {
        out << "ambient dimension " << doc["ambient_dim"] << ", "
            << doc["atom_count"] << " atoms\n";
    }
    const auto print_betti = [&](const char* label, const ordered_json& b) {
        out << label << ":";
        for (const auto& v : b) out << " " << v;
        out << "\n";
    };
    if (doc.contains("betti_dga")) print_betti("betti (cochain algebra)", doc["betti_dga"]);
    if (doc.contains("betti_oracle")) print_betti("betti (order-complex oracle)", doc["betti_oracle"]);
    if (doc.contains("node_count")) {
        out << "poset nodes: " << doc["node_count"] << "\n";
    }
    if (doc.contains("classes")) {
        out << "classes: " << doc["classes"].size() << "\n";
    }
    if (doc.contains("products")) {
        out << "nonzero products: " << doc["products"]["nonzero"].size()
            << (doc["products"]["positive_degree_products_all_zero"].get<bool>()
                    ? " (all positive-degree products vanish)"
                    : "")
            << "\n";
    }
    if (doc.contains("chambers") && !doc["chambers"].is_null()) {
        out << "chambers: " << doc["chambers"]["mobius_sum"]
            << " (sampled " << doc["chambers"]["sampled_distinct"] << ")\n";
    }
    if (doc.contains("status")) {
        out << "status: " << doc["status"].get<std::string>() << "\n";
    }
    return out.str();
}

} // namespace subarr
