#ifndef SUBARR_REPORT_HPP
#define SUBARR_REPORT_HPP

#include "subarr/arrangement.hpp"

#include <cstddef>
#include <string>

namespace subarr {

struct PipelineOptions {
    std::size_t max_atoms = 24;
    std::size_t max_poset_nodes = 200000;
    std::size_t max_block_dim = 5000000; // total enumerated atom subsets
    std::size_t audit_samples = 100;     // coboundary perturbations per class
    unsigned threads = 0;                // 0 = machine width
};

// Stable 64-bit digest (hex) of the canonical atom bases; embedded in every
// report so cross-run comparisons are anchored to the exact input.
std::string arrangement_digest(const Arrangement& a);

// Cap checks a generator applies before building anything: atom count
// against max_atoms and the projected subset enumeration against
// max_block_dim. Throws Error(Cap) naming the bottleneck.
void enforce_generation_caps(std::size_t atom_count, const PipelineOptions& opts);

// The atom-count cap alone; loaded documents are held to it, while the
// subset-enumeration cap binds only the commands that enumerate.
void enforce_atom_cap(std::size_t atom_count, const PipelineOptions& opts);

std::string poset_report(const Arrangement& a, const PipelineOptions& opts);
std::string betti_report(const Arrangement& a, const PipelineOptions& opts);
std::string ring_report(const Arrangement& a, const PipelineOptions& opts);
std::string oracle_report(const Arrangement& a, const PipelineOptions& opts);

struct VerifyResult {
    std::string json;
    bool ok = false; // false maps to the verification-mismatch exit code
};

// Runs both pipelines (graded cochain algebra and order-complex oracle),
// every audit, and the comparison; the report carries witnesses for any
// failure.
VerifyResult verify_report(const Arrangement& a, const PipelineOptions& opts);

// Human-readable summary of any report produced above.
std::string render_text(const std::string& report_json);

} // namespace subarr

#endif
