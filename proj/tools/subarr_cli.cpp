// Command-line front end for the subarr shared library. Everything
// mathematical happens behind the C API; this file only parses flags,
// shuttles files and maps statuses to exit codes (0 ok, 1 input error,
// 2 cap exceeded, 3 verification mismatch).

#include <subarr.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct CommonFlags {
    std::string output;
    std::string format = "json";
    subarr_options opts;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("-o,--output", flags.output, "write the report to a file");
    cmd->add_option("--format", flags.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-atoms", flags.opts.max_atoms, "atom-count cap");
    cmd->add_option("--max-poset-nodes", flags.opts.max_poset_nodes,
                    "intersection-poset size cap");
    cmd->add_option("--max-block-dim", flags.opts.max_block_dim,
                    "total enumerated atom-subset cap");
    cmd->add_option("--audit-samples", flags.opts.audit_samples,
                    "coboundary perturbations per class in the ring audit");
    cmd->add_option("--threads", flags.opts.threads,
                    "parallelism width (0 = machine)");
}

int fail(subarr_status status) {
    std::cerr << "error: " << subarr_last_error() << "\n";
    return static_cast<int>(status);
}

int emit(const CommonFlags& flags, const char* report_json) {
    std::string payload = report_json;
    if (flags.format == "text") {
        char* text = nullptr;
        const subarr_status status = subarr_render_text(report_json, &text);
        if (status != SUBARR_OK) return fail(status);
        payload = text;
        subarr_string_free(text);
    }
    if (flags.output.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream out(flags.output);
    if (!out) {
        std::cerr << "error: cannot write " << flags.output << "\n";
        return 1;
    }
    out << payload << "\n";
    return 0;
}

int load_file(const std::string& path, std::string& out) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return 1;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return 0;
}

using ArrangementPtr =
    std::unique_ptr<subarr_arrangement, decltype(&subarr_arrangement_free)>;

int run_report(const std::string& path, const CommonFlags& flags,
               subarr_status (*command)(const subarr_arrangement*,
                                        const subarr_options*, char**)) {
    std::string text;
    if (const int rc = load_file(path, text)) return rc;

    subarr_arrangement* raw = nullptr;
    subarr_status status = subarr_arrangement_parse(text.c_str(), &flags.opts, &raw);
    if (status != SUBARR_OK) return fail(status);
    ArrangementPtr arr(raw, subarr_arrangement_free);

    char* report = nullptr;
    status = command(arr.get(), &flags.opts, &report);
    if (status != SUBARR_OK && !report) return fail(status);

    const int emitted = emit(flags, report);
    subarr_string_free(report);
    if (emitted != 0) return emitted;
    if (status != SUBARR_OK) {
        std::cerr << "error: " << subarr_last_error() << "\n";
        return static_cast<int>(status);
    }
    return 0;
}

int run_gen(bool orbit, int mk, int n, const CommonFlags& flags) {
    subarr_arrangement* raw = nullptr;
    const subarr_status status =
        orbit ? subarr_arrangement_orbit_config(mk, n, &flags.opts, &raw)
              : subarr_arrangement_diagonal(mk, n, &flags.opts, &raw);
    if (status != SUBARR_OK) return fail(status);
    ArrangementPtr arr(raw, subarr_arrangement_free);

    char* json = nullptr;
    const subarr_status to_json = subarr_arrangement_to_json(arr.get(), &json);
    if (to_json != SUBARR_OK) return fail(to_json);
    CommonFlags json_only = flags;
    json_only.format = "json"; // arrangement documents have no text form
    const int emitted = emit(json_only, json);
    subarr_string_free(json);
    return emitted;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 cohomology of real subspace arrangement complements"};
    app.require_subcommand(1);

    CommonFlags flags;
    subarr_options_init(&flags.opts);

    // gen orbit-config / gen diagonal
    auto* gen = app.add_subcommand("gen", "generate a built-in arrangement");
    gen->require_subcommand(1);
    int opt_m = 1, opt_n = 1, opt_k = 1;
    auto* orbit = gen->add_subcommand(
        "orbit-config", "atoms x_i = g(x_j) for all sign vectors g");
    orbit->add_option("--m", opt_m, "coordinate dimension")->required();
    orbit->add_option("--n", opt_n, "number of points")->required();
    add_common(orbit, flags);
    auto* diagonal =
        gen->add_subcommand("diagonal", "atoms x_i = x_j of codimension k");
    diagonal->add_option("--k", opt_k, "codimension")->required();
    diagonal->add_option("--n", opt_n, "number of points")->required();
    add_common(diagonal, flags);

    std::string input_path;
    auto* poset = app.add_subcommand("poset", "intersection poset report");
    auto* betti = app.add_subcommand("betti", "cochain-algebra Betti numbers");
    auto* ring = app.add_subcommand("ring", "cohomology ring report");
    auto* oracle =
        app.add_subcommand("oracle", "order-complex oracle Betti numbers");
    auto* verify = app.add_subcommand(
        "verify", "run both pipelines, all audits and the comparison");
    for (CLI::App* cmd : {poset, betti, ring, oracle, verify}) {
        cmd->add_option("file", input_path, "arrangement JSON document")
            ->required();
        add_common(cmd, flags);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (orbit->parsed()) return run_gen(true, opt_m, opt_n, flags);
    if (diagonal->parsed()) return run_gen(false, opt_k, opt_n, flags);
    if (poset->parsed()) return run_report(input_path, flags, subarr_poset_report);
    if (betti->parsed()) return run_report(input_path, flags, subarr_betti_report);
    if (ring->parsed()) return run_report(input_path, flags, subarr_ring_report);
    if (oracle->parsed()) return run_report(input_path, flags, subarr_oracle_report);
    if (verify->parsed()) return run_report(input_path, flags, subarr_verify);
    return 1;
}
