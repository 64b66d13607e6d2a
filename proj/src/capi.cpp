#include "subarr.h"

#include "subarr/arrangement.hpp"
#include "subarr/error.hpp"
#include "subarr/report.hpp"

#include <cstring>
#include <new>
#include <string>

struct subarr_arrangement {
    subarr::Arrangement value;
};

namespace {

thread_local std::string g_last_error;

subarr::PipelineOptions to_pipeline_options(const subarr_options* opts) {
    subarr::PipelineOptions out;
    if (!opts) return out;
    if (opts->max_atoms > 0) out.max_atoms = static_cast<std::size_t>(opts->max_atoms);
    if (opts->max_poset_nodes > 0) {
        out.max_poset_nodes = static_cast<std::size_t>(opts->max_poset_nodes);
    }
    if (opts->max_block_dim > 0) {
        out.max_block_dim = static_cast<std::size_t>(opts->max_block_dim);
    }
    if (opts->audit_samples >= 0) {
        out.audit_samples = static_cast<std::size_t>(opts->audit_samples);
    }
    if (opts->threads > 0) out.threads = static_cast<unsigned>(opts->threads);
    return out;
}

subarr_status status_of(const subarr::Error& e) {
    switch (e.kind()) {
    case subarr::ErrorKind::Input: return SUBARR_ERROR_INPUT;
    case subarr::ErrorKind::Cap: return SUBARR_ERROR_CAP;
    case subarr::ErrorKind::Consistency: return SUBARR_ERROR_VERIFY;
    }
    return SUBARR_ERROR_INPUT;
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

template <typename Fn>
subarr_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const subarr::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SUBARR_ERROR_INPUT;
    } catch (...) {
        g_last_error = "unknown failure";
        return SUBARR_ERROR_INPUT;
    }
}

template <typename Fn>
subarr_status report_call(const subarr_arrangement* arr,
                          const subarr_options* opts, char** out_json,
                          Fn&& fn) {
    if (!arr || !out_json) {
        g_last_error = "null argument";
        return SUBARR_ERROR_INPUT;
    }
    return guarded([&]() {
        *out_json = copy_string(fn(arr->value, to_pipeline_options(opts)));
        return SUBARR_OK;
    });
}

} // namespace

extern "C" {

void subarr_options_init(subarr_options* opts) {
    if (!opts) return;
    const subarr::PipelineOptions defaults;
    opts->max_atoms = static_cast<long>(defaults.max_atoms);
    opts->max_poset_nodes = static_cast<long>(defaults.max_poset_nodes);
    opts->max_block_dim = static_cast<long>(defaults.max_block_dim);
    opts->audit_samples = static_cast<long>(defaults.audit_samples);
    opts->threads = 0;
}

subarr_status subarr_arrangement_orbit_config(int m, int n,
                                              const subarr_options* opts,
                                              subarr_arrangement** out) {
    if (!out) {
        g_last_error = "null argument";
        return SUBARR_ERROR_INPUT;
    }
    return guarded([&]() {
        if (m < 1 || n < 1) {
            subarr::input_error("orbit-config generator needs m >= 1 and n >= 1");
        }
        const std::size_t pairs =
            static_cast<std::size_t>(n) * (n - 1) / 2;
        const bool huge = m >= 63 || (m > 0 && pairs > (~std::size_t{0} >> m));
        const std::size_t count = huge ? ~std::size_t{0} : pairs << m;
        subarr::enforce_generation_caps(count, to_pipeline_options(opts));
        *out = new subarr_arrangement{subarr::orbit_config_arrangement(
            static_cast<std::size_t>(m), static_cast<std::size_t>(n))};
        return SUBARR_OK;
    });
}

subarr_status subarr_arrangement_diagonal(int k, int n,
                                          const subarr_options* opts,
                                          subarr_arrangement** out) {
    if (!out) {
        g_last_error = "null argument";
        return SUBARR_ERROR_INPUT;
    }
    return guarded([&]() {
        if (k < 1 || n < 1) {
            subarr::input_error("diagonal generator needs k >= 1 and n >= 1");
        }
        const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
        subarr::enforce_generation_caps(count, to_pipeline_options(opts));
        *out = new subarr_arrangement{subarr::diagonal_arrangement(
            static_cast<std::size_t>(k), static_cast<std::size_t>(n))};
        return SUBARR_OK;
    });
}

subarr_status subarr_arrangement_parse(const char* json_text,
                                       const subarr_options* opts,
                                       subarr_arrangement** out) {
    if (!json_text || !out) {
        g_last_error = "null argument";
        return SUBARR_ERROR_INPUT;
    }
    return guarded([&]() {
        subarr::Arrangement arr = subarr::load_arrangement(json_text);
        subarr::enforce_atom_cap(arr.atoms.size(), to_pipeline_options(opts));
        *out = new subarr_arrangement{std::move(arr)};
        return SUBARR_OK;
    });
}

subarr_status subarr_arrangement_to_json(const subarr_arrangement* arr,
                                         char** out_json) {
    if (!arr || !out_json) {
        g_last_error = "null argument";
        return SUBARR_ERROR_INPUT;
    }
    return guarded([&]() {
        *out_json = copy_string(subarr::save_arrangement(arr->value));
        return SUBARR_OK;
    });
}

int subarr_arrangement_atom_count(const subarr_arrangement* arr) {
    return arr ? static_cast<int>(arr->value.atoms.size()) : -1;
}

int subarr_arrangement_ambient_dim(const subarr_arrangement* arr) {
    return arr ? static_cast<int>(arr->value.ambient_dim) : -1;
}

void subarr_arrangement_free(subarr_arrangement* arr) { delete arr; }

subarr_status subarr_poset_report(const subarr_arrangement* arr,
                                  const subarr_options* opts,
                                  char** out_json) {
    return report_call(arr, opts, out_json, subarr::poset_report);
}

subarr_status subarr_betti_report(const subarr_arrangement* arr,
                                  const subarr_options* opts,
                                  char** out_json) {
    return report_call(arr, opts, out_json, subarr::betti_report);
}

subarr_status subarr_ring_report(const subarr_arrangement* arr,
                                 const subarr_options* opts, char** out_json) {
    return report_call(arr, opts, out_json, subarr::ring_report);
}

subarr_status subarr_oracle_report(const subarr_arrangement* arr,
                                   const subarr_options* opts,
                                   char** out_json) {
    return report_call(arr, opts, out_json, subarr::oracle_report);
}

subarr_status subarr_verify(const subarr_arrangement* arr,
                            const subarr_options* opts, char** out_json) {
    if (!arr || !out_json) {
        g_last_error = "null argument";
        return SUBARR_ERROR_INPUT;
    }
    return guarded([&]() {
        const subarr::VerifyResult result =
            subarr::verify_report(arr->value, to_pipeline_options(opts));
        *out_json = copy_string(result.json);
        if (!result.ok) {
            g_last_error = "verification mismatch (see report)";
            return SUBARR_ERROR_VERIFY;
        }
        return SUBARR_OK;
    });
}

subarr_status subarr_render_text(const char* report_json, char** out_text) {
    if (!report_json || !out_text) {
        g_last_error = "null argument";
        return SUBARR_ERROR_INPUT;
    }
    return guarded([&]() {
        *out_text = copy_string(subarr::render_text(report_json));
        return SUBARR_OK;
    });
}

void subarr_string_free(char* text) { delete[] text; }

const char* subarr_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
