#include "subarr/arrangement.hpp"

#include "subarr/error.hpp"

#include <json.hpp>

#include <string>
#include <utility>

namespace subarr {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string sign_string(std::size_t g, std::size_t m) {
    std::string s;
    for (std::size_t k = 0; k < m; ++k) {
        s += (g >> k) & 1 ? '-' : '+';
    }
    return s;
}

} // namespace

void validate_arrangement(const Arrangement& a) {
    for (const Atom& atom : a.atoms) {
        if (atom.subspace.ambient_dim() != a.ambient_dim) {
            input_error("atom " + std::to_string(atom.id) + " (" + atom.name +
                        ") lives in dimension " +
                        std::to_string(atom.subspace.ambient_dim()) +
                        ", arrangement ambient dimension is " +
                        std::to_string(a.ambient_dim));
        }
        if (atom.subspace.dim() >= a.ambient_dim) {
            input_error("atom " + std::to_string(atom.id) + " (" + atom.name +
                        ") is not a proper subspace of the ambient space");
        }
    }
    for (std::size_t i = 0; i < a.atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < a.atoms.size(); ++j) {
            const Atom& ai = a.atoms[i];
            const Atom& aj = a.atoms[j];
            if (ai.subspace == aj.subspace) {
                input_error("atoms " + std::to_string(ai.id) + " and " +
                            std::to_string(aj.id) + " have equal subspaces");
            }
            if (subspace_contains(ai.subspace, aj.subspace) ||
                subspace_contains(aj.subspace, ai.subspace)) {
                input_error("atoms " + std::to_string(ai.id) + " and " +
                            std::to_string(aj.id) +
                            " are comparable under inclusion (atoms must form "
                            "an antichain)");
            }
        }
    }
}

Arrangement orbit_config_arrangement(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) {
        input_error("orbit-config generator needs m >= 1 and n >= 1");
    }
    Arrangement arr;
    arr.ambient_dim = m * n;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            for (std::size_t g = 0; g < (std::size_t{1} << m); ++g) {
                // m equations (x_i)_k - g_k (x_j)_k = 0; coordinate (x_i)_k
                // sits at index (i-1)*m + (k-1).
                MatrixQ eqs(m, arr.ambient_dim);
                for (std::size_t k = 0; k < m; ++k) {
                    eqs.at(k, (i - 1) * m + k) = 1;
                    eqs.at(k, (j - 1) * m + k) = ((g >> k) & 1) ? 1 : -1;
                }
                Atom atom;
                atom.id = arr.atoms.size();
                atom.name = "A(" + std::to_string(i) + "," + std::to_string(j) +
                            ";" + sign_string(g, m) + ")";
                atom.subspace = SubspaceBasis::from_equations(arr.ambient_dim, eqs);
                arr.atoms.push_back(std::move(atom));
            }
        }
    }
    validate_arrangement(arr);
    return arr;
}

Arrangement diagonal_arrangement(std::size_t k, std::size_t n) {
    if (k < 1 || n < 1) {
        input_error("diagonal generator needs k >= 1 and n >= 1");
    }
    Arrangement arr;
    arr.ambient_dim = k * n;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            MatrixQ eqs(k, arr.ambient_dim);
            for (std::size_t l = 0; l < k; ++l) {
                eqs.at(l, (i - 1) * k + l) = 1;
                eqs.at(l, (j - 1) * k + l) = -1;
            }
            Atom atom;
            atom.id = arr.atoms.size();
            atom.name = "D(" + std::to_string(i) + "," + std::to_string(j) + ")";
            atom.subspace = SubspaceBasis::from_equations(arr.ambient_dim, eqs);
            arr.atoms.push_back(std::move(atom));
        }
    }
    validate_arrangement(arr);
    return arr;
}

namespace {

MatrixQ parse_matrix(const ordered_json& rows, std::size_t ambient_dim,
                     std::size_t atom_id, const char* field) {
    if (!rows.is_array()) {
        input_error("atom " + std::to_string(atom_id) + ": '" + field +
                    "' must be an array of rows");
    }
    MatrixQ m(rows.size(), ambient_dim);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != ambient_dim) {
            input_error("atom " + std::to_string(atom_id) + ": row " +
                        std::to_string(r) + " of '" + field + "' must have " +
                        std::to_string(ambient_dim) + " entries");
        }
        std::size_t c = 0;
        for (const auto& cell : row) {
            if (cell.is_number_integer()) {
                m.at(r, c) = Rational(Integer(cell.get<long long>()));
            } else if (cell.is_string()) {
                m.at(r, c) = parse_rational(cell.get<std::string>());
            } else {
                input_error("atom " + std::to_string(atom_id) +
                            ": matrix entries must be rational strings");
            }
            ++c;
        }
        ++r;
    }
    return m;
}

} // namespace

Arrangement load_arrangement(const std::string& json_text) {
    ordered_json doc = ordered_json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) {
        input_error("arrangement document is not valid JSON");
    }
    if (!doc.is_object() || !doc.contains("ambient_dim") ||
        !doc.contains("atoms")) {
        input_error("arrangement document needs 'ambient_dim' and 'atoms'");
    }
    if (!doc["ambient_dim"].is_number_unsigned() || doc["ambient_dim"] == 0) {
        input_error("'ambient_dim' must be a positive integer");
    }

    Arrangement arr;
    arr.ambient_dim = doc["ambient_dim"].get<std::size_t>();
    if (!doc["atoms"].is_array()) {
        input_error("'atoms' must be an array");
    }
    for (const auto& entry : doc["atoms"]) {
        Atom atom;
        atom.id = arr.atoms.size();
        if (!entry.is_object()) {
            input_error("atom " + std::to_string(atom.id) +
                        " must be an object");
        }
        atom.name = entry.value("name", "atom" + std::to_string(atom.id));
        const bool has_eq = entry.contains("equations");
        const bool has_span = entry.contains("span");
        if (has_eq == has_span) {
            input_error("atom " + std::to_string(atom.id) +
                        " must carry exactly one of 'equations' or 'span'");
        }
        if (has_eq) {
            atom.subspace = SubspaceBasis::from_equations(
                arr.ambient_dim,
                parse_matrix(entry["equations"], arr.ambient_dim, atom.id,
                             "equations"));
        } else {
            atom.subspace = SubspaceBasis::from_span(
                arr.ambient_dim,
                parse_matrix(entry["span"], arr.ambient_dim, atom.id, "span"));
        }
        arr.atoms.push_back(std::move(atom));
    }
    validate_arrangement(arr);
    return arr;
}

std::string save_arrangement(const Arrangement& a) {
    ordered_json doc;
    doc["ambient_dim"] = a.ambient_dim;
    doc["atoms"] = ordered_json::array();
    for (const Atom& atom : a.atoms) {
        ordered_json rows = ordered_json::array();
        const MatrixQ& basis = atom.subspace.basis();
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < basis.cols(); ++c) {
                row.push_back(format_rational(basis.at(r, c)));
            }
            rows.push_back(std::move(row));
        }
        doc["atoms"].push_back({{"name", atom.name}, {"span", std::move(rows)}});
    }
    return doc.dump(2);
}

} // namespace subarr
