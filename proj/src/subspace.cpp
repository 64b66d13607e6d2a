#include "subarr/subspace.hpp"

#include "subarr/error.hpp"

#include <sstream>

namespace subarr {

namespace {

void check_width(std::size_t ambient_dim, const MatrixQ& m, const char* what) {
    if (m.rows() != 0 && m.cols() != ambient_dim) {
        input_error(std::string(what) + " width " + std::to_string(m.cols()) +
                    " does not match ambient dimension " +
                    std::to_string(ambient_dim));
    }
}

MatrixQ widen_empty(std::size_t ambient_dim, const MatrixQ& m) {
    if (m.rows() == 0) return MatrixQ(0, ambient_dim);
    return m;
}

} // namespace

SubspaceBasis SubspaceBasis::from_span(std::size_t ambient_dim, const MatrixQ& rows) {
    check_width(ambient_dim, rows, "spanning row");
    SubspaceBasis s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = rref(widen_empty(ambient_dim, rows)).matrix;
    return s;
}

SubspaceBasis SubspaceBasis::from_equations(std::size_t ambient_dim, const MatrixQ& equations) {
    check_width(ambient_dim, equations, "equation row");
    SubspaceBasis s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = kernel_basis(widen_empty(ambient_dim, equations));
    return s;
}

SubspaceBasis SubspaceBasis::full_space(std::size_t ambient_dim) {
    SubspaceBasis s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = MatrixQ::identity(ambient_dim);
    return s;
}

SubspaceBasis SubspaceBasis::zero_space(std::size_t ambient_dim) {
    SubspaceBasis s;
    s.ambient_dim_ = ambient_dim;
    s.basis_ = MatrixQ(0, ambient_dim);
    return s;
}

MatrixQ SubspaceBasis::equations() const {
    // A functional c kills the row space of basis_ iff basis_ * c = 0, and
    // over Q the double complement gives the row space back.
    return kernel_basis(basis_);
}

std::string SubspaceBasis::key() const {
    std::ostringstream out;
    out << ambient_dim_ << ':' << basis_.rows();
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        for (std::size_t c = 0; c < basis_.cols(); ++c) {
            out << ',' << format_rational(basis_.at(r, c));
        }
    }
    return out.str();
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        input_error("intersect: ambient dimensions differ (" +
                    std::to_string(a.ambient_dim()) + " vs " +
                    std::to_string(b.ambient_dim()) + ")");
    }
    return SubspaceBasis::from_equations(a.ambient_dim(),
                                         stack(a.equations(), b.equations()));
}

std::size_t sum_dim(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim() != b.ambient_dim()) {
        input_error("sum_dim: ambient dimensions differ (" +
                    std::to_string(a.ambient_dim()) + " vs " +
                    std::to_string(b.ambient_dim()) + ")");
    }
    return rank(stack(a.basis(), b.basis()));
}

bool subspace_equal(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a == b;
}

bool subspace_contains(const SubspaceBasis& outer, const SubspaceBasis& inner) {
    if (inner.dim() > outer.dim()) return false;
    return sum_dim(outer, inner) == outer.dim();
}

} // namespace subarr
