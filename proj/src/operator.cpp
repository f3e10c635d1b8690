#include "opalg/operator.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace opalg {

namespace {

void require(bool cond, const char* what) {
    if (!cond) {
        throw std::invalid_argument(what);
    }
}

// True when the block acts as the identity on its last coordinate: last row
// and last column both equal the final standard basis vector.
bool last_coordinate_identity(const Matrix& block) {
    std::size_t n = block.rows();
    if (n == 0) {
        return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const GaussianRational& row_entry = block.at(n - 1, j);
        const GaussianRational& col_entry = block.at(j, n - 1);
        if (j + 1 == n) {
            if (!row_entry.is_one()) {
                return false;
            }
        } else if (!row_entry.is_zero() || !col_entry.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix shrink_by_one(const Matrix& block) {
    return delete_row_col(block, block.rows() - 1, block.cols() - 1);
}

}  // namespace

const char* carrier_name(Carrier c) {
    return c == Carrier::finite ? "finite" : "cofinite";
}

Operator Operator::finite(Matrix block) {
    require(block.rows() == block.cols(), "finite operator: block must be square");
    require(block.rows() >= 1, "finite operator: dimension must be positive");
    return Operator(Carrier::finite, std::move(block));
}

Operator Operator::cofinite(Matrix block) {
    require(block.rows() == block.cols(), "cofinite operator: block must be square");
    while (last_coordinate_identity(block)) {
        block = shrink_by_one(block);
    }
    return Operator(Carrier::cofinite, std::move(block));
}

Matrix Operator::block_padded(std::size_t m) const {
    if (carrier_ == Carrier::finite) {
        require(m == dim(), "finite operator: cannot repad");
        return block_;
    }
    require(m >= dim(), "cofinite operator: pad target below canonical window");
    return direct_sum(block_, Matrix::identity(m - dim()));
}

bool Operator::is_identity() const {
    if (carrier_ == Carrier::cofinite) {
        return dim() == 0;  // canonical form absorbs the whole block
    }
    return block_.is_identity();
}

std::vector<GaussianRational> Operator::apply(const std::vector<GaussianRational>& xs) const {
    if (carrier_ == Carrier::finite) {
        require(xs.size() == dim(), "apply: vector length must equal operator dimension");
        return mat_vec(block_, xs);
    }
    require(xs.size() >= dim(), "apply: prefix shorter than the operator window");
    return mat_vec(block_padded(xs.size()), xs);
}

namespace {

Operator combine(const Operator& a, const Operator& b,
                 Matrix (*op)(const Matrix&, const Matrix&)) {
    require(a.carrier() == b.carrier(), "operator combination: carrier mismatch");
    if (a.carrier() == Carrier::finite) {
        require(a.dim() == b.dim(), "operator combination: dimension mismatch");
        return Operator::finite(op(a.block(), b.block()));
    }
    std::size_t m = std::max(a.dim(), b.dim());
    return Operator::cofinite(op(a.block_padded(m), b.block_padded(m)));
}

}  // namespace

Operator operator+(const Operator& a, const Operator& b) {
    return combine(a, b, +[](const Matrix& x, const Matrix& y) { return x + y; });
}

Operator operator*(const Operator& a, const Operator& b) {
    return combine(a, b, +[](const Matrix& x, const Matrix& y) { return x * y; });
}

Operator adjoint(const Operator& t) {
    Matrix star = t.block().conj_transpose();
    return t.carrier() == Carrier::finite ? Operator::finite(std::move(star))
                                          : Operator::cofinite(std::move(star));
}

Operator scale(const GaussianRational& c, const Operator& t) {
    Matrix scaled = c * t.block();
    return t.carrier() == Carrier::finite ? Operator::finite(std::move(scaled))
                                          : Operator::cofinite(std::move(scaled));
}

Operator op_identity(Carrier carrier, std::size_t n) {
    if (carrier == Carrier::finite) {
        return Operator::finite(Matrix::identity(n));
    }
    return Operator::cofinite(Matrix::identity(n));
}

Operator op_zero(Carrier carrier, std::size_t n) {
    if (carrier == Carrier::finite) {
        return Operator::finite(Matrix(n, n));
    }
    return Operator::cofinite(Matrix(n, n));
}

Operator op_pinv(const Operator& t) {
    Matrix p = pinv(t.block());
    return t.carrier() == Carrier::finite ? Operator::finite(std::move(p))
                                          : Operator::cofinite(std::move(p));
}

Operator block_column_pair(const Operator& t, const Operator& s) {
    require(t.carrier() == Carrier::finite && s.carrier() == Carrier::finite,
            "block_column_pair: both operators must be finite");
    require(t.dim() == s.dim(), "block_column_pair: dimension mismatch");
    std::size_t n = t.dim();
    Matrix a(2 * n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a.at(r, c) = t.block().at(r, c);
            a.at(n + r, c) = s.block().at(r, c);
        }
    }
    return Operator::finite(std::move(a));
}

Subspace Subspace::finite(std::size_t n, const Matrix& span_rows) {
    require(span_rows.rows() == 0 || span_rows.cols() == n,
            "subspace: basis width must match ambient dimension");
    Matrix rows = span_rows.rows() == 0 ? Matrix(0, n) : span_rows;
    return Subspace(Carrier::finite, false, n, row_space_basis(rows));
}

Subspace Subspace::cofinite(std::size_t n, const Matrix& span_rows, bool includes_tail) {
    require(span_rows.rows() == 0 || span_rows.cols() == n,
            "subspace: basis width must match ambient dimension");
    Matrix rows = span_rows.rows() == 0 ? Matrix(0, n) : span_rows;
    Matrix basis = row_space_basis(rows);
    if (includes_tail) {
        // Absorb trailing standard basis vectors into the tail. In RREF such
        // a vector is the last row and owns its pivot column, so no other row
        // touches coordinate n.
        while (n > 0 && basis.rows() > 0) {
            std::size_t last = basis.rows() - 1;
            bool is_e_n = basis.at(last, n - 1).is_one();
            for (std::size_t c = 0; is_e_n && c + 1 < n; ++c) {
                is_e_n = basis.at(last, c).is_zero();
            }
            if (!is_e_n) {
                break;
            }
            Matrix trimmed(last, n - 1);
            for (std::size_t r = 0; r < last; ++r) {
                for (std::size_t c = 0; c + 1 < n; ++c) {
                    trimmed.at(r, c) = basis.at(r, c);
                }
            }
            basis = std::move(trimmed);
            --n;
        }
    } else {
        // Minimal window: drop trailing coordinates carrying no support.
        while (n > 0) {
            bool unused = true;
            for (std::size_t r = 0; unused && r < basis.rows(); ++r) {
                unused = basis.at(r, n - 1).is_zero();
            }
            if (!unused) {
                break;
            }
            Matrix trimmed(basis.rows(), n - 1);
            for (std::size_t r = 0; r < basis.rows(); ++r) {
                for (std::size_t c = 0; c + 1 < n; ++c) {
                    trimmed.at(r, c) = basis.at(r, c);
                }
            }
            basis = std::move(trimmed);
            --n;
        }
    }
    return Subspace(Carrier::cofinite, includes_tail, n, std::move(basis));
}

Matrix Subspace::materialized_rows(std::size_t m) const {
    require(m >= n_, "subspace: window below canonical size");
    Matrix rows(basis_.rows() + (tail_ ? m - n_ : 0), m);
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
            rows.at(r, c) = basis_.at(r, c);
        }
    }
    if (tail_) {
        for (std::size_t k = 0; k < m - n_; ++k) {
            rows.at(basis_.rows() + k, n_ + k) = GaussianRational(1);
        }
    }
    return rows;
}

std::string Subspace::describe() const {
    std::string span;
    if (basis_.rows() > 0) {
        span = "span{";
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            if (r != 0) {
                span += ", ";
            }
            span += format_vector(basis_.row(r));
        }
        span += "}";
    }
    if (carrier_ == Carrier::finite) {
        std::string ambient = " in C^" + std::to_string(n_);
        return span.empty() ? "{0}" + ambient : span + ambient;
    }
    if (tail_) {
        std::string tail = "tail(coords > " + std::to_string(n_) + ")";
        if (n_ == 0) {
            return "full space";
        }
        return span.empty() ? tail : span + " (+) " + tail;
    }
    return span.empty() ? "{0}" : span + " in l2";
}

Subspace range(const Operator& t) {
    Matrix basis = column_space_basis(t.block());
    if (t.carrier() == Carrier::finite) {
        return Subspace::finite(t.dim(), basis);
    }
    return Subspace::cofinite(t.dim(), basis, /*includes_tail=*/true);
}

Subspace kernel(const Operator& t) {
    Matrix basis = null_space_basis(t.block());
    if (t.carrier() == Carrier::finite) {
        return Subspace::finite(t.dim(), basis);
    }
    return Subspace::cofinite(t.dim(), basis, /*includes_tail=*/false);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    require(u.carrier() == v.carrier(), "subspace_sum: carrier mismatch");
    if (u.carrier() == Carrier::finite) {
        require(u.ambient_dim() == v.ambient_dim(), "subspace_sum: ambient mismatch");
        return Subspace::finite(u.ambient_dim(), vstack(u.basis(), v.basis()));
    }
    std::size_t m = std::max(u.ambient_dim(), v.ambient_dim());
    Matrix rows = vstack(u.materialized_rows(m), v.materialized_rows(m));
    return Subspace::cofinite(m, rows, u.includes_tail() || v.includes_tail());
}

bool subspace_eq(const Subspace& u, const Subspace& v) {
    require(u.carrier() == v.carrier(), "subspace_eq: carrier mismatch");
    return u == v;
}

bool subspace_leq(const Subspace& u, const Subspace& v) {
    require(u.carrier() == v.carrier(), "subspace_leq: carrier mismatch");
    if (u.carrier() == Carrier::finite) {
        require(u.ambient_dim() == v.ambient_dim(), "subspace_leq: ambient mismatch");
    }
    if (u.includes_tail() && !v.includes_tail()) {
        return false;
    }
    std::size_t m = std::max(u.ambient_dim(), v.ambient_dim());
    Matrix u_rows = u.materialized_rows(m);
    Matrix v_rows = v.materialized_rows(m);
    for (std::size_t r = 0; r < u_rows.rows(); ++r) {
        if (!in_row_space(v_rows, u_rows.row(r))) {
            return false;
        }
    }
    return true;
}

Subspace subspace_direct_sum(const Subspace& u, const Subspace& v) {
    require(u.carrier() == Carrier::finite && v.carrier() == Carrier::finite,
            "subspace_direct_sum: both subspaces must have finite carrier");
    Matrix rows = direct_sum(u.basis(), v.basis());
    // direct_sum of r x n and s x m bases yields (r+s) x (n+m) block rows,
    // exactly the embedded copies U x {0} and {0} x V.
    return Subspace::finite(u.ambient_dim() + v.ambient_dim(), rows);
}

bool ep_check(const Operator& t) {
    return subspace_eq(range(t), range(adjoint(t)));
}

}  // namespace opalg
