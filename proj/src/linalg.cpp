#include "opalg/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace opalg {

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.r = m;
    Matrix& r = res.r;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col).is_zero()) {
            ++sel;
        }
        if (sel == r.rows()) {
            continue;
        }
        r.swap_rows(pivot_row, sel);
        GaussianRational inv = r.at(pivot_row, col).reciprocal();
        for (std::size_t c = col; c < r.cols(); ++c) {
            r.at(pivot_row, c) = inv * r.at(pivot_row, c);
        }
        for (std::size_t row = 0; row < r.rows(); ++row) {
            if (row == pivot_row || r.at(row, col).is_zero()) {
                continue;
            }
            GaussianRational factor = r.at(row, col);
            for (std::size_t c = col; c < r.cols(); ++c) {
                r.at(row, c) -= factor * r.at(pivot_row, c);
            }
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const Matrix& m) {
    return rref(m).rank;
}

Matrix row_space_basis(const Matrix& rows) {
    RrefResult res = rref(rows);
    Matrix basis(res.rank, rows.cols());
    for (std::size_t r = 0; r < res.rank; ++r) {
        for (std::size_t c = 0; c < rows.cols(); ++c) {
            basis.at(r, c) = res.r.at(r, c);
        }
    }
    return basis;
}

Matrix column_space_basis(const Matrix& m) {
    return row_space_basis(m.transpose());
}

Matrix null_space_basis(const Matrix& m) {
    RrefResult res = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : res.pivot_cols) {
        is_pivot[c] = true;
    }
    Matrix vectors(m.cols() - res.rank, m.cols());
    std::size_t v = 0;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        vectors.at(v, free_col) = GaussianRational(1);
        for (std::size_t p = 0; p < res.rank; ++p) {
            vectors.at(v, res.pivot_cols[p]) = -res.r.at(p, free_col);
        }
        ++v;
    }
    // Canonicalize so equal null spaces compare structurally.
    return row_space_basis(vectors);
}

FullRankFactorization full_rank_factorization(const Matrix& m) {
    RrefResult res = rref(m);
    FullRankFactorization out;
    out.f = select_columns(m, res.pivot_cols);
    out.g = Matrix(res.rank, m.cols());
    for (std::size_t r = 0; r < res.rank; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.g.at(r, c) = res.r.at(r, c);
        }
    }
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("inverse: matrix not square");
    }
    std::size_t n = m.rows();
    RrefResult res = rref(hstack(m, Matrix::identity(n)));
    if (res.rank < n || (n > 0 && res.pivot_cols[n - 1] >= n)) {
        return std::nullopt;
    }
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            inv.at(r, c) = res.r.at(r, n + c);
        }
    }
    return inv;
}

Matrix pinv(const Matrix& m) {
    FullRankFactorization fg = full_rank_factorization(m);
    if (fg.g.rows() == 0) {
        return Matrix(m.cols(), m.rows());
    }
    Matrix f_star = fg.f.conj_transpose();
    Matrix g_star = fg.g.conj_transpose();
    Matrix core = f_star * m * g_star;  // r x r, equals (F*F)(GG*), always invertible
    std::optional<Matrix> core_inv = inverse(core);
    assert(core_inv.has_value() && "full-rank factorization core must be invertible");
    if (!core_inv) {
        throw std::logic_error("pinv: singular core in full-rank factorization");
    }
    return g_star * *core_inv * f_star;
}

std::optional<std::vector<GaussianRational>> solve(const Matrix& m,
                                                   const std::vector<GaussianRational>& b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: dimension mismatch");
    }
    Matrix rhs(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rhs.at(r, 0) = b[r];
    }
    RrefResult res = rref(hstack(m, rhs));
    for (std::size_t c : res.pivot_cols) {
        if (c == m.cols()) {
            return std::nullopt;  // pivot in the augmented column: inconsistent
        }
    }
    std::vector<GaussianRational> x(m.cols());
    for (std::size_t p = 0; p < res.pivot_cols.size(); ++p) {
        x[res.pivot_cols[p]] = res.r.at(p, m.cols());
    }
    return x;
}

bool in_row_space(const Matrix& basis_rows, const std::vector<GaussianRational>& v) {
    return solve(basis_rows.transpose(), v).has_value();
}

}  // namespace opalg
