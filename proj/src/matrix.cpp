#include "opalg/matrix.hpp"

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

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = GaussianRational(1);
    }
    return m;
}

Matrix Matrix::from_rows(std::vector<std::vector<GaussianRational>> rows) {
    if (rows.empty()) {
        return {};
    }
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == m.cols_, "ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) {
            m.at(r, c) = std::move(rows[r][c]);
        }
    }
    return m;
}

Matrix Matrix::from_int_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<GaussianRational>> converted;
    converted.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<GaussianRational> out;
        out.reserve(row.size());
        for (long v : row) {
            out.emplace_back(v);
        }
        converted.push_back(std::move(out));
    }
    return from_rows(std::move(converted));
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const GaussianRational& e) { return e.is_zero(); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<GaussianRational> Matrix::row(std::size_t r) const {
    std::vector<GaussianRational> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        out[c] = at(r, c);
    }
    return out;
}

std::vector<GaussianRational> Matrix::col(std::size_t c) const {
    std::vector<GaussianRational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = at(r, c);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t.at(c, r) = at(r, c);
        }
    }
    return t;
}

Matrix Matrix::conj_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t.at(c, r) = at(r, c).conj();
        }
    }
    return t;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(at(a, c), at(b, c));
    }
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix addition: dimension mismatch");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
        out.entries_[i] = a.entries_[i] + b.entries_[i];
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix subtraction: dimension mismatch");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
        out.entries_[i] = a.entries_[i] - b.entries_[i];
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, "matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& ark = a.at(r, k);
            if (ark.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                out.at(r, c) += ark * b.at(k, c);
            }
        }
    }
    return out;
}

Matrix operator*(const GaussianRational& c, const Matrix& m) {
    Matrix out(m.rows_, m.cols_);
    for (std::size_t i = 0; i < out.entries_.size(); ++i) {
        out.entries_[i] = c * m.entries_[i];
    }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require(a.rows() == b.rows(), "hstack: row mismatch");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out.at(r, c) = a.at(r, c);
        }
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out.at(r, a.cols() + c) = b.at(r, c);
        }
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) {
        return b.rows() == 0 ? Matrix(0, std::max(a.cols(), b.cols())) : b;
    }
    if (b.rows() == 0) {
        return a;
    }
    require(a.cols() == b.cols(), "vstack: column mismatch");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out.at(r, c) = a.at(r, c);
        }
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out.at(a.rows() + r, c) = b.at(r, c);
        }
    }
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out.at(r, c) = a.at(r, c);
        }
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
        }
    }
    return out;
}

Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols) {
    Matrix out(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            out.at(r, i) = m.at(r, cols[i]);
        }
    }
    return out;
}

Matrix delete_row_col(const Matrix& m, std::size_t r, std::size_t c) {
    require(r < m.rows() && c < m.cols(), "delete_row_col: index out of range");
    Matrix out(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == r) {
            continue;
        }
        for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == c) {
                continue;
            }
            out.at(oi, oj) = m.at(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

std::vector<GaussianRational> mat_vec(const Matrix& m, const std::vector<GaussianRational>& x) {
    require(m.cols() == x.size(), "mat_vec: dimension mismatch");
    std::vector<GaussianRational> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r] += m.at(r, c) * x[c];
        }
    }
    return out;
}

std::string format_matrix(const Matrix& m, const std::string& indent) {
    if (m.rows() == 0 || m.cols() == 0) {
        return indent + "[ ]";
    }
    std::vector<std::string> cells(m.rows() * m.cols());
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            std::string s = format_scalar(m.at(r, c));
            width[c] = std::max(width[c], s.size());
            cells[r * m.cols() + c] = std::move(s);
        }
    }
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += indent + "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string& s = cells[r * m.cols() + c];
            out += ' ';
            out.append(width[c] - s.size(), ' ');
            out += s;
        }
        out += " ]";
        if (r + 1 < m.rows()) {
            out += '\n';
        }
    }
    return out;
}

std::string format_vector(const std::vector<GaussianRational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += format_scalar(v[i]);
    }
    out += ")";
    return out;
}

}  // namespace opalg
