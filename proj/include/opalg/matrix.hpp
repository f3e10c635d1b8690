#pragma once

#include "opalg/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace opalg {

/// Dense rectangular matrix over GaussianRational, row-major. Zero-sized
/// dimensions are permitted so that rank-0 factorizations have a carrier
/// (an n x 0 by 0 x m product is the n x m zero matrix).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::vector<std::vector<GaussianRational>> rows);
    static Matrix from_int_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const GaussianRational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    GaussianRational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return at(r, c); }
    GaussianRational& operator()(std::size_t r, std::size_t c) { return at(r, c); }

    bool is_zero() const;
    bool is_identity() const;

    std::vector<GaussianRational> row(std::size_t r) const;
    std::vector<GaussianRational> col(std::size_t c) const;

    Matrix transpose() const;
    Matrix conj_transpose() const;

    void swap_rows(std::size_t a, std::size_t b);

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const GaussianRational& c, const Matrix& m);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> entries_;
};

/// [A | B] side by side; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);

/// A over B; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Block-diagonal [[A, 0], [0, B]].
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Matrix made of the selected columns of m, in the given order.
Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols);

/// Matrix with row r and column c removed.
Matrix delete_row_col(const Matrix& m, std::size_t r, std::size_t c);

std::vector<GaussianRational> mat_vec(const Matrix& m, const std::vector<GaussianRational>& x);

/// Aligned multi-line rendering: one "[ a  b  c ]" line per row.
std::string format_matrix(const Matrix& m, const std::string& indent = "");

/// Single-line rendering of a coordinate vector: "(a, b, c)".
std::string format_vector(const std::vector<GaussianRational>& v);

}  // namespace opalg
