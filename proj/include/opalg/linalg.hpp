#pragma once

#include "opalg/matrix.hpp"

#include <optional>
#include <vector>

namespace opalg {

struct RrefResult {
    Matrix r;                             // the unique reduced row-echelon form
    std::vector<std::size_t> pivot_cols;  // ascending
    std::size_t rank = 0;
};

/// Gauss-Jordan elimination over the exact scalar field. Pivot choice is the
/// first nonzero entry in column order, which makes the result deterministic;
/// no magnitude pivoting is needed in exact arithmetic.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Nonzero rows of rref(rows): the canonical basis of the row space. Two
/// spanning sets of the same subspace map to identical matrices.
Matrix row_space_basis(const Matrix& rows);

/// Canonical basis of {Mx}, one basis vector per row (each of length
/// m.rows()). Computed as the row-space basis of the transpose.
Matrix column_space_basis(const Matrix& m);

/// Canonical basis of {x : Mx = 0}, one basis vector per row. Row count is
/// always cols - rank.
Matrix null_space_basis(const Matrix& m);

struct FullRankFactorization {
    Matrix f;  // rows x rank, full column rank (the pivot columns of M)
    Matrix g;  // rank x cols, full row rank (the nonzero rows of rref(M))
};

/// M = F * G with r = rank(M). For r = 0 both factors are empty and the
/// product reconstitutes the zero matrix.
FullRankFactorization full_rank_factorization(const Matrix& m);

/// Exact inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Moore-Penrose pseudoinverse via the full-rank factorization:
/// pinv(M) = G* (F* M G*)^{-1} F*. Satisfies all four Penrose equations
/// exactly; pinv of a zero matrix is the zero matrix of transposed shape.
Matrix pinv(const Matrix& m);

/// Some x with Mx = b iff b lies in the column space, else nullopt.
/// Free variables are set to zero.
std::optional<std::vector<GaussianRational>> solve(const Matrix& m,
                                                   const std::vector<GaussianRational>& b);

/// Membership of a vector in the row space of `basis_rows`.
bool in_row_space(const Matrix& basis_rows, const std::vector<GaussianRational>& v);

}  // namespace opalg
