#pragma once

#include "opalg/linalg.hpp"
#include "opalg/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace opalg {

/// Finite: an operator on C^n. Cofinite: an operator on l2 acting as the
/// stored block on coordinates 1..n and as the identity on every later
/// coordinate (block (+) I).
enum class Carrier { finite, cofinite };

const char* carrier_name(Carrier c);

/// An exactly represented operator. Cofinite operators are kept in canonical
/// minimal form: any trailing coordinates on which the block already acts as
/// the identity are folded into the tail, so equality is structural.
///
/// Composite operations on cofinite operators are taken relative to the
/// identity background: the blocks combine and the tail stays the identity.
/// Ranges, kernels and EP verdicts never depend on that tail convention.
class Operator {
public:
    static Operator finite(Matrix block);    // square, n >= 1
    static Operator cofinite(Matrix block);  // square; trimmed, so dim() may shrink

    Carrier carrier() const { return carrier_; }
    std::size_t dim() const { return block_.rows(); }
    const Matrix& block() const { return block_; }

    /// The block extended to window m; cofinite pads with the identity,
    /// finite requires m == dim().
    Matrix block_padded(std::size_t m) const;

    bool is_identity() const;

    /// Action on an explicit coordinate prefix. Finite: xs.size() == dim().
    /// Cofinite: xs.size() >= dim(); coordinates beyond xs are unchanged by
    /// definition, so the returned prefix has xs.size() entries.
    std::vector<GaussianRational> apply(const std::vector<GaussianRational>& xs) const;

    friend bool operator==(const Operator& a, const Operator& b) {
        return a.carrier_ == b.carrier_ && a.block_ == b.block_;
    }
    friend bool operator!=(const Operator& a, const Operator& b) { return !(a == b); }

private:
    Operator(Carrier carrier, Matrix block) : carrier_(carrier), block_(std::move(block)) {}

    Carrier carrier_;
    Matrix block_;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);  // composition
Operator adjoint(const Operator& t);
Operator scale(const GaussianRational& c, const Operator& t);

Operator op_identity(Carrier carrier, std::size_t n);
Operator op_zero(Carrier carrier, std::size_t n);

/// Moore-Penrose inverse at the operator level: pinv of the block, same
/// carrier (the identity tail is its own pseudoinverse).
Operator op_pinv(const Operator& t);

/// The 2n x 2n finite operator [[T, 0], [S, 0]] built from two finite
/// operators on C^n. Its range {(Tx, Sx)} generally differs from
/// range(T) (+) range(S).
Operator block_column_pair(const Operator& t, const Operator& s);

/// A closed subspace, canonically represented by the RREF basis of its
/// finite part. Three shapes arise:
///   - finite carrier: span(basis) inside C^n;
///   - cofinite carrier with tail: span(basis) (+) {all coordinates > n},
///     the shape of ranges of cofinite operators;
///   - cofinite carrier without tail: span(basis) alone inside l2, the
///     shape of kernels of cofinite operators (the identity tail is
///     injective, so kernels never meet the tail).
/// Canonical minimal window: with a tail, a basis vector e_n is absorbed
/// into the tail; without one, unused trailing coordinates are dropped.
class Subspace {
public:
    static Subspace finite(std::size_t n, const Matrix& span_rows);
    static Subspace cofinite(std::size_t n, const Matrix& span_rows, bool includes_tail);

    Carrier carrier() const { return carrier_; }
    bool includes_tail() const { return tail_; }
    std::size_t ambient_dim() const { return n_; }
    const Matrix& basis() const { return basis_; }

    /// Dimension of the finite part (the tail, when present, is infinite).
    std::size_t dim_finite() const { return basis_.rows(); }

    /// Basis rows zero-extended to window m, with tail coordinates in
    /// (n, m] materialized as explicit standard basis vectors.
    Matrix materialized_rows(std::size_t m) const;

    std::string describe() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.carrier_ == b.carrier_ && a.tail_ == b.tail_ && a.n_ == b.n_ &&
               a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(Carrier carrier, bool tail, std::size_t n, Matrix basis)
        : carrier_(carrier), tail_(tail), n_(n), basis_(std::move(basis)) {}

    Carrier carrier_;
    bool tail_;
    std::size_t n_;
    Matrix basis_;  // canonical RREF rows, dim_finite x n_
};

Subspace range(const Operator& t);
Subspace kernel(const Operator& t);

/// Closed span of the union; cofinite subspaces are padded to a common
/// window first.
Subspace subspace_sum(const Subspace& u, const Subspace& v);

/// Structural equality of canonical forms.
bool subspace_eq(const Subspace& u, const Subspace& v);

/// U <= V, decided by solving for each basis vector of U inside V.
bool subspace_leq(const Subspace& u, const Subspace& v);

/// External direct sum of two finite-carrier subspaces: U x V inside
/// C^(n+m), U on the first block of coordinates and V on the second.
Subspace subspace_direct_sum(const Subspace& u, const Subspace& v);

/// range(T) == range(T*). For the carriers of this workbench every range is
/// closed, so the same-range and same-closure readings coincide.
bool ep_check(const Operator& t);

}  // namespace opalg
