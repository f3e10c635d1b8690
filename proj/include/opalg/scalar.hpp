#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opalg {

/// Thrown on malformed scalar text; `position` is the byte offset of the
/// offending character within the input.
class ScalarParseError : public std::runtime_error {
public:
    ScalarParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Exact arbitrary-precision rational, always in canonical form:
/// denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
/// Equality is therefore structural.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}  // NOLINT: implicit by design, enables integer literals
    Rational(long num, long den);
    Rational(mpz_class num, mpz_class den);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    Rational abs() const;

    /// Multiplicative inverse; throws std::domain_error on zero.
    Rational reciprocal() const;

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(-q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // kept canonical
};

/// Exact complex scalar a + b*i with rational parts. Closed under the field
/// operations and conjugation; the scalar field of every matrix and operator
/// in this project.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT: implicit by design
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_ == Rational(1) && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |x|^2 = re^2 + im^2, a nonnegative rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussianRational reciprocal() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.reciprocal();
    }
    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_;
    Rational im_;
};

/// The imaginary unit.
GaussianRational imaginary_unit();

/// Parses scalar text. Grammar (no whitespace inside a scalar):
///   scalar    := real | real SIGN imag 'i' | imag 'i'
///   real/imag := ['-'] digits ['/' digits]
/// Accepted forms include "0", "-3/2", "1/2+3/4i", "-2i".
/// Throws ScalarParseError on malformed input or a zero denominator.
GaussianRational parse_scalar(std::string_view text);

/// Canonical textual form; parse_scalar(format_scalar(x)) == x for all x.
std::string format_scalar(const GaussianRational& x);

}  // namespace opalg
