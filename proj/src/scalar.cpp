#include "opalg/scalar.hpp"

#include <cctype>
#include <utility>

namespace opalg {

namespace {

mpq_class make_canonical(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    mpq_class q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(long num, long den) : q_(make_canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(mpz_class num, mpz_class den) : q_(make_canonical(std::move(num), std::move(den))) {}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    return Rational(mpq_class(1) / q_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by zero");
    }
    return Rational(a.q_ / b.q_);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

GaussianRational GaussianRational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    Rational n = norm2();
    return {re_ / n, -im_ / n};
}

GaussianRational imaginary_unit() {
    return {Rational(0), Rational(1)};
}

namespace {

// Cursor over scalar text; all errors carry the current byte offset.
struct ScalarCursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) const { throw ScalarParseError(what, pos); }

    mpz_class digits() {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected digits");
        }
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos;
        }
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    // real/imag := ['-'] digits ['/' digits]
    Rational rational_part() {
        bool negative = false;
        if (!done() && peek() == '-') {
            negative = true;
            ++pos;
        }
        mpz_class num = digits();
        mpz_class den = 1;
        if (!done() && peek() == '/') {
            ++pos;
            std::size_t den_pos = pos;
            den = digits();
            if (sgn(den) == 0) {
                throw ScalarParseError("zero denominator", den_pos);
            }
        }
        if (negative) {
            num = -num;
        }
        return {std::move(num), std::move(den)};
    }
};

}  // namespace

GaussianRational parse_scalar(std::string_view text) {
    ScalarCursor cur{text};
    if (cur.done()) {
        cur.fail("empty scalar");
    }
    Rational first = cur.rational_part();
    if (cur.done()) {
        return {first};
    }
    char c = cur.peek();
    if (c == 'i') {
        ++cur.pos;
        if (!cur.done()) {
            cur.fail("trailing characters after scalar");
        }
        return {Rational(0), first};
    }
    if (c != '+' && c != '-') {
        cur.fail("expected '+', '-' or 'i'");
    }
    ++cur.pos;
    Rational second = cur.rational_part();
    if (cur.done() || cur.peek() != 'i') {
        cur.fail("expected 'i' after imaginary part");
    }
    ++cur.pos;
    if (!cur.done()) {
        cur.fail("trailing characters after scalar");
    }
    if (c == '-') {
        second = -second;
    }
    return {first, second};
}

std::string format_scalar(const GaussianRational& x) {
    if (x.im().is_zero()) {
        return x.re().str();
    }
    if (x.re().is_zero()) {
        return x.im().str() + "i";
    }
    std::string out = x.re().str();
    out += x.im().sign() < 0 ? '-' : '+';
    out += x.im().abs().str();
    out += 'i';
    return out;
}

}  // namespace opalg
