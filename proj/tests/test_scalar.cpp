#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opalg/scalar.hpp"
#include "test_support.hpp"

using namespace opalg;
using opalg::testing::random_scalar;

namespace {

GaussianRational gr(long re_num, long re_den, long im_num, long im_den) {
    return {Rational(re_num, re_den), Rational(im_num, im_den)};
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
    Rational half(1, 2);
    Rational third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(Rational(2, 4) == half);
    CHECK(Rational(-3, -6) == half);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((half - half).is_zero());
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("gaussian rational field basics") {
    GaussianRational i = imaginary_unit();
    CHECK(i * i == GaussianRational(-1));
    CHECK(gr(1, 2, 0, 1) + gr(1, 3, 0, 1) == gr(5, 6, 0, 1));

    SUBCASE("x + 0 = x on random values") {
        SplitMix64 rng(7001);
        for (int k = 0; k < 100; ++k) {
            GaussianRational x = random_scalar(rng, 50, 20, true);
            CHECK(x + GaussianRational(0) == x);
        }
    }
}

TEST_CASE("reciprocal") {
    CHECK(GaussianRational(Rational(2, 3)).reciprocal() == GaussianRational(Rational(3, 2)));
    CHECK(gr(1, 1, 1, 1).reciprocal() == gr(1, 2, -1, 2));
    CHECK_THROWS_AS(GaussianRational(0).reciprocal(), std::domain_error);

    SUBCASE("a * invert(a) = 1 on random nonzero values") {
        SplitMix64 rng(7002);
        for (int k = 0; k < 200; ++k) {
            GaussianRational x = random_scalar(rng, 9, 9, true);
            if (x.is_zero()) {
                continue;
            }
            CHECK((x * x.reciprocal()).is_one());
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(gr(1, 1, 2, 1).conj() == gr(1, 1, -2, 1));
    CHECK(GaussianRational(5).conj() == GaussianRational(5));

    SplitMix64 rng(7003);
    for (int k = 0; k < 100; ++k) {
        GaussianRational a = random_scalar(rng, 9, 5, true);
        GaussianRational b = random_scalar(rng, 9, 5, true);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.conj().conj() == a);
        GaussianRational norm = a * a.conj();
        CHECK(norm.is_real());
        CHECK(norm.re() >= Rational(0));
    }
}

TEST_CASE("canonical form survives arithmetic on big operands") {
    SplitMix64 rng(7006);
    auto big_rational = [&rng]() {
        mpz_class num = 0;
        mpz_class den = 0;
        for (int limb = 0; limb < 3; ++limb) {  // ~190-bit operands
            num = (num << 64) + mpz_class(rng.next());
            den = (den << 64) + mpz_class(rng.next());
        }
        if (rng.next() % 2 == 0) {
            num = -num;
        }
        return Rational(num, den + 1);
    };
    for (int k = 0; k < 50; ++k) {
        Rational a = big_rational();
        Rational b = big_rational();
        if (a.is_zero() || b.is_zero()) {
            continue;
        }
        for (const Rational& r : {a + b, a - b, a * b, a / b}) {
            CHECK(r.den() > 0);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
            CHECK(g == 1);
        }
        CHECK((a / a).num() == 1);
    }
}

TEST_CASE("field axioms on random triples") {
    SplitMix64 rng(7004);
    for (int k = 0; k < 100; ++k) {
        GaussianRational a = random_scalar(rng, 20, 9, true);
        GaussianRational b = random_scalar(rng, 20, 9, true);
        GaussianRational c = random_scalar(rng, 20, 9, true);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("parse_scalar accepts the entry grammar") {
    CHECK(parse_scalar("0") == GaussianRational(0));
    CHECK(parse_scalar("-3/2") == GaussianRational(Rational(-3, 2)));
    CHECK(parse_scalar("1/2+3/4i") == gr(1, 2, 3, 4));
    CHECK(parse_scalar("-2i") == gr(0, 1, -2, 1));
    CHECK(parse_scalar("5") == GaussianRational(5));
    CHECK(parse_scalar("1/2-3/4i") == gr(1, 2, -3, 4));
    CHECK(parse_scalar("1i") == imaginary_unit());
}

TEST_CASE("parse_scalar rejects malformed text with a position") {
    CHECK_THROWS_AS(parse_scalar("1//2"), ScalarParseError);
    try {
        parse_scalar("1//2");
    } catch (const ScalarParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_scalar(""), ScalarParseError);
    CHECK_THROWS_AS(parse_scalar("i"), ScalarParseError);
    CHECK_THROWS_AS(parse_scalar("1/2+"), ScalarParseError);
    CHECK_THROWS_AS(parse_scalar("1/2+3/4"), ScalarParseError);
    CHECK_THROWS_AS(parse_scalar("2 + 3i"), ScalarParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ScalarParseError);
    CHECK_THROWS_AS(parse_scalar("3ii"), ScalarParseError);
}

TEST_CASE("format/parse round-trip is the identity") {
    CHECK(format_scalar(gr(1, 2, 3, 4)) == "1/2+3/4i");
    CHECK(format_scalar(gr(0, 1, -2, 1)) == "-2i");
    CHECK(format_scalar(GaussianRational(0)) == "0");
    CHECK(format_scalar(gr(-3, 2, 0, 1)) == "-3/2");
    CHECK(format_scalar(gr(1, 2, -3, 4)) == "1/2-3/4i");

    SplitMix64 rng(7005);
    for (int k = 0; k < 200; ++k) {
        GaussianRational x = random_scalar(rng, 100, 30, k % 2 == 0);
        CHECK(parse_scalar(format_scalar(x)) == x);
    }
}
