#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opalg/falsifier.hpp"
#include "opalg/fixtures.hpp"

using namespace opalg;

namespace {

// Counts entries with a nonzero real or imaginary part.
std::size_t nonzero_entries(const Matrix& m) {
    std::size_t count = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m.at(r, c).is_zero()) {
                ++count;
            }
        }
    }
    return count;
}

mpz_class numerator_mass(const Matrix& m) {
    mpz_class total = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            total += abs(m.at(r, c).re().num()) + abs(m.at(r, c).im().num());
        }
    }
    return total;
}

mpz_class assignment_mass(const Assignment& a) {
    mpz_class total = 0;
    for (const auto& [name, op] : a) {
        total += numerator_mass(op.block());
    }
    return total;
}

}  // namespace

TEST_CASE("SplitMix64 outputs are pinned") {
    // Reference values computed independently from the published algorithm.
    SplitMix64 zero(0);
    CHECK(zero.next() == 0xe220a8397b1dcdafULL);
    CHECK(zero.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(zero.next() == 0x06c45d188009454fULL);

    SplitMix64 forty_two(42);
    CHECK(forty_two.next() == 0xbdd732262feb6e95ULL);
    CHECK(forty_two.next() == 0x28efe333b266f103ULL);

    SplitMix64 big(1234567);
    CHECK(big.next() == 0x599ed017fb08fc85ULL);
    CHECK(big.next() == 0x2c73f08458540fa5ULL);

    SUBCASE("bounded draws stay in range") {
        SplitMix64 rng(99);
        for (int k = 0; k < 1000; ++k) {
            long v = rng.int_between(-2, 2);
            CHECK(v >= -2);
            CHECK(v <= 2);
        }
        CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
        CHECK_THROWS_AS(rng.int_between(3, 1), std::invalid_argument);
    }
}

TEST_CASE("falsify finds a non-EP matrix for the premise-free ep claim") {
    Claim c = parse_claim("vars T; show ep(T)");
    FalsifyConfig cfg;
    cfg.dim = 2;
    cfg.trials = 500;
    auto found = falsify(c, cfg);
    REQUIRE(found.has_value());
    CHECK(revalidate(c, *found));

    // Shrinking must reach a minimal witness: dimension 2 with at most one
    // nonzero entry (every 1x1 matrix is EP, and [[0,1],[0,0]] shows one
    // off-diagonal entry suffices).
    const Operator& t = found->assignment.at("T");
    CHECK(t.dim() == 2);
    CHECK(nonzero_entries(t.block()) <= 1);
}

TEST_CASE("falsify is deterministic for a fixed config") {
    Claim c = parse_claim("vars T,S; assume ep(T), ep(T+S); show ep(S)");
    FalsifyConfig cfg;
    cfg.trials = 2000;
    auto first = falsify(c, cfg);
    auto second = falsify(c, cfg);
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK(first->trial == second->trial);
    CHECK(first->assignment.at("T") == second->assignment.at("T"));
    CHECK(first->assignment.at("S") == second->assignment.at("S"));

    SUBCASE("a different seed may move the witness but stays valid") {
        FalsifyConfig other = cfg;
        other.seed = 7;
        auto third = falsify(c, other);
        REQUIRE(third.has_value());
        CHECK(revalidate(c, *third));
    }
}

TEST_CASE("falsify returns nothing on a true identity") {
    // ran(T*) = ran(T*T) holds for every matrix.
    Claim c = parse_claim("vars T; show raneq(ran(T'), ran(T'*T))");
    FalsifyConfig cfg;
    cfg.dim = 2;
    cfg.entry_bound = 1;
    cfg.trials = 800;
    CHECK_FALSE(falsify(c, cfg).has_value());

    SUBCASE("exhaustive dim-2 search over entries in {-1,0,1} agrees") {
        long entries[4];
        std::size_t counterexamples = 0;
        for (entries[0] = -1; entries[0] <= 1; ++entries[0]) {
            for (entries[1] = -1; entries[1] <= 1; ++entries[1]) {
                for (entries[2] = -1; entries[2] <= 1; ++entries[2]) {
                    for (entries[3] = -1; entries[3] <= 1; ++entries[3]) {
                        Matrix m = Matrix::from_int_rows(
                            {{entries[0], entries[1]}, {entries[2], entries[3]}});
                        ClaimEval ev = eval_claim(c, Assignment{{"T", Operator::finite(m)}});
                        if (ev.premises_hold && !ev.conclusion_holds) {
                            ++counterexamples;
                        }
                    }
                }
            }
        }
        CHECK(counterexamples == 0);
    }
}

TEST_CASE("falsify respects the cofinite carrier") {
    Claim c = parse_claim("vars T,S; assume ep(T), ep(S); show raneq(ran(T+S), ran(T)+ran(S))");
    FalsifyConfig cfg;
    cfg.carrier = Carrier::cofinite;
    cfg.trials = 5000;
    auto found = falsify(c, cfg);
    REQUIRE(found.has_value());
    CHECK(found->carrier == Carrier::cofinite);
    CHECK(found->assignment.at("T").carrier() == Carrier::cofinite);
    CHECK(revalidate(c, *found));
}

TEST_CASE("falsify validates its configuration") {
    Claim c = parse_claim("vars T; show ep(T)");
    FalsifyConfig cfg;
    cfg.trials = 0;
    CHECK_THROWS_AS(falsify(c, cfg), std::invalid_argument);
    cfg.trials = 1;
    cfg.dim = 0;
    CHECK_THROWS_AS(falsify(c, cfg), std::invalid_argument);
}

TEST_CASE("shrink preserves validity and never grows the witness") {
    Claim c = parse_claim("vars T,S; assume ep(T), ep(S); show raneq(ran(T+S), ran(T)+ran(S))");

    // Hand-built dim-5 witness: the example-2 pair padded with two extra
    // identity coordinates, as finite operators.
    auto [t, s] = example2();
    Assignment a{{"T", Operator::finite(t.block_padded(5))},
                 {"S", Operator::finite(s.block_padded(5))}};
    Counterexample witness;
    witness.assignment = a;
    witness.carrier = Carrier::finite;
    witness.search_dim = 5;
    witness.entry_bound = 2;

    Counterexample shrunk = shrink(c, witness);
    CHECK(revalidate(c, shrunk));
    CHECK(shrunk.assignment.at("T").dim() <= 3);
    CHECK(shrunk.assignment.at("S").dim() == shrunk.assignment.at("T").dim());
    CHECK(assignment_mass(shrunk.assignment) <= assignment_mass(a));

    SUBCASE("shrink rejects a non-witness") {
        Counterexample bogus;
        bogus.assignment = Assignment{{"T", op_identity(Carrier::finite, 2)},
                                      {"S", op_identity(Carrier::finite, 2)}};
        bogus.carrier = Carrier::finite;
        CHECK_THROWS_AS(shrink(c, bogus), std::invalid_argument);
    }
}

TEST_CASE("counterexamples carry reproducible evidence") {
    Claim c = parse_claim("vars T,S; assume ep(T), ep(T+S); show ep(S)");
    FalsifyConfig cfg;
    cfg.trials = 5000;
    auto found = falsify(c, cfg);
    REQUIRE(found.has_value());
    CHECK(found->premise_verdicts == std::vector<bool>{true, true});
    CHECK_FALSE(found->conclusion_verdict);
    CHECK(found->seed == cfg.seed);
    CHECK(found->entry_bound == cfg.entry_bound);
    CHECK(revalidate(c, *found));

    // Tampering with the assignment invalidates the certificate: an identity
    // S is EP, so the conclusion no longer fails.
    Counterexample tampered = *found;
    std::size_t n = tampered.assignment.at("T").dim();
    tampered.assignment.at("S") = op_identity(Carrier::finite, n);
    CHECK_FALSE(revalidate(c, tampered));
}
