#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "opalg/fixtures.hpp"

using namespace opalg;

namespace {

std::vector<GaussianRational> ints(std::initializer_list<long> xs) {
    std::vector<GaussianRational> out;
    for (long x : xs) {
        out.emplace_back(x);
    }
    return out;
}

std::vector<GaussianRational> e1_prefix(std::size_t len) {
    std::vector<GaussianRational> v(len);
    v[0] = GaussianRational(1);
    return v;
}

}  // namespace

TEST_CASE("example1 operators act as displayed") {
    auto [t, s] = example1();
    CHECK(t.apply(ints({1, 1, 1, 1})) == ints({1, 1, 2, 1}));
    CHECK(s.apply(ints({1, 1, 1, 1})) == ints({2, 0, 0, 1}));
    CHECK(adjoint(s).apply(e1_prefix(4)) == ints({1, 1, 0, 0}));
    CHECK(adjoint(t).apply(ints({1, 1, 1, 1})) == ints({1, 2, 1, 1}));
}

TEST_CASE("example2 operators act as displayed") {
    auto [t, s] = example2();
    CHECK(t.apply(ints({1, 1, 1, 1})) == ints({0, 0, 1, 1}));
    CHECK(s.apply(ints({1, 1, 1, 1})) == ints({0, 0, 1, 1}));
    CHECK(adjoint(s).apply(e1_prefix(4)) == ints({-1, 0, 1, 0}));
    CHECK(adjoint(t).apply(e1_prefix(4)) == ints({1, 0, -1, 0}));

    // The exact block sum doubles the third coordinate; the range is
    // span{e3} (+) tail either way.
    CHECK((t + s).apply(ints({1, 1, 1, 1})) == ints({0, 0, 2, 1}));

    Operator gram_sum = t * adjoint(t) + s * adjoint(s);
    CHECK(gram_sum.apply(ints({1, 1, 1, 1})) == ints({4, 0, 2, 1}));
}

TEST_CASE("verify_example1 reproduces all three verdicts") {
    RefutationReport report = verify_example1();
    CHECK(report.claims.size() == 3);
    CHECK(report.all_pass());

    SUBCASE("ep verdicts are adjoint-symmetric") {
        auto [t, s] = example1();
        CHECK(ep_check(adjoint(t)) == ep_check(t));
        CHECK(ep_check(adjoint(s)) == ep_check(s));
        CHECK(ep_check(adjoint(t + s)) == ep_check(t + s));
    }
}

TEST_CASE("verify_example2 reproduces the range inequalities") {
    RefutationReport report = verify_example2();
    CHECK(report.all_pass());
    CHECK(report.claims.size() == 7);
    REQUIRE(report.notes.size() == 2);
    CHECK(report.notes[0].find("self-contradictory") != std::string::npos);

    auto [t, s] = example2();
    CHECK_FALSE(subspace_eq(range(t + s), subspace_sum(range(t), range(s))));
    CHECK_FALSE(subspace_eq(range(t + s),
                            subspace_sum(range(t * adjoint(t)), range(s * adjoint(s)))));
    CHECK(subspace_leq(range(t + s), subspace_sum(range(t), range(s))));
}

TEST_CASE("remark_demo exhibits failure and an equality instance") {
    RefutationReport report = remark_demo();
    CHECK(report.all_pass());
    CHECK(report.claims.size() == 5);
}

TEST_CASE("reports are deterministic") {
    RefutationReport a = verify_example2();
    RefutationReport b = verify_example2();
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json().dump() == b.to_json().dump());

    std::vector<RefutationReport> all = verify_all();
    CHECK(all.size() == 3);
    for (const RefutationReport& r : all) {
        CHECK(r.all_pass());
        // Computed verdicts come from live evaluation; text and json agree.
        CHECK(r.to_json().at("all_pass").get<bool>() == r.all_pass());
        CHECK(r.to_json().at("total").get<std::size_t>() == r.claims.size());
    }
}
