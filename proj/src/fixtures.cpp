#include "opalg/fixtures.hpp"

#include <algorithm>

namespace opalg {

const char* provenance_name(Provenance p) {
    return p == Provenance::asserted ? "asserted" : "derived";
}

bool RefutationReport::all_pass() const {
    return passed() == claims.size();
}

std::size_t RefutationReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(claims.begin(), claims.end(), [](const ReportClaim& c) { return c.pass; }));
}

std::string RefutationReport::to_text() const {
    std::string out = "== " + name + " ==\n";
    for (const ReportClaim& c : claims) {
        out += c.pass ? "[pass] " : "[FAIL] ";
        out += c.description;
        out += ": expected ";
        out += c.expected ? "true" : "false";
        out += " (";
        out += provenance_name(c.provenance);
        out += "), computed ";
        out += c.computed ? "true" : "false";
        out += "\n";
    }
    for (const std::string& n : notes) {
        out += "note: " + n + "\n";
    }
    out += "result: " + std::to_string(passed()) + "/" + std::to_string(claims.size()) + " pass\n";
    return out;
}

nlohmann::json RefutationReport::to_json() const {
    nlohmann::json claims_json = nlohmann::json::array();
    for (const ReportClaim& c : claims) {
        claims_json.push_back({
            {"description", c.description},
            {"expected", c.expected},
            {"provenance", provenance_name(c.provenance)},
            {"computed", c.computed},
            {"pass", c.pass},
        });
    }
    return {
        {"name", name},
        {"claims", claims_json},
        {"notes", notes},
        {"passed", passed()},
        {"total", claims.size()},
        {"all_pass", all_pass()},
    };
}

namespace {

ReportClaim check(std::string description, bool expected, Provenance prov, bool computed) {
    return {std::move(description), expected, prov, computed, computed == expected};
}

}  // namespace

std::pair<Operator, Operator> example1() {
    // T(x) = (x1, x2, x2 + x3, tail)
    Operator t = Operator::cofinite(Matrix::from_int_rows({
        {1, 0, 0},
        {0, 1, 0},
        {0, 1, 1},
    }));
    // S(x) = (x1 + x2, 0, 0, tail)
    Operator s = Operator::cofinite(Matrix::from_int_rows({
        {1, 1, 0},
        {0, 0, 0},
        {0, 0, 0},
    }));
    return {t, s};
}

std::pair<Operator, Operator> example2() {
    // T(x) = (x1 - x3, 0, x3, tail)
    Operator t = Operator::cofinite(Matrix::from_int_rows({
        {1, 0, -1},
        {0, 0, 0},
        {0, 0, 1},
    }));
    // S(x) = (x3 - x1, 0, x3, tail)
    Operator s = Operator::cofinite(Matrix::from_int_rows({
        {-1, 0, 1},
        {0, 0, 0},
        {0, 0, 1},
    }));
    return {t, s};
}

RefutationReport verify_example1() {
    auto [t, s] = example1();
    RefutationReport report;
    report.name = "example1";
    report.claims = {
        check("ep(T)", true, Provenance::asserted, ep_check(t)),
        check("ep(T+S)", true, Provenance::asserted, ep_check(t + s)),
        check("ep(S)", false, Provenance::asserted, ep_check(s)),
    };
    return report;
}

RefutationReport verify_example2() {
    auto [t, s] = example2();
    Operator t_plus_s = t + s;
    Operator gram_sum = t * adjoint(t) + s * adjoint(s);  // TT' + SS'
    Operator stated_gram_action = Operator::cofinite(Matrix::from_int_rows({
        {4, 0, 0},
        {0, 0, 0},
        {0, 0, 2},
    }));
    Subspace ran_sum = subspace_sum(range(t), range(s));
    Subspace ran_gram_sum = subspace_sum(range(t * adjoint(t)), range(s * adjoint(s)));

    RefutationReport report;
    report.name = "example2";
    report.claims = {
        check("ep(T)", true, Provenance::derived, ep_check(t)),
        check("ep(S)", true, Provenance::derived, ep_check(s)),
        check("TT'+SS' acts as (4x1, 0, 2x3, tail)", true, Provenance::asserted,
              gram_sum == stated_gram_action),
        check("raneq(ran(T+S), ran(T)+ran(S))", false, Provenance::asserted,
              subspace_eq(range(t_plus_s), ran_sum)),
        check("raneq(ran(T+S), ran(TT')+ran(SS'))", false, Provenance::asserted,
              subspace_eq(range(t_plus_s), ran_gram_sum)),
        check("ransub(ran(T+S), ran(T)+ran(S))", true, Provenance::derived,
              subspace_leq(range(t_plus_s), ran_sum)),
        check("window-3 ranks: rank(T+S) = 1, rank[T | S] = 2", true, Provenance::derived,
              rank(t_plus_s.block_padded(3)) == 1 &&
                  rank(hstack(t.block_padded(3), s.block_padded(3))) == 2),
    };
    report.notes = {
        "the stated EP verdicts for this pair are self-contradictory about S; "
        "both ep(T) and ep(S) compute to true and are reported as derived",
        "the stated T+S action lists x3 in the third coordinate; the exact block sum "
        "acts as (0, 0, 2*x3, tail) — same range, so every verdict is unaffected",
    };
    return report;
}

RefutationReport remark_demo() {
    RefutationReport report;
    report.name = "block-column-pair";

    // 1x1 instance M = N = [1]: ran(A) is the diagonal of C^2.
    Operator m1 = Operator::finite(Matrix::from_int_rows({{1}}));
    Operator a1 = block_column_pair(m1, m1);
    Subspace direct1 = subspace_direct_sum(range(m1), range(m1));
    report.claims.push_back(check("M=N=[1]: raneq(ran(A), ran(M) (+) ran(N))", false,
                                  Provenance::derived, subspace_eq(range(a1), direct1)));
    report.claims.push_back(check("M=N=[1]: dim ran(A) = 1, dim(ran(M) (+) ran(N)) = 2", true,
                                  Provenance::derived,
                                  range(a1).dim_finite() == 1 && direct1.dim_finite() == 2));

    // M = I, N = 0: the equality can hold, so it is not refuted pointwise.
    Operator id2 = op_identity(Carrier::finite, 2);
    Operator zero2 = op_zero(Carrier::finite, 2);
    Operator a2 = block_column_pair(id2, zero2);
    Subspace direct2 = subspace_direct_sum(range(id2), range(zero2));
    report.claims.push_back(check("M=I, N=0: raneq(ran(A), ran(M) (+) ran(N))", true,
                                  Provenance::derived, subspace_eq(range(a2), direct2)));

    // The example-2 blocks, read as finite operators on C^3.
    auto [t, s] = example2();
    Operator m3 = Operator::finite(t.block_padded(3));
    Operator n3 = Operator::finite(s.block_padded(3));
    Operator a3 = block_column_pair(m3, n3);
    Subspace direct3 = subspace_direct_sum(range(m3), range(n3));
    report.claims.push_back(check("example2 blocks: raneq(ran(A), ran(M) (+) ran(N))", false,
                                  Provenance::derived, subspace_eq(range(a3), direct3)));
    report.claims.push_back(check("example2 blocks: dim ran(A) = 2, dim(ran(M) (+) ran(N)) = 4",
                                  true, Provenance::derived,
                                  range(a3).dim_finite() == 2 && direct3.dim_finite() == 4));
    return report;
}

std::vector<RefutationReport> verify_all() {
    return {verify_example1(), verify_example2(), remark_demo()};
}

}  // namespace opalg
