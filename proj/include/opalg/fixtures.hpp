#pragma once

#include "opalg/operator.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace opalg {

/// Where an expected verdict comes from: `asserted` verdicts are the stated
/// conclusions the fixture set encodes; `derived` verdicts were established
/// independently by exact computation.
enum class Provenance { asserted, derived };

const char* provenance_name(Provenance p);

struct ReportClaim {
    std::string description;
    bool expected;
    Provenance provenance;
    bool computed;
    bool pass;  // computed == expected
};

/// Outcome of replaying one fixture's claim set. Every computed verdict is
/// produced by operator-level computation at report time, never hard-coded;
/// rendering is deterministic.
struct RefutationReport {
    std::string name;
    std::vector<ReportClaim> claims;
    std::vector<std::string> notes;

    bool all_pass() const;
    std::size_t passed() const;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// The first counterexample pair: T(x) = (x1, x2, x2+x3, tail) and
/// S(x) = (x1+x2, 0, 0, tail), both cofinite with window 3.
std::pair<Operator, Operator> example1();

/// The second counterexample pair: T(x) = (x1−x3, 0, x3, tail) and
/// S(x) = (x3−x1, 0, x3, tail), both cofinite with window 3.
std::pair<Operator, Operator> example2();

/// EP verdicts for example 1: T and T+S are EP, S is not.
RefutationReport verify_example1();

/// Example 2: EP verdicts, the TT'+SS' action, and the two range-sum
/// inequalities ran(T+S) != ran(T)+ran(S) and ran(T+S) != ran(TT')+ran(SS').
RefutationReport verify_example2();

/// The block operator A = [[M,0],[N,0]]: ran(A) = ran(M) (+) ran(N) fails on
/// the 1x1 instance M = N = [1] and on the example-2 blocks, while equality
/// does hold for M = I, N = 0 — the identity is not a law.
RefutationReport remark_demo();

/// All three reports, in the order above.
std::vector<RefutationReport> verify_all();

}  // namespace opalg
