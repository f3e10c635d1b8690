// Acceptance suite: one line per criterion, exit 0 iff everything passes.
#include "opalg/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "test_support.hpp"

using namespace opalg;
using namespace opalg::testing;

namespace {

int failures = 0;

void report(int number, const char* what, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, what);
    if (!ok) {
        ++failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1: the built-in refutation suite, exact and fast ----------

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;

    for (const RefutationReport& r : verify_all()) {
        ok = ok && r.all_pass();
    }

    // The named verdicts, recomputed directly at zero tolerance.
    {
        auto [t, s] = example1();
        ok = ok && ep_check(t) && ep_check(t + s) && !ep_check(s);
    }
    {
        auto [t, s] = example2();
        Operator gram_sum = t * adjoint(t) + s * adjoint(s);
        ok = ok && gram_sum == Operator::cofinite(Matrix::from_int_rows(
                                   {{4, 0, 0}, {0, 0, 0}, {0, 0, 2}}));
        ok = ok && !subspace_eq(range(t + s), subspace_sum(range(t), range(s)));
        ok = ok && !subspace_eq(range(t + s),
                                subspace_sum(range(t * adjoint(t)), range(s * adjoint(s))));

        Operator one = Operator::finite(Matrix::from_int_rows({{1}}));
        ok = ok && !subspace_eq(range(block_column_pair(one, one)),
                                subspace_direct_sum(range(one), range(one)));
        Operator m = Operator::finite(t.block_padded(3));
        Operator n = Operator::finite(s.block_padded(3));
        ok = ok && !subspace_eq(range(block_column_pair(m, n)),
                                subspace_direct_sum(range(m), range(n)));
    }

    double elapsed = seconds_since(start);
    ok = ok && elapsed < 1.0;
    std::printf("        refutation suite took %.3fs (budget 1s)\n", elapsed);
    report(1, "refutation suite reproduces every stated verdict exactly", ok);
}

// ---- criterion 2: Penrose equations on 500 random matrices ---------------

void criterion2() {
    SplitMix64 rng(0xacce9701);
    bool ok = true;
    for (int k = 0; k < 500 && ok; ++k) {
        std::size_t rows = 1 + static_cast<std::size_t>(rng.int_between(0, 4));
        std::size_t cols = 1 + static_cast<std::size_t>(rng.int_between(0, 4));
        Matrix m = random_matrix(rng, rows, cols, 3, 3, k % 2 == 0);
        Matrix x = pinv(m);
        Matrix mx = m * x;
        Matrix xm = x * m;
        ok = ok && mx * m == m && xm * x == x && mx.conj_transpose() == mx &&
             xm.conj_transpose() == xm;
        ok = ok && pinv(x) == m;
        ok = ok && pinv(m.conj_transpose()) == x.conj_transpose();
    }
    report(2, "pinv satisfies the four Penrose equations exactly on 500 random matrices", ok);
}

// ---- criterion 3: EP <=> commuting pseudoinverse on 500 operators --------

void criterion3() {
    SplitMix64 rng(0xacce9702);
    bool ok = true;
    for (int k = 0; k < 500 && ok; ++k) {
        Carrier carrier = k % 2 == 0 ? Carrier::finite : Carrier::cofinite;
        std::size_t n = 1 + static_cast<std::size_t>(rng.int_between(0, 3));
        Operator t = random_operator(rng, carrier, n, 2);
        Operator dagger = op_pinv(t);
        ok = ok && ep_check(t) == (t * dagger == dagger * t);
    }
    report(3, "ep_check agrees with the commuting-pseudoinverse oracle on 500 operators", ok);
}

// ---- criterion 4: rank and range laws on 500 cases -----------------------

void criterion4() {
    SplitMix64 rng(0xacce9703);
    bool ok = true;
    for (int k = 0; k < 500 && ok; ++k) {
        std::size_t rows = 1 + static_cast<std::size_t>(rng.int_between(0, 3));
        std::size_t cols = 1 + static_cast<std::size_t>(rng.int_between(0, 3));
        Matrix m = random_matrix(rng, rows, cols, 2, 2, k % 2 == 1);

        ok = ok && column_space_basis(m).rows() + null_space_basis(m).rows() == m.cols();
        ok = ok && rank(m) == rank(m.conj_transpose());

        Matrix p = random_invertible(rng, cols, 2);
        ok = ok && column_space_basis(m) == column_space_basis(m * p);

        bool tail = k % 3 == 0;
        Subspace a = Subspace::cofinite(3, random_int_matrix(rng, 2, 3, 2), tail);
        Subspace b = Subspace::cofinite(3, random_int_matrix(rng, 1, 3, 2), tail);
        Subspace c = Subspace::cofinite(3, random_int_matrix(rng, 2, 3, 2), false);
        ok = ok && subspace_eq(subspace_sum(a, a), a);
        ok = ok && subspace_eq(subspace_sum(a, b), subspace_sum(b, a));
        ok = ok && subspace_eq(subspace_sum(subspace_sum(a, b), c),
                               subspace_sum(a, subspace_sum(b, c)));
    }
    report(4, "rank-nullity, adjoint rank, range invariance and sum laws hold on 500 cases", ok);
}

// ---- criterion 5: cofinite ranges/kernels vs the truncation oracle -------

void criterion5() {
    SplitMix64 rng(0xacce9704);
    const std::size_t extra = 3;
    bool ok = true;
    for (int k = 0; k < 200 && ok; ++k) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.int_between(0, 3));
        Operator t = random_operator(rng, Carrier::cofinite, n, 2);
        std::size_t window = t.dim() + extra;
        Matrix truncated = t.block_padded(window);
        ok = ok && range(t).materialized_rows(window) == column_space_basis(truncated);
        ok = ok && kernel(t).materialized_rows(window) == null_space_basis(truncated);
    }
    report(5, "block-computed ranges/kernels match the truncated brute force on 200 operators",
           ok);
}

// ---- criterion 6: the falsifier refutes both theorem-style claims --------

void criterion6() {
    bool ok = true;
    const char* claims[2] = {
        "vars T,S; assume ep(T), ep(T+S); show ep(S)",
        "vars T,S; assume ep(T), ep(S); show raneq(ran(T+S), ran(T)+ran(S))",
    };
    for (const char* text : claims) {
        auto start = std::chrono::steady_clock::now();
        Claim claim = parse_claim(text);
        FalsifyConfig cfg;  // dim 3, bound 2, 10^4 trials, documented default seed
        auto witness = falsify(claim, cfg);
        double elapsed = seconds_since(start);
        bool found = witness.has_value() && revalidate(claim, *witness);
        bool fast = elapsed < 30.0;
        std::printf("        falsified within trial %zu in %.3fs: %s\n",
                    witness ? witness->trial : cfg.trials, elapsed, text);
        ok = ok && found && fast;
    }
    report(6, "falsify refutes both theorem-style claims at seed 42 with valid certificates",
           ok);
}

// ---- criterion 7: no false positives on a true identity ------------------

void criterion7() {
    Claim claim = parse_claim("vars T; show raneq(ran(T'), ran(T'*T))");
    bool ok = true;

    // Exhaustive dim-2 search over entries in {-1, 0, 1}.
    long e[4];
    for (e[0] = -1; e[0] <= 1; ++e[0]) {
        for (e[1] = -1; e[1] <= 1; ++e[1]) {
            for (e[2] = -1; e[2] <= 1; ++e[2]) {
                for (e[3] = -1; e[3] <= 1; ++e[3]) {
                    Matrix m = Matrix::from_int_rows({{e[0], e[1]}, {e[2], e[3]}});
                    ClaimEval ev =
                        eval_claim(claim, Assignment{{"T", Operator::finite(m)}});
                    ok = ok && ev.conclusion_holds;
                }
            }
        }
    }

    FalsifyConfig cfg;
    cfg.dim = 2;
    cfg.entry_bound = 1;
    cfg.trials = 2000;
    ok = ok && !falsify(claim, cfg).has_value();
    report(7, "raneq(ran(T'), ran(T'*T)) survives exhaustive dim-2 search over {-1,0,1}", ok);
}

// ---- criterion 8: byte-identical machine output ---------------------------

void criterion8() {
    bool ok = true;

    ok = ok && cmd_verify_paper(OutputFormat::machine).output ==
                   cmd_verify_paper(OutputFormat::machine).output;

    const std::string path = "acceptance_operator.json";
    {
        std::ofstream out(path);
        out << R"({"kind": "cofinite", "block": [["1", "0", "-1"], ["0", "0", "0"], ["0", "0", "1"]]})";
    }
    ok = ok && cmd_ep_check(path, OutputFormat::machine).output ==
                   cmd_ep_check(path, OutputFormat::machine).output;
    ok = ok && cmd_pinv(path, OutputFormat::machine).output ==
                   cmd_pinv(path, OutputFormat::machine).output;
    std::remove(path.c_str());

    FalsifyOptions opts;
    opts.claim_text = "vars T,S; assume ep(T), ep(S); show raneq(ran(T+S), ran(T)+ran(S))";
    opts.format = OutputFormat::machine;
    CommandResult first = cmd_falsify(opts);
    CommandResult second = cmd_falsify(opts);
    ok = ok && first.exit_code == 1 && second.exit_code == 1 && first.output == second.output;

    report(8, "repeated runs with identical inputs and seed emit byte-identical machine output",
           ok);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
