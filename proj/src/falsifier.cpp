#include "opalg/falsifier.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace opalg {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("SplitMix64::below: bound must be positive");
    }
    // Reject the incomplete final block so every residue is equally likely.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t x = next();
    while (limit != std::numeric_limits<std::uint64_t>::max() && x > limit) {
        x = next();
    }
    return x % bound;
}

long SplitMix64::int_between(long lo, long hi) {
    if (lo > hi) {
        throw std::invalid_argument("SplitMix64::int_between: empty interval");
    }
    std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(below(width));
}

namespace {

Operator make_operator(Carrier carrier, Matrix block) {
    return carrier == Carrier::finite ? Operator::finite(std::move(block))
                                      : Operator::cofinite(std::move(block));
}

bool is_witness(const Claim& c, const Assignment& a) {
    ClaimEval ev = eval_claim(c, a);
    return ev.premises_hold && !ev.conclusion_holds;
}

// Ordered raw view of an assignment: blocks padded to one common window so
// coordinate deletion stays aligned across operators.
struct RawAssignment {
    std::vector<std::string> names;
    std::vector<Matrix> blocks;
    Carrier carrier;

    std::size_t dim() const { return blocks.empty() ? 0 : blocks.front().rows(); }

    Assignment to_assignment() const {
        Assignment a;
        for (std::size_t i = 0; i < names.size(); ++i) {
            a.emplace(names[i], make_operator(carrier, blocks[i]));
        }
        return a;
    }
};

RawAssignment raw_view(const Claim& c, const Assignment& a, Carrier carrier) {
    RawAssignment raw;
    raw.carrier = carrier;
    std::size_t m = 0;
    for (const std::string& v : c.variables) {
        m = std::max(m, a.at(v).dim());
    }
    if (carrier == Carrier::finite) {
        m = std::max<std::size_t>(m, 1);
    }
    for (const std::string& v : c.variables) {
        raw.names.push_back(v);
        raw.blocks.push_back(a.at(v).block_padded(m));
    }
    return raw;
}

bool raw_is_witness(const Claim& c, const RawAssignment& raw) {
    return is_witness(c, raw.to_assignment());
}

// One decrement of |numerator| with the denominator kept; canonicalization
// may reduce further, which only helps the measure.
Rational step_toward_zero(const Rational& r) {
    mpz_class num = r.num();
    num -= sgn(num);
    return {std::move(num), r.den()};
}

bool try_delete_coordinates(const Claim& c, RawAssignment& raw) {
    bool changed = false;
    std::size_t min_dim = raw.carrier == Carrier::finite ? 1 : 0;
    // Downward scan: indices below an accepted deletion are unaffected, and
    // the caller loops to a fixpoint anyway.
    for (std::size_t k = raw.dim(); k-- > 0;) {
        if (raw.dim() <= min_dim || k >= raw.dim()) {
            continue;
        }
        RawAssignment candidate = raw;
        for (Matrix& b : candidate.blocks) {
            b = delete_row_col(b, k, k);
        }
        if (raw_is_witness(c, candidate)) {
            raw = std::move(candidate);
            changed = true;
        }
    }
    return changed;
}

bool try_zero_entries(const Claim& c, RawAssignment& raw) {
    bool changed = false;
    for (std::size_t b = 0; b < raw.blocks.size(); ++b) {
        for (std::size_t r = 0; r < raw.dim(); ++r) {
            for (std::size_t col = 0; col < raw.dim(); ++col) {
                if (raw.blocks[b].at(r, col).is_zero()) {
                    continue;
                }
                RawAssignment candidate = raw;
                candidate.blocks[b].at(r, col) = GaussianRational(0);
                if (raw_is_witness(c, candidate)) {
                    raw = std::move(candidate);
                    changed = true;
                }
            }
        }
    }
    return changed;
}

// One decrement of one part of one entry; the entry is re-read on every
// attempt so consecutive accepted steps compound instead of undoing each
// other.
bool try_magnitude_step(const Claim& c, RawAssignment& raw, std::size_t b, std::size_t r,
                        std::size_t col, bool imaginary_part) {
    GaussianRational cur = raw.blocks[b].at(r, col);
    GaussianRational next = imaginary_part
                                ? GaussianRational{cur.re(), step_toward_zero(cur.im())}
                                : GaussianRational{step_toward_zero(cur.re()), cur.im()};
    if (next == cur) {
        return false;
    }
    RawAssignment candidate = raw;
    candidate.blocks[b].at(r, col) = next;
    if (!raw_is_witness(c, candidate)) {
        return false;
    }
    raw = std::move(candidate);
    return true;
}

bool try_shrink_magnitudes(const Claim& c, RawAssignment& raw) {
    bool changed = false;
    for (std::size_t b = 0; b < raw.blocks.size(); ++b) {
        for (std::size_t r = 0; r < raw.dim(); ++r) {
            for (std::size_t col = 0; col < raw.dim(); ++col) {
                changed |= try_magnitude_step(c, raw, b, r, col, false);
                changed |= try_magnitude_step(c, raw, b, r, col, true);
            }
        }
    }
    return changed;
}

void fill_evidence(const Claim& c, Counterexample& cex) {
    EvalContext ctx = eval_context(c, cex.assignment);
    cex.premise_verdicts.clear();
    for (const Predicate& p : c.premises) {
        cex.premise_verdicts.push_back(eval_predicate(p, cex.assignment, ctx));
    }
    cex.conclusion_verdict = eval_predicate(c.conclusion, cex.assignment, ctx);
}

}  // namespace

std::optional<Counterexample> falsify(const Claim& c, const FalsifyConfig& cfg) {
    if (cfg.trials < 1) {
        throw std::invalid_argument("falsify: trials must be at least 1");
    }
    if (cfg.dim < 1) {
        throw std::invalid_argument("falsify: dim must be at least 1");
    }
    if (cfg.entry_bound < 0) {
        throw std::invalid_argument("falsify: entry bound must be nonnegative");
    }
    SplitMix64 rng(cfg.seed);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        Assignment a;
        for (const std::string& v : c.variables) {
            Matrix block(cfg.dim, cfg.dim);
            for (std::size_t r = 0; r < cfg.dim; ++r) {
                for (std::size_t col = 0; col < cfg.dim; ++col) {
                    block.at(r, col) =
                        GaussianRational(rng.int_between(-cfg.entry_bound, cfg.entry_bound));
                }
            }
            a.emplace(v, make_operator(cfg.carrier, std::move(block)));
        }
        if (!is_witness(c, a)) {
            continue;
        }
        Counterexample cex;
        cex.assignment = std::move(a);
        cex.seed = cfg.seed;
        cex.trial = trial;
        cex.search_dim = cfg.dim;
        cex.entry_bound = cfg.entry_bound;
        cex.carrier = cfg.carrier;
        cex = shrink(c, cex);
        return cex;
    }
    return std::nullopt;
}

Counterexample shrink(const Claim& c, const Counterexample& witness) {
    RawAssignment raw = raw_view(c, witness.assignment, witness.carrier);
    if (!raw_is_witness(c, raw)) {
        throw std::invalid_argument("shrink: witness does not falsify the claim");
    }
    bool changed = true;
    while (changed) {
        changed = false;
        changed |= try_delete_coordinates(c, raw);
        changed |= try_zero_entries(c, raw);
        changed |= try_shrink_magnitudes(c, raw);
    }
    Counterexample out = witness;
    out.assignment = raw.to_assignment();
    fill_evidence(c, out);
    return out;
}

bool revalidate(const Claim& c, const Counterexample& witness) {
    ClaimEval ev{};
    try {
        ev = eval_claim(c, witness.assignment);
    } catch (const std::invalid_argument&) {
        return false;  // structurally unusable assignment cannot certify anything
    }
    if (!ev.premises_hold || ev.conclusion_holds) {
        return false;
    }
    if (witness.premise_verdicts.size() != c.premises.size()) {
        return false;
    }
    for (bool v : witness.premise_verdicts) {
        if (!v) {
            return false;
        }
    }
    return !witness.conclusion_verdict;
}

}  // namespace opalg
