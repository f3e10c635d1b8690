#pragma once

#include "opalg/claim.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace opalg {

/// SplitMix64: the fixed pseudorandom stream behind every search. Chosen
/// because the algorithm is fully specified by a 64-bit seed and a dozen
/// lines, so certificates replay bit-identically on any platform. Outputs
/// are pinned by tests against independently computed reference values.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) by rejection; bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform draw from the inclusive integer interval [lo, hi].
    long int_between(long lo, long hi);

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

struct FalsifyConfig {
    std::size_t dim = 3;
    long entry_bound = 2;
    std::size_t trials = 10000;
    std::uint64_t seed = kDefaultSeed;
    Carrier carrier = Carrier::finite;
};

/// A concrete assignment under which every premise holds and the conclusion
/// fails, together with the search metadata needed to reproduce it.
struct Counterexample {
    Assignment assignment;
    std::vector<bool> premise_verdicts;  // one per premise, all true
    bool conclusion_verdict = false;     // always false
    std::uint64_t seed = 0;
    std::size_t trial = 0;       // index of the generating trial
    std::size_t search_dim = 0;  // dimension the search ran at (pre-shrink)
    long entry_bound = 0;
    Carrier carrier = Carrier::finite;
};

/// Deterministic randomized search: trial t draws, for each declared
/// variable in order, a dim x dim matrix with integer entries uniform in
/// [-entry_bound, entry_bound] (row-major draw order). The first assignment
/// with all premises true and the conclusion false is shrunk and returned;
/// nullopt when the trial budget is exhausted.
std::optional<Counterexample> falsify(const Claim& c, const FalsifyConfig& cfg);

/// Greedy minimization preserving "premises hold and conclusion fails":
/// first delete matching coordinate pairs across all assigned operators,
/// then zero entries, then step entry numerators toward zero. Terminates at
/// a local minimum; never increases the dimension or the total numerator
/// magnitude.
Counterexample shrink(const Claim& c, const Counterexample& witness);

/// Re-evaluates the stored assignment; true iff it reproduces the evidence
/// (all premises hold, conclusion fails).
bool revalidate(const Claim& c, const Counterexample& witness);

}  // namespace opalg
