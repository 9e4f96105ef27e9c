#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "olab/fitness.hpp"
#include "olab/lattice.hpp"
#include "olab/rule.hpp"

namespace olab {

inline constexpr int kDefaultMaxSteps = 2 * kDefaultLattice;  // 298

enum class Outcome : std::uint8_t { Unresolved = 0, AllZeros = 1, AllOnes = 2 };

// One synchronous update of the whole ring.
LatticeState step(const RuleTable& rule, const LatticeState& state);

// Runs the CA until a uniform configuration appears (the initial
// configuration counts as step 0), a non-uniform fixed point is reached, or
// max_steps updates have been applied.
Outcome classify(const RuleTable& rule, const LatticeState& ic, int max_steps = kDefaultMaxSteps);

// Seeded binomial(1/2) sample of initial configurations. IC number i is a
// pure function of (seed, i), so any batching or thread count sees the same
// bits.
struct IcSample {
    std::uint64_t seed = 0;
    int count = 0;
    int lattice = kDefaultLattice;
};

LatticeState make_ic(const IcSample& sample, int index);

// Batched classification. The implementation is bit-sliced: blocks of up to
// 512 ICs advance in lockstep, one bit lane per IC; blocks fan out across
// threads. Results are identical to per-IC classify().
std::vector<Outcome> classify_sample(const RuleTable& rule, const IcSample& sample,
                                     int max_steps = kDefaultMaxSteps, int threads = 0);
std::vector<Outcome> classify_states(const RuleTable& rule, std::span<const LatticeState> ics,
                                     int max_steps = kDefaultMaxSteps, int threads = 0);

// Fraction of ICs classified to the majority side of their initial density.
// Unresolved counts as incorrect.
FitnessEstimate standard_performance(const RuleTable& rule, const IcSample& sample,
                                     int max_steps = kDefaultMaxSteps, int threads = 0);
FitnessEstimate evaluate_states(const RuleTable& rule, std::span<const LatticeState> ics,
                                int max_steps = kDefaultMaxSteps, int threads = 0);

}  // namespace olab
