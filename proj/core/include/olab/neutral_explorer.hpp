#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "olab/ca_engine.hpp"
#include "olab/neutrality.hpp"
#include "olab/rule.hpp"

namespace olab {

struct WalkConfig {
    int ics = 10000;
    int max_steps = kDefaultMaxSteps;
    int threads = 0;
    bool instrument = true;  // evaluate all neighbors at every visited point
};

struct WalkPoint {
    RuleTable rule;
    FitnessEstimate fitness;
    int distance_to_start = 0;
    int neutral_degree = -1;                      // -1 when not instrumented
    std::vector<FitnessEstimate> neighbor_fitness;  // per flipped bit, instrumented only
};

// Walk that strictly increases Hamming distance from its start, stepping to
// the first one-bit neighbor (in random scan order) whose fitness is
// neutral with the start's. Visited points include the start; the walk
// length is points.size() - 1 and never exceeds 128.
struct NeutralWalk {
    enum class Termination { NoNeutralExtension, DistanceSaturated };

    std::vector<WalkPoint> points;
    Termination termination = Termination::NoNeutralExtension;
    std::uint64_t seed = 0;

    int length() const { return static_cast<int>(points.size()) - 1; }
};

NeutralWalk neutral_walk(const RuleTable& start, const WalkConfig& cfg, std::uint64_t seed);

// Count of one-bit neighbors statistically indistinguishable from the rule;
// restricted to the canonical free schema bits when olympus_only is set.
int neutral_degree(const RuleTable& rule, const WalkConfig& cfg, std::uint64_t seed,
                   bool olympus_only = false);

std::vector<double> degree_series(const NeutralWalk& walk);

// Average of the per-walk autocorrelation functions of the neutral-degree
// series, lag k averaged over the walks long enough to estimate it.
std::vector<double> neutral_degree_acf(std::span<const NeutralWalk> walks, int max_lag);

// Per visited point: cumulative count of never-before-seen neighbor fitness
// values on the k/n grid, and of those that non-neutrally improve on the
// start fitness.
struct InnovationTrace {
    std::vector<std::int64_t> cumulative_new;
    std::vector<std::int64_t> cumulative_fitter;
};

InnovationTrace innovation_trace(const NeutralWalk& walk, double z = 1.96);

// Least-squares fit of two disjoint linear pieces over y as a function of
// rank 1..n; the changepoint is the first rank of the upper piece, chosen by
// exhaustive scan.
struct TwoPieceFit {
    int changepoint = 0;
    double lower_slope = 0.0;
    double upper_slope = 0.0;
    double total_sse = 0.0;
};

TwoPieceFit two_piece_fit(std::span<const double> y);

// All 128 one-bit neighbor fitnesses sorted ascending, summarized by the
// changepoint of the best two-piece linear fit and the slope of the upper
// piece (per neighbor-index unit).
struct EvolvabilityHorizon {
    RuleTable rule;
    FitnessEstimate base;
    std::vector<FitnessEstimate> sorted_neighbors;
    int changepoint = 0;  // 1-based rank where the upper piece starts
    double tail_slope = 0.0;
};

EvolvabilityHorizon evolvability_horizon(const RuleTable& rule, const WalkConfig& cfg,
                                         std::uint64_t seed);

// Fitness change of flipping each table bit, averaged over a catalog of
// rules; sorted by ascending mean change.
struct BitEvolvability {
    int bit = 0;
    double mean_delta = 0.0;
    double sd_delta = 0.0;  // population standard deviation over the catalog
};

std::vector<BitEvolvability> per_bit_evolvability(std::span<const RuleTable> rules,
                                                  const WalkConfig& cfg, std::uint64_t seed);

}  // namespace olab
