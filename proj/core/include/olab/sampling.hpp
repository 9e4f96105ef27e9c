#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "olab/ca_engine.hpp"
#include "olab/centroid.hpp"
#include "olab/fitness.hpp"
#include "olab/rule.hpp"

namespace olab {

enum class Space { Full, Olympus };

// Evaluation knobs shared by every sampling instrument.
struct EvalConfig {
    int ics = 10000;
    int max_steps = kDefaultMaxSteps;
    int threads = 0;
};

struct SamplePoint {
    RuleTable rule;
    FitnessEstimate fitness;
};

// Histogram of fitness values on the k/n success grid (bin width 1/n).
struct FitnessHistogram {
    std::int64_t trials_per_eval = 0;
    std::map<std::int64_t, std::int64_t> counts;  // successes -> occurrences
    std::int64_t total = 0;

    void add(const FitnessEstimate& e) {
        ++counts[e.successes];
        ++total;
    }
    double zero_fraction() const {
        if (total == 0) return 0.0;
        auto it = counts.find(0);
        return it == counts.end() ? 0.0 : static_cast<double>(it->second) / total;
    }
    double mass_in(double lo, double hi) const;  // inclusive fitness band
};

std::vector<SamplePoint> uniform_sample(Space space, int samples, const EvalConfig& eval,
                                        std::uint64_t seed);

FitnessHistogram histogram_of(std::span<const SamplePoint> points, std::int64_t trials_per_eval);

FitnessHistogram dos_uniform(Space space, int samples, const EvalConfig& eval, std::uint64_t seed);

// Metropolis-Hastings chain over uniformly proposed rules with acceptance
// min(1, f(proposal)/f(current)); a rejected proposal is redrawn, so the
// returned list holds accepted samples only. alpha(0, y) is taken as 1.
// Proposal fitnesses depend only on (seed, proposal index), so evaluation
// fans out across threads without changing the chain.
std::vector<SamplePoint> metropolis_hastings_sample(int samples, const EvalConfig& eval,
                                                    std::uint64_t seed, Space space = Space::Full);

// Per-bit independent Bernoulli draws from a centroid's frequencies.
std::vector<RuleTable> csample(int size, const Centroid& centroid, std::uint64_t seed);

// --- fitness-distance correlation -----------------------------------------

struct DistanceToRule {
    RuleTable anchor;
    std::string name;
};
struct DistanceToNearest {
    std::vector<RuleTable> anchors;
};
struct DistanceToCentroid {
    Centroid centroid;
};
using DistanceSpec = std::variant<DistanceToRule, DistanceToNearest, DistanceToCentroid>;

double distance_to(const RuleTable& rule, const DistanceSpec& spec);

// Pearson correlation between fitness and distance; throws
// DegenerateVariance when either side is constant.
double fdc(std::span<const double> fitness, std::span<const double> distance);
double fdc(std::span<const SamplePoint> points, const DistanceSpec& spec);

// --- fitness cloud / negative slope coefficient ---------------------------

enum class CloudOperator { OneBitFlip, OneBitFlipOlympus };

struct FitnessCloud {
    CloudOperator op = CloudOperator::OneBitFlip;
    std::vector<std::pair<double, double>> points;  // (parent, offspring)
};

// One offspring per parent by flipping one uniformly chosen bit (restricted
// to the free schema bits for the Olympus operator), evaluated on a fresh
// sample per offspring.
FitnessCloud fitness_cloud(std::span<const SamplePoint> parents, CloudOperator op,
                           const EvalConfig& eval, std::uint64_t seed);

struct NscSegment {
    double abscissa_mean = 0.0;  // M_i
    double ordinate_mean = 0.0;  // N_i
    std::int64_t occupancy = 0;
};

struct NscReport {
    std::vector<NscSegment> segments;
    std::vector<double> slopes;  // P_i between consecutive segments
    double nsc = 0.0;            // sum of negative slopes
};

// Equal-width bins over the abscissa range; bins below min_occupancy are
// merged rightward. Throws InsufficientData with fewer than 2 populated
// bins.
NscReport nsc(const FitnessCloud& cloud, int bins = 10, std::int64_t min_occupancy = 5);

}  // namespace olab
