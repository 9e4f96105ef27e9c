#pragma once

#include <cmath>
#include <cstdint>

namespace olab {

// Success count over Bernoulli trials; the stochastic fitness of a rule.
struct FitnessEstimate {
    std::int64_t successes = 0;
    std::int64_t trials = 0;

    double value() const { return trials > 0 ? static_cast<double>(successes) / trials : 0.0; }

    double std_error() const {
        if (trials <= 0) return 0.0;
        const double f = value();
        return std::sqrt(f * (1.0 - f) / trials);
    }

    friend bool operator==(const FitnessEstimate&, const FitnessEstimate&) = default;
};

// Pools two estimates taken on disjoint samples of the same rule.
inline FitnessEstimate cumulative_update(const FitnessEstimate& acc, const FitnessEstimate& fresh) {
    return {acc.successes + fresh.successes, acc.trials + fresh.trials};
}

}  // namespace olab
