#pragma once

#include <cstdint>

#include "olab/fitness.hpp"

namespace olab {

// Two-proportion z-test with unpooled variance; two estimates are neutral
// when their difference is within z standard errors. 1.96 fixes the 95%
// confidence level used throughout.
struct NeutralityTest {
    double z = 1.96;

    double threshold(const FitnessEstimate& a, const FitnessEstimate& b) const {
        const double va = a.std_error() * a.std_error();
        const double vb = b.std_error() * b.std_error();
        return z * std::sqrt(va + vb);
    }

    bool is_neutral(const FitnessEstimate& a, const FitnessEstimate& b) const {
        return std::abs(a.value() - b.value()) <= threshold(a, b);
    }
};

// Length of the greedy chain 0 = f0 < f1 < ... <= 1 on the 1/n success grid
// where consecutive estimates are pairwise non-neutral: the number of
// statistically distinguishable fitness values at sample size n.
int distinguishable_count(std::int64_t n, double z = 1.96);

}  // namespace olab
