#include "olab/neutrality.hpp"

namespace olab {

int distinguishable_count(std::int64_t n, double z) {
    const NeutralityTest test{z};
    int count = 1;
    FitnessEstimate prev{0, n};
    for (std::int64_t k = 1; k <= n; ++k) {
        const FitnessEstimate cand{k, n};
        if (!test.is_neutral(prev, cand)) {
            ++count;
            prev = cand;
        }
    }
    return count;
}

}  // namespace olab
