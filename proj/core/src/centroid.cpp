#include "olab/centroid.hpp"

#include <cmath>

namespace olab {

Centroid centroid_of(std::span<const RuleTable> rules) {
    Centroid c;
    if (rules.empty()) return c;
    for (int i = 0; i < RuleTable::kBits; ++i) {
        int ones = 0;
        for (const auto& r : rules) ones += r.get(i);
        c.freqs[i] = static_cast<double>(ones) / static_cast<double>(rules.size());
    }
    return c;
}

double euclid_to_centroid(const RuleTable& rule, const Centroid& c) {
    double sum = 0.0;
    for (int i = 0; i < RuleTable::kBits; ++i) {
        const double d = (rule.get(i) ? 1.0 : 0.0) - c.freqs[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

double l1_to_centroid(const RuleTable& rule, const Centroid& c) {
    double sum = 0.0;
    for (int i = 0; i < RuleTable::kBits; ++i)
        sum += std::abs((rule.get(i) ? 1.0 : 0.0) - c.freqs[i]);
    return sum;
}

std::map<double, int> frequency_histogram(const Centroid& c) {
    std::map<double, int> hist;
    for (double f : c.freqs) ++hist[f];
    return hist;
}

}  // namespace olab
