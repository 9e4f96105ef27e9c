#pragma once

#include <array>
#include <map>
#include <span>

#include "olab/rule.hpp"

namespace olab {

// Per-position frequency of bit value 1 over a set of rules.
struct Centroid {
    std::array<double, RuleTable::kBits> freqs{};
};

Centroid centroid_of(std::span<const RuleTable> rules);

// sqrt of summed squared coordinate differences in [0,1]^128
double euclid_to_centroid(const RuleTable& rule, const Centroid& c);

// summed absolute coordinate differences; for a uniform random rule the
// expectation is (number of free coordinates)/2 regardless of the centroid
double l1_to_centroid(const RuleTable& rule, const Centroid& c);

// frequency value -> number of positions holding it
std::map<double, int> frequency_histogram(const Centroid& c);

}  // namespace olab
