#include "olab/symmetry.hpp"

#include <algorithm>

namespace olab {

RuleTable s01(const RuleTable& rule) {
    RuleTable out;
    for (int i = 0; i < RuleTable::kBits; ++i) out.set(i, !rule.get(RuleTable::kBits - 1 - i));
    return out;
}

int rev7(int i) {
    int r = 0;
    for (int b = 0; b < 7; ++b) r |= ((i >> b) & 1) << (6 - b);
    return r;
}

RuleTable srl(const RuleTable& rule) {
    RuleTable out;
    for (int i = 0; i < RuleTable::kBits; ++i) out.set(i, rule.get(rev7(i)));
    return out;
}

std::vector<RuleTable> symmetry_orbit(const RuleTable& rule) {
    std::vector<RuleTable> orbit{rule, s01(rule), srl(rule), s01(srl(rule))};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

}  // namespace olab
