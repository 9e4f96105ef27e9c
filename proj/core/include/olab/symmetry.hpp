#pragma once

#include <vector>

#include "olab/rule.hpp"

namespace olab {

// 0/1 state-complement symmetry: entry i maps to the complement of entry
// 127-i. Involution; preserves majority-task performance when the ICs are
// complemented as well.
RuleTable s01(const RuleTable& rule);

// right/left reflection symmetry: entry i maps to the entry whose 7-bit
// neighborhood index is bit-reversed. Involution; the 16 palindromic
// neighborhoods are invariant.
RuleTable srl(const RuleTable& rule);

int rev7(int i);

// {x, s01(x), srl(x), s01(srl(x))} deduplicated, sorted by text order.
std::vector<RuleTable> symmetry_orbit(const RuleTable& rule);

}  // namespace olab
