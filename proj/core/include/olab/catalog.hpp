#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "olab/rule.hpp"

namespace olab {

struct NamedRule {
    std::string name;
    RuleTable rule;
    double published_performance;
};

// The six best local optima known, in the published row order
// GKL, Das, Davis, ABK, Coe1, Coe2.
const std::vector<NamedRule>& blok();

// Their symmetry representatives chosen to maximize the number of joint
// bits: GKL, Das, Coe1 unchanged; Davis and ABK complemented; Coe2
// complemented and reflected.
const std::vector<NamedRule>& blok_prime();

// Published neutral-walk start rules: a random rule of performance 0.5004
// and a one-bit neighbor (performance 0.7645) of an evolved rule.
const RuleTable& walk_start_nn05();
const RuleTable& walk_start_nn076();

std::vector<RuleTable> rules_of(std::span<const NamedRule> catalog);

// Case-insensitive lookup across both catalogs plus the walk starts
// ("nn05", "nn076"); primed names ("coe2'" or "coe2p") hit blok_prime.
std::optional<RuleTable> find_named_rule(std::string_view name);

}  // namespace olab
