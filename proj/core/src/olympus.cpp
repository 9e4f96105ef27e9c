#include "olab/olympus.hpp"

#include <string>

#include "olab/errors.hpp"
#include "olab/symmetry.hpp"

namespace olab {

Olympus::Olympus(Schema schema) : schema_(std::move(schema)), free_(schema_.free_positions()) {}

const Olympus& Olympus::canonical() {
    static const Olympus instance{[] {
        const auto rules = rules_of(blok_prime());
        return schema_of(rules);
    }()};
    return instance;
}

RuleTable Olympus::embed(const OlympusPoint& p) const {
    if (static_cast<int>(p.bits.size()) != dimension())
        throw DataError("olympus point has wrong dimension");
    RuleTable rule;
    for (int i = 0; i < RuleTable::kBits; ++i)
        if (schema_.at(i) == Sym::One) rule.set(i, true);
    for (std::size_t j = 0; j < p.bits.size(); ++j) rule.set(free_[j], p.bits[j] != 0);
    return rule;
}

OlympusPoint Olympus::project(const RuleTable& rule) const {
    const int violation = schema_.first_violation(rule);
    if (violation >= 0)
        throw MembershipError(violation, "rule violates fixed schema bit " + std::to_string(violation));
    OlympusPoint p;
    p.bits.resize(free_.size());
    for (std::size_t j = 0; j < free_.size(); ++j) p.bits[j] = rule.get(free_[j]) ? 1 : 0;
    return p;
}

OlympusPoint Olympus::random_point(Rng& rng) const {
    OlympusPoint p;
    p.bits.resize(free_.size());
    for (auto& b : p.bits) b = rng.coin() ? 1 : 0;
    return p;
}

RuleTable Olympus::flip_free_bit(const RuleTable& rule, int which) const {
    return rule.with_flipped(free_[which]);
}

BlokPrimeSelection select_blok_prime() {
    const auto& base = blok();
    std::vector<std::vector<RuleTable>> orbits;
    orbits.reserve(base.size());
    for (const auto& entry : base) orbits.push_back(symmetry_orbit(entry.rule));

    std::size_t combos = 1;
    for (const auto& orbit : orbits) combos *= orbit.size();

    auto joint_bits = [](const std::vector<RuleTable>& rules) {
        return schema_of(rules).fixed_count();
    };

    BlokPrimeSelection result;
    std::vector<RuleTable> current(base.size());
    for (std::size_t combo = 0; combo < combos; ++combo) {
        std::size_t rest = combo;
        for (std::size_t r = 0; r < orbits.size(); ++r) {
            current[r] = orbits[r][rest % orbits[r].size()];
            rest /= orbits[r].size();
        }
        const int joint = joint_bits(current);
        if (joint > result.joint_bits) {
            result.joint_bits = joint;
            result.maximizers.clear();
        }
        if (joint == result.joint_bits) result.maximizers.push_back(current);
    }

    if (result.joint_bits < 51)
        throw DataError("blok' selection: best representative set has only " +
                        std::to_string(result.joint_bits) + " joint bits");

    const auto published = rules_of(blok_prime());
    bool published_is_max = false;
    for (const auto& m : result.maximizers)
        if (m == published) published_is_max = true;
    if (!published_is_max)
        throw DataError("blok' selection: published catalog is not among the maximizers");

    result.rules = blok_prime();
    return result;
}

const Centroid& canonical_centroid() {
    static const Centroid c = centroid_of(rules_of(blok_prime()));
    return c;
}

}  // namespace olab
