#pragma once

#include <cstdint>
#include <vector>

#include "olab/catalog.hpp"
#include "olab/centroid.hpp"
#include "olab/rng.hpp"
#include "olab/rule.hpp"
#include "olab/schema.hpp"

namespace olab {

// Coordinates of a rule inside a schema-defined subspace: one bit per star
// position, in ascending index order.
struct OlympusPoint {
    std::vector<std::uint8_t> bits;

    friend bool operator==(const OlympusPoint&, const OlympusPoint&) = default;
    friend auto operator<=>(const OlympusPoint&, const OlympusPoint&) = default;
};

// The subspace coordinate system around a schema. The canonical instance is
// built from the blok' catalog (51 fixed bits, dimension 77).
class Olympus {
public:
    explicit Olympus(Schema schema);

    static const Olympus& canonical();

    const Schema& schema() const { return schema_; }
    int dimension() const { return static_cast<int>(free_.size()); }
    const std::vector<int>& free_positions() const { return free_; }

    RuleTable embed(const OlympusPoint& p) const;
    OlympusPoint project(const RuleTable& rule) const;  // throws MembershipError
    bool contains(const RuleTable& rule) const { return schema_.matches(rule); }

    OlympusPoint random_point(Rng& rng) const;
    RuleTable random_rule(Rng& rng) const { return embed(random_point(rng)); }

    // flips free coordinate `which` (0-based among the stars)
    RuleTable flip_free_bit(const RuleTable& rule, int which) const;

private:
    Schema schema_;
    std::vector<int> free_;
};

// Exhaustive scan of the symmetry-representative choices for the blok: one
// representative per rule orbit, scored by the number of joint bits.
struct BlokPrimeSelection {
    std::vector<NamedRule> rules;  // the published maximizer
    int joint_bits = 0;
    std::vector<std::vector<RuleTable>> maximizers;
};

// Throws DataError if no choice reaches 51 joint bits or the published
// catalog is not among the maximizers.
BlokPrimeSelection select_blok_prime();

// Centroid of the blok' catalog; its fixed coordinates coincide with the
// canonical schema's fixed bits.
const Centroid& canonical_centroid();

}  // namespace olab
