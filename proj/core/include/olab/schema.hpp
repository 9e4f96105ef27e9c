#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "olab/rule.hpp"

namespace olab {

enum class Sym : std::uint8_t { Zero = 0, One = 1, Star = 2 };

// 128 symbols over {0, 1, *}; the fixed positions carve out a subspace of
// rule space.
class Schema {
public:
    Schema() { symbols_.fill(Sym::Star); }

    Sym at(int i) const { return symbols_[i]; }
    void set(int i, Sym s) { symbols_[i] = s; }

    int fixed_count() const;
    std::vector<int> free_positions() const;  // ascending star indices

    bool matches(const RuleTable& rule) const;
    // -1 when the rule matches, otherwise the first fixed index it violates
    int first_violation(const RuleTable& rule) const;

    static Schema from_text(std::string_view text);  // 128 chars of 0/1/*
    std::string to_text() const;

    friend bool operator==(const Schema&, const Schema&) = default;

private:
    std::array<Sym, RuleTable::kBits> symbols_;
};

// Star where the rules disagree, the common value elsewhere.
Schema schema_of(std::span<const RuleTable> rules);

}  // namespace olab
