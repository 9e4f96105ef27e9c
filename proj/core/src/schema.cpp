#include "olab/schema.hpp"

#include "olab/errors.hpp"

namespace olab {

int Schema::fixed_count() const {
    int c = 0;
    for (auto s : symbols_) c += s != Sym::Star;
    return c;
}

std::vector<int> Schema::free_positions() const {
    std::vector<int> free;
    for (int i = 0; i < RuleTable::kBits; ++i)
        if (symbols_[i] == Sym::Star) free.push_back(i);
    return free;
}

bool Schema::matches(const RuleTable& rule) const { return first_violation(rule) < 0; }

int Schema::first_violation(const RuleTable& rule) const {
    for (int i = 0; i < RuleTable::kBits; ++i) {
        if (symbols_[i] == Sym::Star) continue;
        if (rule.get(i) != (symbols_[i] == Sym::One)) return i;
    }
    return -1;
}

Schema Schema::from_text(std::string_view text) {
    Schema out;
    int i = 0;
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t') continue;
        if (i >= RuleTable::kBits) throw DataError("schema text: more than 128 symbols");
        switch (c) {
            case '0': out.set(i, Sym::Zero); break;
            case '1': out.set(i, Sym::One); break;
            case '*': out.set(i, Sym::Star); break;
            default: throw DataError("schema text: invalid character");
        }
        ++i;
    }
    if (i != RuleTable::kBits) throw DataError("schema text: expected 128 symbols");
    return out;
}

std::string Schema::to_text() const {
    std::string s(RuleTable::kBits, '*');
    for (int i = 0; i < RuleTable::kBits; ++i) {
        if (symbols_[i] == Sym::Zero) s[i] = '0';
        if (symbols_[i] == Sym::One) s[i] = '1';
    }
    return s;
}

Schema schema_of(std::span<const RuleTable> rules) {
    Schema out;
    if (rules.empty()) return out;
    for (int i = 0; i < RuleTable::kBits; ++i) {
        const bool first = rules.front().get(i);
        bool agree = true;
        for (const auto& r : rules)
            if (r.get(i) != first) {
                agree = false;
                break;
            }
        out.set(i, agree ? (first ? Sym::One : Sym::Zero) : Sym::Star);
    }
    return out;
}

}  // namespace olab
