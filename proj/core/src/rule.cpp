#include "olab/rule.hpp"

#include <bit>
#include <cctype>

#include "olab/errors.hpp"

namespace olab {

int RuleTable::popcount() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
}

RuleTable RuleTable::from_text(std::string_view text) {
    RuleTable r;
    int i = 0;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c != '0' && c != '1') throw DataError("rule text: invalid character '" + std::string(1, c) + "'");
        if (i >= kBits) throw DataError("rule text: more than 128 entries");
        r.set(i++, c == '1');
    }
    if (i != kBits) throw DataError("rule text: expected 128 entries, got " + std::to_string(i));
    return r;
}

RuleTable RuleTable::from_hex(std::string_view hex) {
    RuleTable r;
    int d = 0;
    for (char c : hex) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'f')
            v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            v = c - 'A' + 10;
        else
            throw DataError("rule hex: invalid digit '" + std::string(1, c) + "'");
        if (d >= 32) throw DataError("rule hex: more than 32 digits");
        for (int b = 0; b < 4; ++b) r.set(d * 4 + b, (v >> (3 - b)) & 1);
        ++d;
    }
    if (d != 32) throw DataError("rule hex: expected 32 digits, got " + std::to_string(d));
    return r;
}

std::string RuleTable::to_text() const {
    std::string s(kBits, '0');
    for (int i = 0; i < kBits; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string RuleTable::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(32, '0');
    for (int d = 0; d < 32; ++d) {
        int v = 0;
        for (int b = 0; b < 4; ++b) v = (v << 1) | (get(d * 4 + b) ? 1 : 0);
        s[d] = digits[v];
    }
    return s;
}

int hamming(const RuleTable& a, const RuleTable& b) {
    return std::popcount(a.words()[0] ^ b.words()[0]) + std::popcount(a.words()[1] ^ b.words()[1]);
}

}  // namespace olab
