#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "olab/rng.hpp"

namespace olab {

// Lookup table of a radius-3 binary CA: one output bit per 7-cell
// neighborhood. Index i reads the neighborhood left to right with the
// leftmost cell as most significant bit. The canonical text form is 128
// characters with entry 0 leftmost; the hex form is 32 digits, big-endian
// over the text form.
class RuleTable {
public:
    static constexpr int kBits = 128;

    constexpr RuleTable() = default;

    bool get(int i) const { return (words_[i >> 6] >> (63 - (i & 63))) & 1u; }
    void set(int i, bool v) {
        const std::uint64_t mask = 1ull << (63 - (i & 63));
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(int i) { words_[i >> 6] ^= 1ull << (63 - (i & 63)); }

    RuleTable with_flipped(int i) const {
        RuleTable r = *this;
        r.flip(i);
        return r;
    }

    int popcount() const;

    static RuleTable from_text(std::string_view text);  // throws DataError
    static RuleTable from_hex(std::string_view hex);    // throws DataError
    std::string to_text() const;
    std::string to_hex() const;

    static RuleTable random(Rng& rng) {
        RuleTable r;
        r.words_[0] = rng.next();
        r.words_[1] = rng.next();
        return r;
    }

    // words are packed text-lexicographically (entry 0 = MSB of word 0), so
    // ordering on the pair matches ordering on the text rendering
    const std::array<std::uint64_t, 2>& words() const { return words_; }

    friend auto operator<=>(const RuleTable&, const RuleTable&) = default;

    struct Hash {
        std::size_t operator()(const RuleTable& r) const {
            return static_cast<std::size_t>(mix64(r.words_[0] ^ mix64(r.words_[1])));
        }
    };

private:
    std::array<std::uint64_t, 2> words_{};
};

int hamming(const RuleTable& a, const RuleTable& b);

}  // namespace olab
