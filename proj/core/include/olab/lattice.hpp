#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "olab/rng.hpp"

namespace olab {

inline constexpr int kDefaultLattice = 149;

// One ring configuration of binary cells with periodic boundaries.
// Cells are packed LSB-first into 64-bit words.
class LatticeState {
public:
    explicit LatticeState(int n = kDefaultLattice);

    int size() const { return n_; }
    bool cell(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set_cell(int i, bool v) {
        const std::uint64_t mask = 1ull << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    int ones_count() const;
    double density() const { return static_cast<double>(ones_count()) / n_; }

    LatticeState rotated(int by) const;
    LatticeState reflected() const;
    LatticeState complemented() const;

    static LatticeState from_string(std::string_view cells);  // throws DataError
    std::string to_string() const;

    static LatticeState random(Rng& rng, int n = kDefaultLattice);

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    friend bool operator==(const LatticeState&, const LatticeState&) = default;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

}  // namespace olab
