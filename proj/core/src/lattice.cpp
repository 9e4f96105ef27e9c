#include "olab/lattice.hpp"

#include <bit>

#include "olab/errors.hpp"

namespace olab {

LatticeState::LatticeState(int n) : n_(n), words_((n + 63) / 64, 0) {}

int LatticeState::ones_count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

LatticeState LatticeState::rotated(int by) const {
    LatticeState out(n_);
    by %= n_;
    if (by < 0) by += n_;
    for (int i = 0; i < n_; ++i) out.set_cell((i + by) % n_, cell(i));
    return out;
}

LatticeState LatticeState::reflected() const {
    LatticeState out(n_);
    for (int i = 0; i < n_; ++i) out.set_cell(n_ - 1 - i, cell(i));
    return out;
}

LatticeState LatticeState::complemented() const {
    LatticeState out(n_);
    for (int i = 0; i < n_; ++i) out.set_cell(i, !cell(i));
    return out;
}

LatticeState LatticeState::from_string(std::string_view cells) {
    LatticeState out(static_cast<int>(cells.size()));
    for (int i = 0; i < out.size(); ++i) {
        const char c = cells[i];
        if (c != '0' && c != '1') throw DataError("lattice string: invalid character");
        out.set_cell(i, c == '1');
    }
    return out;
}

std::string LatticeState::to_string() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
        if (cell(i)) s[i] = '1';
    return s;
}

LatticeState LatticeState::random(Rng& rng, int n) {
    LatticeState out(n);
    auto& w = out.words();
    for (auto& word : w) word = rng.next();
    const int tail = n & 63;
    if (tail) w.back() &= (1ull << tail) - 1;
    return out;
}

}  // namespace olab
