#pragma once

// Reference implementations kept deliberately naive and independent of the
// library's evaluation paths. Everything here indexes cells one by one with
// explicit modular arithmetic.

#include <span>
#include <vector>

#include "olab/ca_engine.hpp"
#include "olab/lattice.hpp"
#include "olab/rule.hpp"

namespace oracle {

inline olab::LatticeState step(const olab::RuleTable& rule, const olab::LatticeState& s) {
    const int n = s.size();
    olab::LatticeState out(n);
    for (int i = 0; i < n; ++i) {
        int idx = 0;
        for (int d = -3; d <= 3; ++d) idx = (idx << 1) | (s.cell(((i + d) % n + n) % n) ? 1 : 0);
        out.set_cell(i, rule.get(idx));
    }
    return out;
}

inline olab::Outcome classify(const olab::RuleTable& rule, const olab::LatticeState& ic,
                              int max_steps) {
    olab::LatticeState cur = ic;
    for (int t = 0; t <= max_steps; ++t) {
        const int ones = cur.ones_count();
        if (ones == 0) return olab::Outcome::AllZeros;
        if (ones == cur.size()) return olab::Outcome::AllOnes;
        if (t == max_steps) break;
        olab::LatticeState nxt = step(rule, cur);
        if (nxt == cur) break;
        cur = nxt;
    }
    return olab::Outcome::Unresolved;
}

// exact two-piece linear least squares by brute force over both pieces
struct TwoPiece {
    int changepoint = 0;
    double upper_slope = 0.0;
    double total_sse = 0.0;
};

inline TwoPiece two_piece_fit(std::span<const double> y) {
    const int n = static_cast<int>(y.size());
    auto sse_of = [&](int lo, int hi, double* slope_out) {  // 1-based inclusive
        const int cnt = hi - lo + 1;
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = lo; i <= hi; ++i) {
            sx += i;
            sy += y[i - 1];
            sxx += static_cast<double>(i) * i;
            sxy += i * y[i - 1];
        }
        double slope = 0.0, icept = cnt ? sy / cnt : 0.0;
        const double denom = cnt * sxx - sx * sx;
        if (cnt >= 2 && denom != 0.0) {
            slope = (cnt * sxy - sx * sy) / denom;
            icept = (sy - slope * sx) / cnt;
        }
        double sse = 0.0;
        for (int i = lo; i <= hi; ++i) {
            const double r = y[i - 1] - (icept + slope * i);
            sse += r * r;
        }
        if (slope_out) *slope_out = slope;
        return sse;
    };
    TwoPiece best;
    best.total_sse = 1e300;
    for (int r = 2; r <= n - 1; ++r) {
        double upper_slope = 0.0;
        const double total = sse_of(1, r - 1, nullptr) + sse_of(r, n, &upper_slope);
        if (total < best.total_sse) {
            best = {r, upper_slope, total};
        }
    }
    return best;
}

}  // namespace oracle
