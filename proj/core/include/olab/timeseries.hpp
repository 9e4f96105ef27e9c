#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "olab/sampling.hpp"

namespace olab {

// Fitness values collected along a one-bit-flip random walk.
struct WalkTrace {
    std::vector<double> values;
    Space space = Space::Full;
    std::uint64_t seed = 0;
    int ics = 0;
};

// Uniform start in the space; each step flips one uniformly chosen
// admissible bit (any of the 128, or one of the free schema bits on the
// Olympus) and evaluates on a fresh IC sample.
WalkTrace random_walk(Space space, int length, const EvalConfig& eval, std::uint64_t seed);

// Sample autocorrelation r(0..max_lag); r(0) = 1. Throws DegenerateVariance
// on a constant series.
std::vector<double> acf(std::span<const double> series, int max_lag);

// Partial autocorrelation at lags 1..max_lag via Durbin-Levinson; index 0
// holds 1 for alignment with acf().
std::vector<double> pacf(std::span<const double> series, int max_lag);

// two-standard-error band for a series of length L
inline double acf_band(std::size_t length) { return 2.0 / std::sqrt(static_cast<double>(length)); }

struct CorrelationLength {
    double weinberger = 0.0;  // -1/ln r(1); NaN when r(1) <= 0
    int band_crossing = -1;   // first lag below the band for 5 consecutive lags
    double band = 0.0;
};

// band_override = 0 uses the series' own 2/sqrt(L) band.
CorrelationLength correlation_length(std::span<const double> series, double band_override = 0.0);

}  // namespace olab
