#include "olab/timeseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "olab/errors.hpp"
#include "olab/olympus.hpp"
#include "olab/rng.hpp"

namespace olab {

WalkTrace random_walk(Space space, int length, const EvalConfig& eval, std::uint64_t seed) {
    WalkTrace trace;
    trace.space = space;
    trace.seed = seed;
    trace.ics = eval.ics;
    trace.values.reserve(length);

    const auto& olympus = Olympus::canonical();
    Rng move_rng(derive_seed(seed, 0));
    RuleTable current = space == Space::Olympus ? olympus.random_rule(move_rng)
                                                : RuleTable::random(move_rng);
    for (int t = 0; t < length; ++t) {
        if (t > 0) {
            if (space == Space::Olympus)
                current = olympus.flip_free_bit(current,
                                                static_cast<int>(move_rng.below(olympus.dimension())));
            else
                current.flip(static_cast<int>(move_rng.below(RuleTable::kBits)));
        }
        const IcSample ics{derive_seed(seed, 1 + static_cast<std::uint64_t>(t)), eval.ics};
        trace.values.push_back(
            standard_performance(current, ics, eval.max_steps, eval.threads).value());
    }
    return trace;
}

std::vector<double> acf(std::span<const double> series, int max_lag) {
    const std::size_t len = series.size();
    if (len < 2) throw InsufficientData("acf: series too short");
    max_lag = std::min<int>(max_lag, static_cast<int>(len) - 1);

    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(len);

    double denom = 0.0;
    for (double v : series) denom += (v - mean) * (v - mean);
    if (denom == 0.0) throw DegenerateVariance("acf: constant series");

    std::vector<double> r(max_lag + 1, 0.0);
    r[0] = 1.0;
    for (int k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t j = 0; j + k < len; ++j)
            num += (series[j] - mean) * (series[j + k] - mean);
        r[k] = num / denom;
    }
    return r;
}

std::vector<double> pacf(std::span<const double> series, int max_lag) {
    const auto r = acf(series, max_lag);
    max_lag = static_cast<int>(r.size()) - 1;
    std::vector<double> out(max_lag + 1, 0.0);
    out[0] = 1.0;
    if (max_lag < 1) return out;

    // Durbin-Levinson recursion on the autocorrelation sequence
    std::vector<double> phi(max_lag + 1, 0.0), prev(max_lag + 1, 0.0);
    double v = 1.0;
    for (int k = 1; k <= max_lag; ++k) {
        double num = r[k];
        for (int j = 1; j < k; ++j) num -= prev[j] * r[k - j];
        const double a = v != 0.0 ? num / v : 0.0;
        phi[k] = a;
        for (int j = 1; j < k; ++j) phi[j] = prev[j] - a * prev[k - j];
        v *= (1.0 - a * a);
        out[k] = a;
        std::copy(phi.begin(), phi.begin() + k + 1, prev.begin());
    }
    return out;
}

CorrelationLength correlation_length(std::span<const double> series, double band_override) {
    CorrelationLength out;
    out.band = band_override > 0.0 ? band_override : acf_band(series.size());
    const int max_lag = static_cast<int>(series.size()) / 2;
    const auto r = acf(series, max_lag);

    out.weinberger = r.size() > 1 && r[1] > 0.0 ? -1.0 / std::log(r[1])
                                                : std::numeric_limits<double>::quiet_NaN();

    constexpr int kRun = 5;  // lags the acf must stay below the band
    for (int k = 1; k + kRun - 1 < static_cast<int>(r.size()); ++k) {
        bool below = true;
        for (int j = 0; j < kRun; ++j)
            if (r[k + j] >= out.band) {
                below = false;
                break;
            }
        if (below) {
            out.band_crossing = k;
            break;
        }
    }
    return out;
}

}  // namespace olab
