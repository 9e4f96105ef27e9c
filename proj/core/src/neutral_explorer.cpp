#include "olab/neutral_explorer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "olab/olympus.hpp"
#include "olab/parallel.hpp"
#include "olab/rng.hpp"
#include "olab/timeseries.hpp"

namespace olab {

namespace {

constexpr std::uint64_t kStartFitnessStream = 1ull << 62;
constexpr std::uint64_t kScanOrderStream = 1ull << 61;

FitnessEstimate eval_rule(const RuleTable& rule, const WalkConfig& cfg, std::uint64_t sample_seed,
                          int threads) {
    return standard_performance(rule, {sample_seed, cfg.ics}, cfg.max_steps, threads);
}

// neighbor j of visited point k draws its IC sample from a two-level split
std::uint64_t neighbor_seed(std::uint64_t walk_seed, int point, int bit) {
    return derive_seed(derive_seed(walk_seed, static_cast<std::uint64_t>(point)), bit);
}

std::vector<FitnessEstimate> eval_neighbors(const RuleTable& rule, const WalkConfig& cfg,
                                            std::uint64_t walk_seed, int point) {
    std::vector<FitnessEstimate> out(RuleTable::kBits);
    parallel_for(0, RuleTable::kBits, cfg.threads, [&](std::int64_t bit) {
        out[bit] = eval_rule(rule.with_flipped(static_cast<int>(bit)), cfg,
                             neighbor_seed(walk_seed, point, static_cast<int>(bit)), 1);
    });
    return out;
}

}  // namespace

NeutralWalk neutral_walk(const RuleTable& start, const WalkConfig& cfg, std::uint64_t seed) {
    const NeutralityTest test;
    NeutralWalk walk;
    walk.seed = seed;

    const FitnessEstimate start_fitness =
        eval_rule(start, cfg, derive_seed(seed, kStartFitnessStream), cfg.threads);

    RuleTable current = start;
    FitnessEstimate current_fitness = start_fitness;

    for (int point = 0;; ++point) {
        WalkPoint wp;
        wp.rule = current;
        wp.fitness = current_fitness;
        wp.distance_to_start = hamming(current, start);

        std::vector<FitnessEstimate> neighbors;
        if (cfg.instrument) {
            neighbors = eval_neighbors(current, cfg, seed, point);
            int degree = 0;
            for (int bit = 0; bit < RuleTable::kBits; ++bit)
                degree += test.is_neutral(current_fitness, neighbors[bit]);
            wp.neutral_degree = degree;
            wp.neighbor_fitness = neighbors;
        }

        // flipping a bit where current still agrees with the start is exactly
        // what increases the distance
        std::vector<int> candidates;
        for (int bit = 0; bit < RuleTable::kBits; ++bit)
            if (current.get(bit) == start.get(bit)) candidates.push_back(bit);

        Rng order_rng(derive_seed(seed, kScanOrderStream + static_cast<std::uint64_t>(point)));
        for (std::size_t i = candidates.size(); i > 1; --i)
            std::swap(candidates[i - 1], candidates[order_rng.below(i)]);

        int chosen = -1;
        FitnessEstimate chosen_fitness;
        for (int bit : candidates) {
            FitnessEstimate est;
            if (cfg.instrument) {
                est = neighbors[bit];
            } else {
                est = eval_rule(current.with_flipped(bit), cfg, neighbor_seed(seed, point, bit),
                                cfg.threads);
            }
            if (test.is_neutral(start_fitness, est)) {
                chosen = bit;
                chosen_fitness = est;
                break;
            }
        }

        walk.points.push_back(std::move(wp));
        if (chosen < 0) {
            walk.termination = candidates.empty() ? NeutralWalk::Termination::DistanceSaturated
                                                  : NeutralWalk::Termination::NoNeutralExtension;
            break;
        }
        current = current.with_flipped(chosen);
        current_fitness = chosen_fitness;
    }
    return walk;
}

int neutral_degree(const RuleTable& rule, const WalkConfig& cfg, std::uint64_t seed,
                   bool olympus_only) {
    const NeutralityTest test;
    const FitnessEstimate base =
        eval_rule(rule, cfg, derive_seed(seed, kStartFitnessStream), cfg.threads);

    std::vector<int> bits;
    if (olympus_only)
        bits = Olympus::canonical().free_positions();
    else {
        bits.resize(RuleTable::kBits);
        std::iota(bits.begin(), bits.end(), 0);
    }

    std::vector<std::uint8_t> neutral(bits.size(), 0);
    parallel_for(0, static_cast<std::int64_t>(bits.size()), cfg.threads, [&](std::int64_t i) {
        const auto est =
            eval_rule(rule.with_flipped(bits[i]), cfg, neighbor_seed(seed, 0, bits[i]), 1);
        neutral[i] = test.is_neutral(base, est);
    });
    int degree = 0;
    for (auto v : neutral) degree += v;
    return degree;
}

std::vector<double> degree_series(const NeutralWalk& walk) {
    std::vector<double> series;
    series.reserve(walk.points.size());
    for (const auto& p : walk.points) series.push_back(static_cast<double>(p.neutral_degree));
    return series;
}

std::vector<double> neutral_degree_acf(std::span<const NeutralWalk> walks, int max_lag) {
    std::vector<double> sum(max_lag + 1, 0.0);
    std::vector<int> counted(max_lag + 1, 0);
    for (const auto& walk : walks) {
        const auto series = degree_series(walk);
        if (series.size() < 2) continue;
        const auto r = acf(series, std::min<int>(max_lag, static_cast<int>(series.size()) - 1));
        for (std::size_t k = 0; k < r.size(); ++k) {
            sum[k] += r[k];
            ++counted[k];
        }
    }
    std::vector<double> out;
    for (int k = 0; k <= max_lag; ++k) {
        if (counted[k] == 0) break;
        out.push_back(sum[k] / counted[k]);
    }
    return out;
}

InnovationTrace innovation_trace(const NeutralWalk& walk, double z) {
    const NeutralityTest test{z};
    InnovationTrace trace;
    std::unordered_set<std::int64_t> seen;  // success counts on the shared k/n grid
    std::int64_t fitter = 0;
    const FitnessEstimate start_fitness = walk.points.empty() ? FitnessEstimate{}
                                                              : walk.points.front().fitness;
    for (const auto& point : walk.points) {
        for (const auto& est : point.neighbor_fitness) {
            if (seen.insert(est.successes).second) {
                if (est.value() > start_fitness.value() && !test.is_neutral(est, start_fitness))
                    ++fitter;
            }
        }
        trace.cumulative_new.push_back(static_cast<std::int64_t>(seen.size()));
        trace.cumulative_fitter.push_back(fitter);
    }
    return trace;
}

EvolvabilityHorizon evolvability_horizon(const RuleTable& rule, const WalkConfig& cfg,
                                         std::uint64_t seed) {
    EvolvabilityHorizon horizon;
    horizon.rule = rule;
    horizon.base = eval_rule(rule, cfg, derive_seed(seed, kStartFitnessStream), cfg.threads);
    horizon.sorted_neighbors = eval_neighbors(rule, cfg, seed, 0);
    std::sort(horizon.sorted_neighbors.begin(), horizon.sorted_neighbors.end(),
              [](const FitnessEstimate& a, const FitnessEstimate& b) {
                  return a.value() < b.value();
              });

    // exhaustive two-piece least squares over the sorted sequence
    const int n = static_cast<int>(horizon.sorted_neighbors.size());
    std::vector<double> sx(n + 1, 0.0), sy(n + 1, 0.0), sxx(n + 1, 0.0), sxy(n + 1, 0.0),
        syy(n + 1, 0.0);
    for (int i = 1; i <= n; ++i) {
        const double x = i;
        const double y = horizon.sorted_neighbors[i - 1].value();
        sx[i] = sx[i - 1] + x;
        sy[i] = sy[i - 1] + y;
        sxx[i] = sxx[i - 1] + x * x;
        sxy[i] = sxy[i - 1] + x * y;
        syy[i] = syy[i - 1] + y * y;
    }
    auto segment = [&](int lo, int hi) {  // ranks lo..hi inclusive, 1-based
        const double cnt = hi - lo + 1;
        const double vx = sx[hi] - sx[lo - 1], vy = sy[hi] - sy[lo - 1];
        const double vxx = sxx[hi] - sxx[lo - 1], vxy = sxy[hi] - sxy[lo - 1],
                     vyy = syy[hi] - syy[lo - 1];
        const double denom = cnt * vxx - vx * vx;
        double slope = 0.0, sse;
        if (cnt < 2 || denom == 0.0) {
            sse = cnt < 2 ? 0.0 : vyy - vy * vy / cnt;
        } else {
            slope = (cnt * vxy - vx * vy) / denom;
            const double icept = (vy - slope * vx) / cnt;
            sse = vyy - icept * vy - slope * vxy;
        }
        return std::pair<double, double>(std::max(sse, 0.0), slope);
    };

    double best = std::numeric_limits<double>::infinity();
    for (int r = 2; r <= n - 1; ++r) {
        const auto lower = segment(1, r - 1);
        const auto upper = segment(r, n);
        const double total = lower.first + upper.first;
        if (total < best) {
            best = total;
            horizon.changepoint = r;
            horizon.tail_slope = upper.second;
        }
    }
    return horizon;
}

std::vector<BitEvolvability> per_bit_evolvability(std::span<const RuleTable> rules,
                                                  const WalkConfig& cfg, std::uint64_t seed) {
    const int count = static_cast<int>(rules.size());
    std::vector<double> base(count);
    parallel_for(0, count, cfg.threads, [&](std::int64_t r) {
        base[r] = eval_rule(rules[r], cfg, derive_seed(seed, kStartFitnessStream + r), 1).value();
    });

    std::vector<double> delta(static_cast<std::size_t>(count) * RuleTable::kBits);
    parallel_for(0, count * RuleTable::kBits, cfg.threads, [&](std::int64_t task) {
        const int r = static_cast<int>(task) / RuleTable::kBits;
        const int bit = static_cast<int>(task) % RuleTable::kBits;
        const auto est = eval_rule(rules[r].with_flipped(bit), cfg,
                                   derive_seed(seed, static_cast<std::uint64_t>(task)), 1);
        delta[task] = est.value() - base[r];
    });

    std::vector<BitEvolvability> out(RuleTable::kBits);
    for (int bit = 0; bit < RuleTable::kBits; ++bit) {
        double mean = 0.0;
        for (int r = 0; r < count; ++r) mean += delta[static_cast<std::size_t>(r) * RuleTable::kBits + bit];
        mean /= count;
        double var = 0.0;
        for (int r = 0; r < count; ++r) {
            const double d = delta[static_cast<std::size_t>(r) * RuleTable::kBits + bit] - mean;
            var += d * d;
        }
        out[bit] = {bit, mean, std::sqrt(var / count)};
    }
    std::stable_sort(out.begin(), out.end(), [](const BitEvolvability& a, const BitEvolvability& b) {
        return a.mean_delta < b.mean_delta;
    });
    return out;
}

}  // namespace olab
