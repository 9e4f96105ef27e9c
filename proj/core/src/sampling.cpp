#include "olab/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "olab/errors.hpp"
#include "olab/olympus.hpp"
#include "olab/parallel.hpp"
#include "olab/rng.hpp"

namespace olab {

double FitnessHistogram::mass_in(double lo, double hi) const {
    if (total == 0 || trials_per_eval <= 0) return 0.0;
    std::int64_t inside = 0;
    for (const auto& [successes, count] : counts) {
        const double f = static_cast<double>(successes) / trials_per_eval;
        if (f >= lo && f <= hi) inside += count;
    }
    return static_cast<double>(inside) / total;
}

namespace {

RuleTable draw_rule(Space space, Rng& rng) {
    if (space == Space::Olympus) return Olympus::canonical().random_rule(rng);
    return RuleTable::random(rng);
}

}  // namespace

std::vector<SamplePoint> uniform_sample(Space space, int samples, const EvalConfig& eval,
                                        std::uint64_t seed) {
    std::vector<SamplePoint> points(samples);
    parallel_for(0, samples, eval.threads, [&](std::int64_t i) {
        Rng rng(derive_seed(seed, 2 * static_cast<std::uint64_t>(i)));
        const RuleTable rule = draw_rule(space, rng);
        const IcSample ics{derive_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1), eval.ics};
        points[i] = {rule, standard_performance(rule, ics, eval.max_steps, 1)};
    });
    return points;
}

FitnessHistogram histogram_of(std::span<const SamplePoint> points, std::int64_t trials_per_eval) {
    FitnessHistogram hist;
    hist.trials_per_eval = trials_per_eval;
    for (const auto& p : points) hist.add(p.fitness);
    return hist;
}

FitnessHistogram dos_uniform(Space space, int samples, const EvalConfig& eval, std::uint64_t seed) {
    const auto points = uniform_sample(space, samples, eval, seed);
    return histogram_of(points, eval.ics);
}

std::vector<SamplePoint> metropolis_hastings_sample(int samples, const EvalConfig& eval,
                                                    std::uint64_t seed, Space space) {
    std::vector<SamplePoint> chain;
    chain.reserve(samples);
    if (samples <= 0) return chain;

    // Proposal i is a pure function of (seed, i): rule, evaluation sample and
    // accept draw all have their own derived streams. Proposals are evaluated
    // ahead of the chain in parallel chunks; the scan itself is sequential.
    auto propose = [&](std::int64_t i) {
        Rng rng(derive_seed(seed, 3 * static_cast<std::uint64_t>(i)));
        const RuleTable rule = draw_rule(space, rng);
        const IcSample ics{derive_seed(seed, 3 * static_cast<std::uint64_t>(i) + 1), eval.ics};
        return SamplePoint{rule, standard_performance(rule, ics, eval.max_steps, 1)};
    };
    auto accept_draw = [&](std::int64_t i) {
        Rng rng(derive_seed(seed, 3 * static_cast<std::uint64_t>(i) + 2));
        return rng.unit();
    };

    const int chunk = std::max(64, resolve_threads(eval.threads) * 32);
    std::vector<SamplePoint> evaluated;
    std::int64_t next_proposal = 0;

    double current_fitness = 0.0;
    bool have_current = false;
    std::int64_t cursor = 0;  // index into `evaluated` of the next unused proposal

    while (static_cast<int>(chain.size()) < samples) {
        if (cursor == static_cast<std::int64_t>(evaluated.size())) {
            const std::int64_t base = next_proposal;
            evaluated.resize(chunk);
            parallel_for(0, chunk, eval.threads,
                         [&](std::int64_t j) { evaluated[j] = propose(base + j); });
            next_proposal += chunk;
            cursor = 0;
        }
        const SamplePoint& candidate = evaluated[cursor];
        const std::int64_t proposal_index = next_proposal - static_cast<std::int64_t>(evaluated.size()) + cursor;
        ++cursor;

        if (!have_current) {  // the chain starts on the first proposal
            chain.push_back(candidate);
            current_fitness = candidate.fitness.value();
            have_current = true;
            continue;
        }
        const double y = candidate.fitness.value();
        const double alpha = current_fitness == 0.0 ? 1.0 : std::min(1.0, y / current_fitness);
        if (accept_draw(proposal_index) <= alpha) {
            chain.push_back(candidate);
            current_fitness = y;
        }
    }
    return chain;
}

std::vector<RuleTable> csample(int size, const Centroid& centroid, std::uint64_t seed) {
    std::vector<RuleTable> rules(size);
    for (int j = 0; j < size; ++j) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(j)));
        RuleTable r;
        for (int i = 0; i < RuleTable::kBits; ++i) r.set(i, rng.unit() < centroid.freqs[i]);
        rules[j] = r;
    }
    return rules;
}

double distance_to(const RuleTable& rule, const DistanceSpec& spec) {
    if (const auto* to_rule = std::get_if<DistanceToRule>(&spec))
        return static_cast<double>(hamming(rule, to_rule->anchor));
    if (const auto* nearest = std::get_if<DistanceToNearest>(&spec)) {
        int best = RuleTable::kBits + 1;
        for (const auto& anchor : nearest->anchors) best = std::min(best, hamming(rule, anchor));
        return static_cast<double>(best);
    }
    return euclid_to_centroid(rule, std::get<DistanceToCentroid>(spec).centroid);
}

double fdc(std::span<const double> fitness, std::span<const double> distance) {
    const std::size_t m = fitness.size();
    if (m < 2 || distance.size() != m) throw InsufficientData("fdc needs at least 2 paired points");
    double mf = 0.0, md = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mf += fitness[i];
        md += distance[i];
    }
    mf /= static_cast<double>(m);
    md /= static_cast<double>(m);
    double cfd = 0.0, vf = 0.0, vd = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double df = fitness[i] - mf;
        const double dd = distance[i] - md;
        cfd += df * dd;
        vf += df * df;
        vd += dd * dd;
    }
    if (vf == 0.0 || vd == 0.0) throw DegenerateVariance("fdc: zero variance in fitness or distance");
    return cfd / std::sqrt(vf * vd);
}

double fdc(std::span<const SamplePoint> points, const DistanceSpec& spec) {
    std::vector<double> f(points.size()), d(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        f[i] = points[i].fitness.value();
        d[i] = distance_to(points[i].rule, spec);
    }
    return fdc(f, d);
}

FitnessCloud fitness_cloud(std::span<const SamplePoint> parents, CloudOperator op,
                           const EvalConfig& eval, std::uint64_t seed) {
    FitnessCloud cloud;
    cloud.op = op;
    cloud.points.resize(parents.size());
    const auto& olympus = Olympus::canonical();
    parallel_for(0, static_cast<std::int64_t>(parents.size()), eval.threads, [&](std::int64_t i) {
        Rng rng(derive_seed(seed, 2 * static_cast<std::uint64_t>(i)));
        RuleTable offspring = parents[i].rule;
        if (op == CloudOperator::OneBitFlipOlympus) {
            offspring = olympus.flip_free_bit(offspring,
                                              static_cast<int>(rng.below(olympus.dimension())));
        } else {
            offspring.flip(static_cast<int>(rng.below(RuleTable::kBits)));
        }
        const IcSample ics{derive_seed(seed, 2 * static_cast<std::uint64_t>(i) + 1), eval.ics};
        const auto fitness = standard_performance(offspring, ics, eval.max_steps, 1);
        cloud.points[i] = {parents[i].fitness.value(), fitness.value()};
    });
    return cloud;
}

NscReport nsc(const FitnessCloud& cloud, int bins, std::int64_t min_occupancy) {
    if (bins < 2) throw DomainError("nsc: need at least 2 bins");
    if (cloud.points.empty()) throw InsufficientData("nsc: empty cloud");

    double lo = cloud.points.front().first, hi = lo;
    for (const auto& [x, y] : cloud.points) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    const double width = (hi - lo) / bins;

    struct Acc {
        double sx = 0.0, sy = 0.0;
        std::int64_t n = 0;
    };
    std::vector<Acc> raw(bins);
    for (const auto& [x, y] : cloud.points) {
        int b = width > 0.0 ? static_cast<int>((x - lo) / width) : 0;
        b = std::clamp(b, 0, bins - 1);
        raw[b].sx += x;
        raw[b].sy += y;
        ++raw[b].n;
    }

    // sparse bins merge into their right neighbor; a sparse rightmost group
    // folds back into the previous segment
    NscReport report;
    Acc carry;
    for (const auto& bin : raw) {
        carry.sx += bin.sx;
        carry.sy += bin.sy;
        carry.n += bin.n;
        if (carry.n >= min_occupancy) {
            report.segments.push_back({carry.sx / carry.n, carry.sy / carry.n, carry.n});
            carry = {};
        }
    }
    if (carry.n > 0 && !report.segments.empty()) {
        auto& last = report.segments.back();
        const double sx = last.abscissa_mean * last.occupancy + carry.sx;
        const double sy = last.ordinate_mean * last.occupancy + carry.sy;
        last.occupancy += carry.n;
        last.abscissa_mean = sx / last.occupancy;
        last.ordinate_mean = sy / last.occupancy;
    }

    if (report.segments.size() < 2) throw InsufficientData("nsc: fewer than 2 populated bins");

    for (std::size_t i = 0; i + 1 < report.segments.size(); ++i) {
        const auto& a = report.segments[i];
        const auto& b = report.segments[i + 1];
        const double slope = (b.ordinate_mean - a.ordinate_mean) / (b.abscissa_mean - a.abscissa_mean);
        report.slopes.push_back(slope);
        report.nsc += std::min(slope, 0.0);
    }
    return report;
}

}  // namespace olab
