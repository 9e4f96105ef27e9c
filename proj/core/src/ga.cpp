#include "olab/ga.hpp"

#include <algorithm>
#include <map>

#include "olab/ca_engine.hpp"
#include "olab/errors.hpp"
#include "olab/neutrality.hpp"
#include "olab/parallel.hpp"
#include "olab/rng.hpp"

namespace olab {

std::string to_string(GaVariant v) {
    switch (v) {
        case GaVariant::Olympus: return "olympus";
        case GaVariant::Centroid: return "centroid";
        default: return "neutral";
    }
}

GaConfig GaConfig::paper_preset(GaVariant v, std::uint64_t seed) {
    GaConfig cfg;
    cfg.variant = v;
    cfg.seed = seed;
    return cfg;
}

GaConfig GaConfig::desk_preset(GaVariant v, std::uint64_t seed) {
    GaConfig cfg = paper_preset(v, seed);
    cfg.generations = 100;
    return cfg;
}

namespace {

constexpr std::uint64_t kInitStream = 1;
constexpr std::uint64_t kGenSampleStream = 1ull << 40;
constexpr std::uint64_t kPostEvalStream = 1ull << 41;

struct Ranked {
    // value desc, then trials desc, then genome text order; stable_sort keeps
    // population order for full ties
    static bool before(const Individual& a, const Individual& b) {
        const double fa = a.fitness.value(), fb = b.fitness.value();
        if (fa != fb) return fa > fb;
        if (a.fitness.trials != b.fitness.trials) return a.fitness.trials > b.fitness.trials;
        return a.genome < b.genome;
    }
};

double mean_pairwise_distance(const std::vector<Individual>& pop, int dim) {
    const std::int64_t n = static_cast<std::int64_t>(pop.size());
    if (n < 2) return 0.0;
    double cross = 0.0;
    for (int b = 0; b < dim; ++b) {
        std::int64_t ones = 0;
        for (const auto& ind : pop) ones += ind.genome.bits[b];
        cross += static_cast<double>(ones) * static_cast<double>(n - ones);
    }
    return cross / (static_cast<double>(n) * (n - 1) / 2.0);
}

int count_distinct(const std::vector<Individual>& pop) {
    std::map<std::vector<std::uint8_t>, int> seen;
    for (const auto& ind : pop) seen.emplace(ind.genome.bits, 1);
    return static_cast<int>(seen.size());
}

}  // namespace

RunLog run_ga(const GaConfig& cfg) {
    if (cfg.population < 2 || cfg.population % 2 != 0)
        throw DataError("ga: population size must be even and at least 2");
    if (cfg.crossover_rate < 0.0 || cfg.crossover_rate > 1.0)
        throw DataError("ga: crossover rate outside [0,1]");

    const auto& olympus = Olympus::canonical();
    const auto& centroid = canonical_centroid();
    const int dim = olympus.dimension();
    const auto& free_pos = olympus.free_positions();
    const double mutation = cfg.mutation_rate > 0.0 ? cfg.mutation_rate : 1.0 / dim;
    const double elite_fraction =
        cfg.elite_fraction > 0.0 ? cfg.elite_fraction
                                 : (cfg.variant == GaVariant::Neutral ? 0.10 : 0.20);
    const int elite_count = std::max(1, static_cast<int>(cfg.population * elite_fraction + 0.5));
    const NeutralityTest neutrality;

    Rng rng(derive_seed(cfg.seed, kInitStream));

    auto centroid_point = [&](Rng& r) {
        OlympusPoint p;
        p.bits.resize(dim);
        for (int b = 0; b < dim; ++b) p.bits[b] = r.unit() < centroid.freqs[free_pos[b]] ? 1 : 0;
        return p;
    };

    std::vector<Individual> pop(cfg.population);
    for (auto& ind : pop) {
        ind.genome = cfg.variant == GaVariant::Centroid ? centroid_point(rng)
                                                        : olympus.random_point(rng);
    }

    auto mutate = [&](OlympusPoint& genome) {
        for (int b = 0; b < dim; ++b) {
            if (rng.unit() < mutation) {
                if (cfg.variant == GaVariant::Centroid)
                    genome.bits[b] = rng.unit() < centroid.freqs[free_pos[b]] ? 1 : 0;
                else
                    genome.bits[b] ^= 1;
            }
        }
    };
    auto crossover = [&](const OlympusPoint& a, const OlympusPoint& b) {
        const int cut = 1 + static_cast<int>(rng.below(dim - 1));  // in [1, dim-1]
        OlympusPoint c1 = a, c2 = b;
        for (int i = cut; i < dim; ++i) {
            c1.bits[i] = b.bits[i];
            c2.bits[i] = a.bits[i];
        }
        return std::pair<OlympusPoint, OlympusPoint>(std::move(c1), std::move(c2));
    };

    RunLog log;
    log.config = cfg;
    double best_post_value = -1.0;

    for (int gen = 1; gen <= cfg.generations; ++gen) {
        // one fresh shared sample per generation; survivors pool it with what
        // they already accumulated
        const IcSample sample{derive_seed(cfg.seed, kGenSampleStream + gen), cfg.ics_per_generation};

        std::vector<std::vector<std::uint8_t>> distinct;
        std::map<std::vector<std::uint8_t>, int> index_of;
        for (const auto& ind : pop) {
            if (index_of.emplace(ind.genome.bits, static_cast<int>(distinct.size())).second)
                distinct.push_back(ind.genome.bits);
        }
        std::vector<FitnessEstimate> fresh(distinct.size());
        parallel_for(0, static_cast<std::int64_t>(distinct.size()), cfg.threads, [&](std::int64_t i) {
            const RuleTable rule = olympus.embed({distinct[i]});
            fresh[i] = standard_performance(rule, sample, cfg.max_steps, 1);
        });
        for (auto& ind : pop) {
            const auto& update = fresh[index_of.at(ind.genome.bits)];
            ind.fitness = ind.age > 0 ? cumulative_update(ind.fitness, update) : update;
            ++ind.age;
        }

        std::stable_sort(pop.begin(), pop.end(), Ranked::before);

        const RuleTable best_rule = olympus.embed(pop.front().genome);
        const IcSample post_sample{derive_seed(cfg.seed, kPostEvalStream + gen), cfg.post_eval_ics};
        const auto post = standard_performance(best_rule, post_sample, cfg.max_steps, cfg.threads);
        if (post.value() > best_post_value) {
            best_post_value = post.value();
            log.best_rule = best_rule;
            log.best_post = post;
        }

        GenerationRecord rec;
        rec.generation = gen;
        rec.best_fitness_post = post.value();
        rec.best_fitness_cum = pop.front().fitness.value();
        double mean = 0.0;
        for (const auto& ind : pop) mean += ind.fitness.value();
        rec.mean_fitness = mean / cfg.population;
        rec.mean_pairwise_distance = mean_pairwise_distance(pop, dim);
        rec.distinct_genomes = count_distinct(pop);
        rec.best_rule_hex = best_rule.to_hex();
        log.records.push_back(std::move(rec));

        if (gen == cfg.generations) break;

        // --- selection and variation ---
        std::vector<Individual> next;
        next.reserve(cfg.population);

        if (cfg.variant == GaVariant::Neutral) {
            // top distinct genomes survive unchanged
            std::map<std::vector<std::uint8_t>, int> taken;
            for (const auto& ind : pop) {
                if (static_cast<int>(next.size()) >= elite_count) break;
                if (taken.emplace(ind.genome.bits, 1).second) next.push_back(ind);
            }
            auto tournament = [&]() -> const Individual& {
                const auto& a = pop[rng.below(cfg.population)];
                const auto& b = pop[rng.below(cfg.population)];
                if (neutrality.is_neutral(a.fitness, b.fitness)) {
                    const double da = euclid_to_centroid(olympus.embed(a.genome), centroid);
                    const double db = euclid_to_centroid(olympus.embed(b.genome), centroid);
                    return db > da ? b : a;
                }
                return a.fitness.value() >= b.fitness.value() ? a : b;
            };
            while (static_cast<int>(next.size()) < cfg.population) {
                const OlympusPoint pa = tournament().genome;
                const OlympusPoint pb = tournament().genome;
                OlympusPoint c1 = pa, c2 = pb;
                if (rng.unit() < cfg.crossover_rate) std::tie(c1, c2) = crossover(pa, pb);
                mutate(c1);
                mutate(c2);
                next.push_back({std::move(c1), {}, 0});
                if (static_cast<int>(next.size()) < cfg.population)
                    next.push_back({std::move(c2), {}, 0});
            }
        } else {
            // elite rules copied unchanged; offspring bred from elite parents
            for (int i = 0; i < elite_count; ++i) next.push_back(pop[i]);
            while (static_cast<int>(next.size()) < cfg.population) {
                const OlympusPoint& pa = pop[rng.below(elite_count)].genome;
                const OlympusPoint& pb = pop[rng.below(elite_count)].genome;
                OlympusPoint c1 = pa, c2 = pb;
                if (rng.unit() < cfg.crossover_rate) std::tie(c1, c2) = crossover(pa, pb);
                mutate(c1);
                mutate(c2);
                next.push_back({std::move(c1), {}, 0});
                if (static_cast<int>(next.size()) < cfg.population)
                    next.push_back({std::move(c2), {}, 0});
            }
        }
        pop = std::move(next);
    }
    return log;
}

}  // namespace olab
