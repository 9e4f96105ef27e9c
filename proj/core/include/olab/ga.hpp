#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "olab/fitness.hpp"
#include "olab/olympus.hpp"
#include "olab/rule.hpp"

namespace olab {

enum class GaVariant { Olympus, Centroid, Neutral };

std::string to_string(GaVariant v);

struct GaConfig {
    GaVariant variant = GaVariant::Olympus;
    int population = 200;
    int generations = 1000;
    int ics_per_generation = 1000;
    int post_eval_ics = 10000;
    double crossover_rate = 0.6;
    double mutation_rate = 0.0;   // 0 -> 1/dimension
    double elite_fraction = 0.0;  // 0 -> 0.20 (0.10-distinct for the neutral variant)
    int max_steps = 298;
    int threads = 0;
    std::uint64_t seed = 0;

    static GaConfig paper_preset(GaVariant v, std::uint64_t seed);
    static GaConfig desk_preset(GaVariant v, std::uint64_t seed);  // 100 generations
};

struct Individual {
    OlympusPoint genome;
    FitnessEstimate fitness;  // cumulative over the generations survived
    int age = 0;              // generations already evaluated
};

struct GenerationRecord {
    int generation = 0;
    double best_fitness_post = 0.0;  // best individual re-evaluated on a fresh sample
    double best_fitness_cum = 0.0;
    double mean_fitness = 0.0;
    double mean_pairwise_distance = 0.0;  // Hamming over the free-bit genomes
    int distinct_genomes = 0;
    std::string best_rule_hex;
};

struct RunLog {
    GaConfig config;
    std::vector<GenerationRecord> records;
    RuleTable best_rule;            // best post-evaluated fitness over the run
    FitnessEstimate best_post;
};

RunLog run_ga(const GaConfig& cfg);

}  // namespace olab
