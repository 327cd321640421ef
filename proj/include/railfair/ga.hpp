#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "railfair/allocator.hpp"
#include "railfair/model.hpp"

namespace railfair {

// One integer per requested service across all RUs, in request-set order.
// -1 means "do not request scheduling"; g >= 0 encodes the departure
// desired - max_shift + g, so the domain is {-1} u {0 .. 2*max_shift}.
struct Chromosome {
    std::vector<int> genes;
};

struct GaConfig {
    int population_size = 64;
    int epochs = 100;
    double crossover_prob = 0.95;
    double mutation_prob = 0.025;
    int tournament_size = 2;
    int elitism_count = 1;
    std::uint64_t seed = 0;
};

struct EpochRecord {
    double best_fitness = 0.0;
    double best_revenue = 0.0;
    double best_fairness = 0.0;
    double best_inequity = 0.0;
};

using EpochHistory = std::vector<EpochRecord>;

struct EvalResult {
    double fitness = 0.0;
    double revenue = 0.0;
    double fairness = 1.0;
    double inequity = 0.0;
    int scheduled_count = 0;
    std::vector<double> importance_sums;
    Allocation allocation;
    RepairTrace trace;
};

struct GaResult {
    Chromosome best;
    EvalResult best_eval;
    EpochHistory history;
};

int gene_count(const Scenario& s);

// Decode: skip -1 genes and occupancy-infeasible candidates.
std::vector<Candidate> decode(const Scenario& s, const Chromosome& chrom);

// Decode, repair, and score a genotype. Deterministic.
EvalResult evaluate(const Scenario& s, const Chromosome& chrom,
                    const FairnessConfig& cfg);

// Seeded evolution loop: tournament selection, single-point crossover,
// per-gene uniform-reset mutation, elitism. Fully reproducible from the seed.
GaResult run(const Scenario& s, const GaConfig& ga, const FairnessConfig& cfg);

// Variation primitives, exposed so tests can replay the RNG stream.
namespace detail {
Chromosome random_chromosome(const Scenario& s, std::mt19937_64& rng);
std::size_t tournament_pick(const std::vector<double>& fitnesses, int tournament_size,
                            std::mt19937_64& rng);
void crossover(Chromosome& a, Chromosome& b, double crossover_prob,
               std::mt19937_64& rng);
void mutate(const Scenario& s, Chromosome& chrom, double mutation_prob,
            std::mt19937_64& rng);
} // namespace detail

} // namespace railfair
