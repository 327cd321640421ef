#include "railfair/ga.hpp"

#include <algorithm>
#include <stdexcept>

namespace railfair {

namespace {
constexpr double kInitSkipProb = 0.25; // chance a gene starts as -1
}

int gene_count(const Scenario& s) { return s.total_requests(); }

std::vector<Candidate> decode(const Scenario& s, const Chromosome& chrom) {
    if (static_cast<int>(chrom.genes.size()) != gene_count(s))
        throw std::invalid_argument("chromosome shape does not match scenario");
    std::vector<Candidate> out;
    std::size_t g = 0;
    for (const auto& rs : s.request_sets) {
        for (const auto& req : rs.requests) {
            const int gene = chrom.genes[g++];
            if (gene < 0) continue;
            const int departure = req.desired_departure - s.max_shift_minutes + gene;
            if (!fits_horizon(req, departure, s.horizon_minutes)) continue;
            out.push_back({req, departure});
        }
    }
    return out;
}

EvalResult evaluate(const Scenario& s, const Chromosome& chrom,
                    const FairnessConfig& cfg) {
    const auto candidates = decode(s, chrom);
    auto [alloc, trace] = resolve_conflicts(s, candidates, cfg);

    EvalResult r;
    r.importance_sums = granted_importance_sums(s, alloc);
    r.revenue = revenue(s, alloc);
    r.fairness = cfg.index_kind == IndexKind::RevenueOnly
                     ? 1.0
                     : fairness_value(r.importance_sums, cfg);
    r.fitness = r.revenue * r.fairness;
    r.inequity = inequity_percent(r.importance_sums);
    r.scheduled_count = alloc.scheduled_count();
    r.allocation = std::move(alloc);
    r.trace = std::move(trace);
    return r;
}

namespace detail {

Chromosome random_chromosome(const Scenario& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> real(0.0, 1.0);
    std::uniform_int_distribution<int> shift(0, 2 * s.max_shift_minutes);
    Chromosome c;
    c.genes.resize(gene_count(s));
    for (int& gene : c.genes)
        gene = real(rng) < kInitSkipProb ? -1 : shift(rng);
    return c;
}

std::size_t tournament_pick(const std::vector<double>& fitnesses, int tournament_size,
                            std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, fitnesses.size() - 1);
    std::size_t best = pick(rng);
    for (int t = 1; t < tournament_size; ++t) {
        const std::size_t other = pick(rng);
        if (fitnesses[other] > fitnesses[best]) best = other;
    }
    return best;
}

void crossover(Chromosome& a, Chromosome& b, double crossover_prob,
               std::mt19937_64& rng) {
    std::uniform_real_distribution<double> real(0.0, 1.0);
    if (real(rng) >= crossover_prob || a.genes.size() < 2) return;
    std::uniform_int_distribution<std::size_t> cut(1, a.genes.size() - 1);
    const std::size_t point = cut(rng);
    for (std::size_t i = point; i < a.genes.size(); ++i)
        std::swap(a.genes[i], b.genes[i]);
}

void mutate(const Scenario& s, Chromosome& chrom, double mutation_prob,
            std::mt19937_64& rng) {
    std::uniform_real_distribution<double> real(0.0, 1.0);
    std::uniform_int_distribution<int> domain(-1, 2 * s.max_shift_minutes);
    for (int& gene : chrom.genes)
        if (real(rng) < mutation_prob) gene = domain(rng);
}

} // namespace detail

GaResult run(const Scenario& s, const GaConfig& ga, const FairnessConfig& cfg) {
    if (ga.population_size <= 0 || ga.epochs <= 0)
        throw std::invalid_argument("population size and epochs must be positive");

    std::mt19937_64 rng(ga.seed);
    std::vector<Chromosome> population;
    population.reserve(ga.population_size);
    for (int i = 0; i < ga.population_size; ++i)
        population.push_back(detail::random_chromosome(s, rng));

    GaResult result;
    bool have_best = false;

    for (int epoch = 0; epoch < ga.epochs; ++epoch) {
        std::vector<EvalResult> evals;
        std::vector<double> fitnesses(population.size());
        evals.reserve(population.size());
        for (std::size_t i = 0; i < population.size(); ++i) {
            evals.push_back(evaluate(s, population[i], cfg));
            fitnesses[i] = evals[i].fitness;
        }

        std::size_t epoch_best = 0;
        for (std::size_t i = 1; i < population.size(); ++i)
            if (fitnesses[i] > fitnesses[epoch_best]) epoch_best = i;
        if (!have_best || fitnesses[epoch_best] > result.best_eval.fitness) {
            result.best = population[epoch_best];
            result.best_eval = evals[epoch_best];
            have_best = true;
        }
        result.history.push_back({result.best_eval.fitness, result.best_eval.revenue,
                                  result.best_eval.fairness,
                                  result.best_eval.inequity});

        if (epoch + 1 == ga.epochs) break;

        std::vector<Chromosome> next;
        next.reserve(population.size());
        std::vector<std::size_t> order(population.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return fitnesses[a] > fitnesses[b];
        });
        for (int e = 0; e < ga.elitism_count && e < ga.population_size; ++e)
            next.push_back(population[order[e]]);

        while (static_cast<int>(next.size()) < ga.population_size) {
            Chromosome child_a =
                population[detail::tournament_pick(fitnesses, ga.tournament_size, rng)];
            Chromosome child_b =
                population[detail::tournament_pick(fitnesses, ga.tournament_size, rng)];
            detail::crossover(child_a, child_b, ga.crossover_prob, rng);
            detail::mutate(s, child_a, ga.mutation_prob, rng);
            detail::mutate(s, child_b, ga.mutation_prob, rng);
            next.push_back(std::move(child_a));
            if (static_cast<int>(next.size()) < ga.population_size)
                next.push_back(std::move(child_b));
        }
        population = std::move(next);
    }
    return result;
}

} // namespace railfair
