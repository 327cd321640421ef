#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "railfair/ga.hpp"

using namespace railfair;

namespace {

// Straight-line reference evaluator: independent decode plus a naive repair
// replay, kept deliberately simple.
double reference_fitness(const Scenario& s, const Chromosome& chrom,
                         const FairnessConfig& cfg) {
    std::vector<Candidate> candidates;
    std::size_t g = 0;
    for (const auto& rs : s.request_sets)
        for (const auto& req : rs.requests) {
            const int gene = chrom.genes.at(g++);
            if (gene < 0) continue;
            const int dep = req.desired_departure - s.max_shift_minutes + gene;
            if (dep < 0 || dep + req.total_travel_time() > s.horizon_minutes ||
                dep >= s.horizon_minutes)
                continue;
            candidates.push_back({req, dep});
        }
    auto [alloc, trace] = resolve_conflicts(s, candidates, cfg);
    return fitness(s, alloc, cfg);
}

// Two-RU, four-service scenario with max_shift 0, so the full gene space is
// exactly the 2^4 acceptance decisions and can be enumerated.
Scenario toy_scenario() {
    Scenario s;
    s.horizon_minutes = 300;
    s.max_services = 4;
    s.headway_minutes = 10;
    s.max_shift_minutes = 0;
    s.penalty_per_minute = 0.01;
    s.line.segment_ids = {1, 2};
    s.undertakings = {{1, 0.5}, {2, 0.5}};
    const std::vector<std::vector<int>> desired{{30, 35}, {30, 150}};
    const std::vector<std::vector<double>> rev{{120, 80}, {60, 140}};
    for (int i = 0; i < 2; ++i) {
        RequestSet rs;
        rs.ru_id = i + 1;
        for (int k = 0; k < 2; ++k) {
            ServiceRequest req;
            req.ru_id = i + 1;
            req.service_id = k + 1;
            req.route = {1, 2};
            req.segment_travel_times = {20, 20};
            req.desired_departure = desired[i][k];
            req.importance = 0.5;
            req.base_revenue = rev[i][k];
            rs.requests.push_back(req);
        }
        s.request_sets.push_back(rs);
    }
    return s;
}

double brute_force_optimum(const Scenario& s, const FairnessConfig& cfg) {
    const int n = gene_count(s);
    double best = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Chromosome c;
        for (int g = 0; g < n; ++g)
            c.genes.push_back((mask & (1u << g)) ? s.max_shift_minutes : -1);
        best = std::max(best, evaluate(s, c, cfg).fitness);
    }
    return best;
}

} // namespace

TEST_CASE("all-skip chromosome yields an empty allocation and zero fitness") {
    const Scenario s = testing::worked_example_scenario();
    Chromosome c;
    c.genes.assign(gene_count(s), -1);
    const auto r = evaluate(s, c, {IndexKind::Jain, 10.0, 0.5});
    CHECK(r.fitness == 0.0);
    CHECK(r.scheduled_count == 0);
    CHECK(r.revenue == 0.0);
}

TEST_CASE("chromosome shape mismatch is a structural error") {
    const Scenario s = testing::worked_example_scenario();
    Chromosome c;
    c.genes.assign(gene_count(s) + 1, -1);
    CHECK_THROWS_AS(evaluate(s, c, FairnessConfig{}), std::invalid_argument);
}

TEST_CASE("conflict-free genotype at desired times scores the full grant") {
    Scenario s = testing::worked_example_scenario();
    // Push departures far apart so that nothing conflicts.
    int t = 0;
    for (auto& rs : s.request_sets)
        for (auto& req : rs.requests) {
            req.desired_departure = t;
            t += 80;
        }
    Chromosome c;
    c.genes.assign(gene_count(s), s.max_shift_minutes); // gene m encodes "desired"
    const FairnessConfig cfg{IndexKind::Jain, 10.0, 0.5};
    const auto r = evaluate(s, c, cfg);
    CHECK(r.scheduled_count == gene_count(s));
    double base = 0.0;
    for (const auto& rs : s.request_sets)
        for (const auto& req : rs.requests) base += req.base_revenue;
    CHECK(r.fitness ==
          doctest::Approx(base * fairness_value({1.0, 1.0}, cfg)).epsilon(1e-12));
}

TEST_CASE("evaluate agrees with the straight-line reference evaluator") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const Scenario s = testing::random_scenario(rng, 3, 6);
        std::uniform_int_distribution<int> gene(-1, 2 * s.max_shift_minutes);
        Chromosome c;
        for (int g = 0; g < gene_count(s); ++g) c.genes.push_back(gene(rng));
        const FairnessConfig cfg{trial % 2 ? IndexKind::Gini : IndexKind::Jain, 10.0,
                                 0.5};
        CHECK(evaluate(s, c, cfg).fitness ==
              doctest::Approx(reference_fitness(s, c, cfg)).epsilon(1e-12));
    }
}

TEST_CASE("one epoch with population two equals a manual RNG-stream replay") {
    const Scenario s = toy_scenario();
    const FairnessConfig cfg{IndexKind::Jain, 10.0, 0.5};
    GaConfig ga;
    ga.population_size = 2;
    ga.epochs = 1;
    ga.seed = 99;

    std::mt19937_64 rng(ga.seed);
    const Chromosome a = detail::random_chromosome(s, rng);
    const Chromosome b = detail::random_chromosome(s, rng);
    const double fa = evaluate(s, a, cfg).fitness;
    const double fb = evaluate(s, b, cfg).fitness;
    const Chromosome& expected = fb > fa ? b : a;

    const GaResult result = run(s, ga, cfg);
    CHECK(result.best.genes == expected.genes);
    CHECK(result.best_eval.fitness == doctest::Approx(std::max(fa, fb)));
    REQUIRE(result.history.size() == 1);
    CHECK(result.history[0].best_fitness == doctest::Approx(std::max(fa, fb)));
}

TEST_CASE("same seed gives identical results, different seeds may differ") {
    const Scenario s = toy_scenario();
    const FairnessConfig cfg{IndexKind::Gini, 10.0, 0.5};
    GaConfig ga;
    ga.population_size = 16;
    ga.epochs = 12;
    ga.seed = 7;
    const GaResult r1 = run(s, ga, cfg);
    const GaResult r2 = run(s, ga, cfg);
    CHECK(r1.best.genes == r2.best.genes);
    CHECK(r1.best_eval.fitness == r2.best_eval.fitness);
    REQUIRE(r1.history.size() == r2.history.size());
    for (std::size_t i = 0; i < r1.history.size(); ++i)
        CHECK(r1.history[i].best_fitness == r2.history[i].best_fitness);
}

TEST_CASE("best fitness is monotone non-decreasing under elitism") {
    const Scenario s = toy_scenario();
    for (IndexKind kind : {IndexKind::Jain, IndexKind::RevenueOnly}) {
        FairnessConfig cfg;
        cfg.index_kind = kind;
        cfg.alpha = 25.0;
        GaConfig ga;
        ga.population_size = 16;
        ga.epochs = 40;
        ga.seed = 5;
        const GaResult r = run(s, ga, cfg);
        REQUIRE(r.history.size() == 40);
        for (std::size_t i = 1; i < r.history.size(); ++i)
            CHECK(r.history[i].best_fitness >= r.history[i - 1].best_fitness);
    }
}

TEST_CASE("generated populations stay inside the gene domain") {
    const Scenario s = testing::worked_example_scenario();
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        Chromosome a = detail::random_chromosome(s, rng);
        Chromosome b = detail::random_chromosome(s, rng);
        detail::crossover(a, b, 0.95, rng);
        detail::mutate(s, a, 0.5, rng);
        detail::mutate(s, b, 0.5, rng);
        for (const Chromosome* c : {&a, &b}) {
            CHECK(static_cast<int>(c->genes.size()) == gene_count(s));
            for (int gene : c->genes) {
                CHECK(gene >= -1);
                CHECK(gene <= 2 * s.max_shift_minutes);
            }
        }
    }
}

TEST_CASE("toy instance reaches the brute-force optimum on most seeds") {
    const Scenario s = toy_scenario();
    const FairnessConfig cfg{IndexKind::Jain, 25.0, 0.5};
    const double optimum = brute_force_optimum(s, cfg);
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GaConfig ga;
        ga.population_size = 32;
        ga.epochs = 200;
        ga.seed = seed;
        if (run(s, ga, cfg).best_eval.fitness >= optimum - 1e-9) ++hits;
    }
    CHECK(hits >= 19);
}
