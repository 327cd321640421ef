#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "railfair/ga.hpp"
#include "railfair/io.hpp"
#include "railfair/scenarios.hpp"

namespace railfair {

struct RunOutput {
    RunRecord record;
    EpochHistory history;
};

// One seeded GA run plus its metrics row.
RunOutput run_once(const Scenario& s, const FairnessConfig& cfg, const GaConfig& ga,
                   int run_number);

// Multi-run study: run r uses seed base_seed + r, so the same seed sequence is
// shared between the different fairness indices.
std::vector<RunOutput> run_study(const Scenario& s, const FairnessConfig& cfg,
                                 const GaConfig& ga, int runs,
                                 std::uint64_t base_seed);

struct AlphaStudyRow {
    double alpha = 0.0;
    double mean_inequity = 0.0;
    double std_inequity = 0.0;
};

std::vector<AlphaStudyRow> alpha_study(const Scenario& s, IndexKind index,
                                       double epsilon,
                                       const std::vector<double>& alphas,
                                       const GaConfig& ga, int runs,
                                       std::uint64_t base_seed);

std::string alpha_study_to_csv(const std::vector<AlphaStudyRow>& rows);

struct CompareCell {
    std::string scenario_kind;
    std::string index_kind;
    double mean_inequity = 0.0, std_inequity = 0.0;
    double mean_revenue = 0.0, std_revenue = 0.0;
    std::vector<double> mean_importance; // I_1 .. I_n, percent
    std::vector<double> std_importance;
    double mean_total_importance = 0.0, std_total_importance = 0.0;
    double mean_assigned_capacity = 0.0, std_assigned_capacity = 0.0;
};

// Grid of scenario kinds x index kinds, aggregated over `runs` seeded runs.
std::vector<CompareCell> compare_grid(const std::vector<ScenarioKind>& kinds,
                                      const std::vector<IndexKind>& indices,
                                      const GaConfig& ga, int runs,
                                      std::uint64_t base_seed,
                                      const GeneratorOptions& opts = {});

std::string compare_to_csv(const std::vector<CompareCell>& cells);

double mean(const std::vector<double>& values);
double std_dev(const std::vector<double>& values);

} // namespace railfair
