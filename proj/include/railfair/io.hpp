#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "railfair/fairness.hpp"
#include "railfair/ga.hpp"
#include "railfair/model.hpp"

namespace railfair {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One optimization run's metrics row, mirroring the per-run results tables.
struct RunRecord {
    std::string index_kind;
    double alpha = 0.0;
    int run_number = 0;
    std::uint64_t seed = 0;
    double inequity_percent = 0.0;
    double revenue = 0.0;
    int scheduled_train_count = 0;
    std::vector<double> importance_percents; // I_1 .. I_n
    double assigned_importance_percent = 0.0;
    double assigned_capacity_percent = 0.0;
};

RunRecord make_run_record(const Scenario& s, const FairnessConfig& cfg,
                          int run_number, std::uint64_t seed,
                          const EvalResult& eval);

// Scenario document: self-describing JSON, field names as in the data model.
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);
void save_scenario(const Scenario& s, const std::string& path);
Scenario load_scenario(const std::string& path);

// CSV with one header row, comma separators, '.' decimals, full precision.
std::string run_records_to_csv(const std::vector<RunRecord>& records);
std::vector<RunRecord> run_records_from_csv(const std::string& text);

std::string epoch_history_to_csv(const EpochHistory& history);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace railfair
