#pragma once

#include <cstdint>
#include <string>

#include "railfair/model.hpp"

namespace railfair {

enum class ScenarioKind { Balanced, SemiBalanced, Unbalanced };

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

struct GeneratorOptions {
    int line_segments = 8;
    int horizon_minutes = 360;
    int headway_minutes = 10;
    int max_shift_minutes = 60;
    double penalty_per_minute = 0.01; // 1% of base revenue per minute of shift
    double min_base_revenue = 50.0;
    double max_base_revenue = 150.0;
};

// Five undertakings with the framework capacities of the requested kind.
// Request counts follow the per-kind shares over a base of 100 slots:
// balanced (10,10,10,10,10), semi-balanced (15,12,10,8,5), unbalanced
// (28,12,5,2,2). Importances are uniform 1/|R|; routes, departures, and
// revenues are drawn from the seed.
Scenario make_scenario(ScenarioKind kind, std::uint64_t seed,
                       const GeneratorOptions& opts = {});

} // namespace railfair
