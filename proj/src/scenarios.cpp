#include "railfair/scenarios.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace railfair {

std::string to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Balanced: return "balanced";
        case ScenarioKind::SemiBalanced: return "semi";
        case ScenarioKind::Unbalanced: return "unbalanced";
    }
    throw std::logic_error("unknown scenario kind");
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
    if (name == "balanced") return ScenarioKind::Balanced;
    if (name == "semi") return ScenarioKind::SemiBalanced;
    if (name == "unbalanced") return ScenarioKind::Unbalanced;
    throw std::invalid_argument("unknown scenario kind: " + name);
}

Scenario make_scenario(ScenarioKind kind, std::uint64_t seed,
                       const GeneratorOptions& opts) {
    std::array<double, 5> capacities{};
    std::array<int, 5> request_counts{};
    switch (kind) {
        case ScenarioKind::Balanced:
            capacities = {0.20, 0.20, 0.20, 0.20, 0.20};
            request_counts = {10, 10, 10, 10, 10};
            break;
        case ScenarioKind::SemiBalanced:
            capacities = {0.30, 0.25, 0.20, 0.15, 0.10};
            request_counts = {15, 12, 10, 8, 5};
            break;
        case ScenarioKind::Unbalanced:
            capacities = {0.55, 0.25, 0.10, 0.05, 0.05};
            request_counts = {28, 12, 5, 2, 2};
            break;
    }

    Scenario s;
    s.horizon_minutes = opts.horizon_minutes;
    s.max_services = 100; // request shares are read as counts per 100 slots
    s.headway_minutes = opts.headway_minutes;
    s.max_shift_minutes = opts.max_shift_minutes;
    s.penalty_per_minute = opts.penalty_per_minute;
    for (int seg = 1; seg <= opts.line_segments; ++seg)
        s.line.segment_ids.push_back(seg);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> first_seg(0, opts.line_segments - 1);
    std::uniform_int_distribution<int> travel(10, 20);
    std::uniform_real_distribution<double> revenue(opts.min_base_revenue,
                                                   opts.max_base_revenue);

    for (int i = 0; i < 5; ++i) {
        RailwayUndertaking ru;
        ru.id = i + 1;
        ru.framework_capacity = capacities[i];
        s.undertakings.push_back(ru);

        RequestSet rs;
        rs.ru_id = ru.id;
        const int count = request_counts[i];
        for (int k = 0; k < count; ++k) {
            ServiceRequest req;
            req.ru_id = ru.id;
            req.service_id = k + 1;
            const int start = first_seg(rng);
            std::uniform_int_distribution<int> span(1, opts.line_segments - start);
            const int length = span(rng);
            int duration = 0;
            for (int j = 0; j < length; ++j) {
                req.route.push_back(s.line.segment_ids[start + j]);
                const int t = travel(rng);
                req.segment_travel_times.push_back(t);
                duration += t;
            }
            std::uniform_int_distribution<int> departure(
                0, std::max(0, s.horizon_minutes - duration - 1));
            req.desired_departure = departure(rng);
            req.importance = 1.0 / count;
            req.base_revenue = revenue(rng);
            rs.requests.push_back(std::move(req));
        }
        s.request_sets.push_back(std::move(rs));
    }
    return s;
}

} // namespace railfair
