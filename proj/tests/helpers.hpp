#pragma once

#include <random>
#include <vector>

#include "railfair/model.hpp"

namespace railfair::testing {

// The two-undertaking worked instance: capacities (3,4)/7, weights
// (0.2,0.3,0.5) and (0.45,0.25,0.2,0.1), seven schedulable slots.
inline Scenario worked_example_scenario() {
    Scenario s;
    s.horizon_minutes = 600;
    s.max_services = 7;
    s.headway_minutes = 5;
    s.max_shift_minutes = 60;
    s.penalty_per_minute = 0.01;
    s.line.segment_ids = {1, 2};

    s.undertakings.push_back({1, 3.0 / 7.0});
    s.undertakings.push_back({2, 4.0 / 7.0});

    const std::vector<std::vector<double>> weights{{0.2, 0.3, 0.5},
                                                   {0.45, 0.25, 0.2, 0.1}};
    for (int i = 0; i < 2; ++i) {
        RequestSet rs;
        rs.ru_id = i + 1;
        for (std::size_t k = 0; k < weights[i].size(); ++k) {
            ServiceRequest req;
            req.ru_id = rs.ru_id;
            req.service_id = static_cast<int>(k) + 1;
            req.route = {1, 2};
            req.segment_travel_times = {15, 15};
            req.desired_departure = 60 * static_cast<int>(k) + 30 * i;
            req.importance = weights[i][k];
            req.base_revenue = 100.0;
            rs.requests.push_back(std::move(req));
        }
        s.request_sets.push_back(std::move(rs));
    }
    return s;
}

// The worked example's grant P1 = (1,0,1), P2 = (1,1,1,0) at desired times.
inline Allocation worked_example_allocation(const Scenario& s) {
    Allocation a = Allocation::empty_for(s);
    const std::vector<std::vector<int>> granted{{1, 0, 1}, {1, 1, 1, 0}};
    for (std::size_t i = 0; i < granted.size(); ++i)
        for (std::size_t k = 0; k < granted[i].size(); ++k)
            if (granted[i][k]) {
                a.granted[i][k] = 1;
                a.departures[i][k] = s.request_sets[i].requests[k].desired_departure;
            }
    return a;
}

// Small randomized instance for conflict-machinery tests.
inline Scenario random_scenario(std::mt19937_64& rng, int max_rus = 4,
                                int max_services = 10) {
    std::uniform_int_distribution<int> ru_count(2, max_rus);
    const int rus = ru_count(rng);
    std::uniform_int_distribution<int> per_ru(1, std::max(1, max_services / rus));

    Scenario s;
    s.horizon_minutes = 240;
    s.max_services = max_services;
    s.headway_minutes = 10;
    s.max_shift_minutes = 30;
    s.penalty_per_minute = 0.01;
    s.line.segment_ids = {1, 2, 3};

    std::uniform_int_distribution<int> seg_start(0, 2);
    std::uniform_int_distribution<int> travel(10, 25);
    std::uniform_real_distribution<double> weight(0.1, 1.0);
    std::uniform_real_distribution<double> revenue(50.0, 150.0);

    for (int i = 0; i < rus; ++i) {
        s.undertakings.push_back({i + 1, 1.0 / rus});
        RequestSet rs;
        rs.ru_id = i + 1;
        const int count = per_ru(rng);
        std::vector<double> raw;
        for (int k = 0; k < count; ++k) raw.push_back(weight(rng));
        double total = 0.0;
        for (double w : raw) total += w;
        for (int k = 0; k < count; ++k) {
            ServiceRequest req;
            req.ru_id = rs.ru_id;
            req.service_id = k + 1;
            const int start = seg_start(rng);
            std::uniform_int_distribution<int> span(1, 3 - start);
            const int len = span(rng);
            int duration = 0;
            for (int j = 0; j < len; ++j) {
                req.route.push_back(start + j + 1);
                const int t = travel(rng);
                req.segment_travel_times.push_back(t);
                duration += t;
            }
            std::uniform_int_distribution<int> departure(
                0, std::max(0, s.horizon_minutes - duration - 1));
            req.desired_departure = departure(rng);
            req.importance = raw[k] / total;
            req.base_revenue = revenue(rng);
            rs.requests.push_back(std::move(req));
        }
        s.request_sets.push_back(std::move(rs));
    }
    return s;
}

} // namespace railfair::testing
