#pragma once

#include <utility>
#include <vector>

#include "railfair/fairness.hpp"
#include "railfair/infrastructure.hpp"
#include "railfair/model.hpp"

namespace railfair {

struct ServiceKey {
    int ru_id = 0;
    int service_id = 0;

    friend bool operator==(const ServiceKey&, const ServiceKey&) = default;
};

struct RepairIteration {
    int most_affected_ru = 0;
    ServiceKey chosen;
    std::vector<ServiceKey> services_discarded;
};

struct RepairTrace {
    std::vector<ServiceKey> scheduled_without_conflict;
    std::vector<RepairIteration> iterations;
};

// Equity-greedy conflict resolution. Conflict-free candidates are scheduled
// first; the loop then repeatedly favors the RU with the lowest granted
// importance sum, schedules its pending service that maximizes the configured
// fairness index, and discards everything conflicting with it.
std::pair<Allocation, RepairTrace>
resolve_conflicts(const Scenario& s, const std::vector<Candidate>& candidates,
                  const FairnessConfig& fairness);

// Sum over scheduled services of base revenue minus the deviation penalty:
// each minute of shift costs penalty_per_minute of the service's own base
// revenue, floored at zero.
double revenue(const Scenario& s, const Allocation& a);

// revenue * fairness index of the alpha-transformed importance sums; revenue
// alone in RevenueOnly mode.
double fitness(const Scenario& s, const Allocation& a, const FairnessConfig& cfg);

// Scheduled services of an allocation as candidates, in RU/service order.
std::vector<Candidate> allocation_candidates(const Scenario& s, const Allocation& a);

} // namespace railfair
