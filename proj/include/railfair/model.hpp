#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace railfair {

// One train-operating company competing for track access.
struct RailwayUndertaking {
    int id = 0;                      // 1-based
    double framework_capacity = 0.0; // agreed share of total capacity, in (0,1]
};

// One requested train path.
struct ServiceRequest {
    int ru_id = 0;
    int service_id = 0; // 1-based index within the owning request set
    std::vector<int> route;               // ordered segment ids
    int desired_departure = 0;            // minutes from horizon start
    std::vector<int> segment_travel_times; // minutes, one per route segment
    double importance = 0.0;              // weight in [0,1]; sums to 1 per RU
    double base_revenue = 0.0;            // earned if scheduled at the desired time

    int total_travel_time() const;
};

struct RequestSet {
    int ru_id = 0;
    std::vector<ServiceRequest> requests;
};

struct LineTopology {
    std::vector<int> segment_ids;

    std::size_t segment_count() const { return segment_ids.size(); }
    std::size_t station_count() const { return segment_ids.size() + 1; }
};

// A full problem instance. Immutable after construction.
struct Scenario {
    std::vector<RailwayUndertaking> undertakings;
    std::vector<RequestSet> request_sets; // one per undertaking, same order
    LineTopology line;
    int horizon_minutes = 0;
    int max_services = 0;      // maximum number of services to be planned
    int headway_minutes = 0;   // minimum separation between entries on a segment
    int max_shift_minutes = 0; // half-width of the allowed departure window
    double penalty_per_minute = 0.0; // fraction of base revenue lost per minute of shift

    int total_requests() const;
    const ServiceRequest& request(int ru_index, int service_index) const;
};

// Per-undertaking grant decision plus the scheduled departure of each granted
// service. Shapes mirror the scenario's request sets.
struct Allocation {
    std::vector<std::vector<std::uint8_t>> granted;
    std::vector<std::vector<int>> departures; // valid where granted

    static Allocation empty_for(const Scenario& s);
    int scheduled_count() const;
};

// Empty result means every invariant holds; each entry names the offending
// field and value. Violations are data, not faults.
std::vector<std::string> validate_scenario(const Scenario& s);

// Entry i is the sum of importance weights of RU i's granted services.
std::vector<double> granted_importance_sums(const Scenario& s, const Allocation& a);

} // namespace railfair
