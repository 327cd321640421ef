#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "railfair/model.hpp"

namespace railfair {

struct OccupancyWindow {
    int segment_id = 0;
    int enter_minute = 0;
    int exit_minute = 0;
    int ru_id = 0;
    int service_id = 0;
};

// A service whose windows would leave the horizon cannot run.
struct HorizonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One decoded genotype entry: a request together with its candidate departure.
struct Candidate {
    ServiceRequest request;
    int departure = 0;
};

// Nodes are candidate indices; an edge joins two candidates whose occupancy
// windows violate the headway on a shared segment.
struct ConflictGraph {
    std::size_t node_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges; // i < j
    std::vector<std::vector<std::size_t>> adjacency;

    bool conflict_free() const { return edges.empty(); }
};

// True iff every window of the service fits in [0, horizon].
bool fits_horizon(const ServiceRequest& req, int departure, int horizon_minutes);

// Cumulative occupancy windows: segment j is entered after the travel times of
// the preceding segments. Throws HorizonError when any window leaves the
// horizon.
std::vector<OccupancyWindow> occupancy(const ServiceRequest& req, int departure,
                                       int horizon_minutes);

// Two candidates conflict when, on a shared segment, their entries are closer
// than the headway (exclusive boundary) or their windows overlap.
bool windows_conflict(const std::vector<OccupancyWindow>& a,
                      const std::vector<OccupancyWindow>& b, int headway_minutes);

ConflictGraph build_conflict_graph(const std::vector<Candidate>& candidates,
                                   int headway_minutes, int horizon_minutes);

// Post-repair acceptance check: a schedule is conflict-free iff its conflict
// graph has no edges.
bool is_conflict_free(const std::vector<Candidate>& scheduled, int headway_minutes,
                      int horizon_minutes);

} // namespace railfair
