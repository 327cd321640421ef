#include "railfair/infrastructure.hpp"

#include <cstdlib>

namespace railfair {

bool fits_horizon(const ServiceRequest& req, int departure, int horizon_minutes) {
    if (departure < 0 || departure >= horizon_minutes) return false;
    return departure + req.total_travel_time() <= horizon_minutes;
}

std::vector<OccupancyWindow> occupancy(const ServiceRequest& req, int departure,
                                       int horizon_minutes) {
    if (req.route.empty()) throw std::invalid_argument("empty route");
    if (departure < 0 || departure >= horizon_minutes)
        throw HorizonError("departure outside horizon");
    std::vector<OccupancyWindow> windows;
    windows.reserve(req.route.size());
    int t = departure;
    for (std::size_t j = 0; j < req.route.size(); ++j) {
        OccupancyWindow w;
        w.segment_id = req.route[j];
        w.enter_minute = t;
        w.exit_minute = t + req.segment_travel_times[j];
        w.ru_id = req.ru_id;
        w.service_id = req.service_id;
        if (w.exit_minute > horizon_minutes)
            throw HorizonError("occupancy window exceeds horizon");
        windows.push_back(w);
        t = w.exit_minute;
    }
    return windows;
}

bool windows_conflict(const std::vector<OccupancyWindow>& a,
                      const std::vector<OccupancyWindow>& b, int headway_minutes) {
    for (const auto& wa : a) {
        for (const auto& wb : b) {
            if (wa.segment_id != wb.segment_id) continue;
            if (std::abs(wa.enter_minute - wb.enter_minute) < headway_minutes)
                return true;
            if (wa.enter_minute < wb.exit_minute && wb.enter_minute < wa.exit_minute)
                return true;
        }
    }
    return false;
}

ConflictGraph build_conflict_graph(const std::vector<Candidate>& candidates,
                                   int headway_minutes, int horizon_minutes) {
    ConflictGraph g;
    g.node_count = candidates.size();
    g.adjacency.assign(candidates.size(), {});

    std::vector<std::vector<OccupancyWindow>> windows;
    windows.reserve(candidates.size());
    for (const auto& c : candidates)
        windows.push_back(occupancy(c.request, c.departure, horizon_minutes));

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (windows_conflict(windows[i], windows[j], headway_minutes)) {
                g.edges.emplace_back(i, j);
                g.adjacency[i].push_back(j);
                g.adjacency[j].push_back(i);
            }
        }
    }
    return g;
}

bool is_conflict_free(const std::vector<Candidate>& scheduled, int headway_minutes,
                      int horizon_minutes) {
    return build_conflict_graph(scheduled, headway_minutes, horizon_minutes)
        .conflict_free();
}

} // namespace railfair
