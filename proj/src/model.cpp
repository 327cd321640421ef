#include "railfair/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace railfair {

namespace {
constexpr double kWeightTolerance = 1e-9;
// Requests may exceed schedulable capacity, but not without bound.
constexpr int kRequestFactor = 4;
} // namespace

int ServiceRequest::total_travel_time() const {
    return std::accumulate(segment_travel_times.begin(), segment_travel_times.end(), 0);
}

int Scenario::total_requests() const {
    int n = 0;
    for (const auto& rs : request_sets) n += static_cast<int>(rs.requests.size());
    return n;
}

const ServiceRequest& Scenario::request(int ru_index, int service_index) const {
    return request_sets.at(ru_index).requests.at(service_index);
}

Allocation Allocation::empty_for(const Scenario& s) {
    Allocation a;
    a.granted.reserve(s.request_sets.size());
    a.departures.reserve(s.request_sets.size());
    for (const auto& rs : s.request_sets) {
        a.granted.emplace_back(rs.requests.size(), std::uint8_t{0});
        a.departures.emplace_back(rs.requests.size(), 0);
    }
    return a;
}

int Allocation::scheduled_count() const {
    int n = 0;
    for (const auto& row : granted)
        for (auto g : row) n += g ? 1 : 0;
    return n;
}

std::vector<std::string> validate_scenario(const Scenario& s) {
    std::vector<std::string> out;
    auto add = [&out](const std::string& msg) { out.push_back(msg); };
    std::ostringstream os;
    auto fmt = [&os](auto&&... parts) {
        os.str("");
        (os << ... << parts);
        return os.str();
    };

    if (s.line.segment_ids.empty()) add("line.segment_ids: empty");
    {
        std::set<int> seen(s.line.segment_ids.begin(), s.line.segment_ids.end());
        if (seen.size() != s.line.segment_ids.size())
            add("line.segment_ids: duplicate ids");
    }
    if (s.horizon_minutes <= 0) add(fmt("horizon_minutes: ", s.horizon_minutes, " not positive"));
    if (s.max_services <= 0) add(fmt("max_services: ", s.max_services, " not positive"));
    if (s.headway_minutes <= 0) add(fmt("headway_minutes: ", s.headway_minutes, " not positive"));
    if (s.max_shift_minutes < 0) add(fmt("max_shift_minutes: ", s.max_shift_minutes, " negative"));
    if (s.penalty_per_minute < 0) add(fmt("penalty_per_minute: ", s.penalty_per_minute, " negative"));

    std::set<int> ru_ids;
    double capacity_sum = 0.0;
    for (const auto& ru : s.undertakings) {
        if (!ru_ids.insert(ru.id).second)
            add(fmt("undertakings: duplicate id ", ru.id));
        if (!(ru.framework_capacity > 0.0 && ru.framework_capacity <= 1.0))
            add(fmt("RU", ru.id, ".framework_capacity: ", ru.framework_capacity,
                    " outside (0,1]"));
        capacity_sum += ru.framework_capacity;
    }
    if (capacity_sum > 1.0 + kWeightTolerance)
        add(fmt("framework_capacity sum: ", capacity_sum, " exceeds 1"));

    if (s.request_sets.size() != s.undertakings.size())
        add(fmt("request_sets: ", s.request_sets.size(), " sets for ",
                s.undertakings.size(), " undertakings"));

    std::set<int> known_segments(s.line.segment_ids.begin(), s.line.segment_ids.end());
    for (std::size_t i = 0; i < s.request_sets.size(); ++i) {
        const auto& rs = s.request_sets[i];
        if (i < s.undertakings.size() && rs.ru_id != s.undertakings[i].id)
            add(fmt("request_sets[", i, "].ru_id: ", rs.ru_id, " does not match RU ",
                    s.undertakings[i].id));
        double weight_sum = 0.0;
        for (std::size_t k = 0; k < rs.requests.size(); ++k) {
            const auto& req = rs.requests[k];
            if (req.ru_id != rs.ru_id)
                add(fmt("RU", rs.ru_id, " request ", k, ": ru_id ", req.ru_id,
                        " does not match owner"));
            if (req.service_id != static_cast<int>(k) + 1)
                add(fmt("RU", rs.ru_id, " request ", k, ": service_id ",
                        req.service_id, " is not ", k + 1));
            std::string tag = fmt("RU", rs.ru_id, " service ", req.service_id);
            os.str("");
            if (req.route.empty()) add(tag + ": route empty");
            if (req.segment_travel_times.size() != req.route.size())
                add(tag + ": travel time count does not match route length");
            for (int t : req.segment_travel_times)
                if (t <= 0) add(fmt(tag, ": travel time ", t, " not positive"));
            for (int seg : req.route)
                if (!known_segments.count(seg))
                    add(fmt(tag, ": unknown segment ", seg));
            if (req.desired_departure < 0 || req.desired_departure >= s.horizon_minutes)
                add(fmt(tag, ": desired_departure ", req.desired_departure,
                        " outside horizon"));
            if (req.importance < 0.0 || req.importance > 1.0)
                add(fmt(tag, ": importance ", req.importance, " outside [0,1]"));
            weight_sum += req.importance;
        }
        if (!rs.requests.empty() && std::abs(weight_sum - 1.0) > kWeightTolerance)
            add(fmt("RU", rs.ru_id, ": importances sum to ", weight_sum, ", expected 1"));
    }

    if (s.max_services > 0) {
        int total = 0;
        for (const auto& rs : s.request_sets) total += static_cast<int>(rs.requests.size());
        if (total > kRequestFactor * s.max_services)
            add(fmt("total requests: ", total, " exceeds ", kRequestFactor,
                    "x max_services (", s.max_services, ")"));
    }
    return out;
}

std::vector<double> granted_importance_sums(const Scenario& s, const Allocation& a) {
    if (a.granted.size() != s.request_sets.size())
        throw std::invalid_argument("allocation shape does not match scenario");
    std::vector<double> sums(s.request_sets.size(), 0.0);
    for (std::size_t i = 0; i < s.request_sets.size(); ++i) {
        const auto& rs = s.request_sets[i];
        if (a.granted[i].size() != rs.requests.size())
            throw std::invalid_argument("allocation shape does not match scenario");
        for (std::size_t k = 0; k < rs.requests.size(); ++k)
            if (a.granted[i][k]) sums[i] += rs.requests[k].importance;
    }
    return sums;
}

} // namespace railfair
