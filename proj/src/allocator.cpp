#include "railfair/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace railfair {

namespace {

int ru_index_of(const Scenario& s, int ru_id) {
    for (std::size_t i = 0; i < s.undertakings.size(); ++i)
        if (s.undertakings[i].id == ru_id) return static_cast<int>(i);
    throw std::invalid_argument("unknown RU id");
}

FairnessConfig repair_config(const FairnessConfig& cfg) {
    FairnessConfig repair = cfg;
    // Repair still needs an equity notion under pure revenue optimization.
    if (repair.index_kind == IndexKind::RevenueOnly)
        repair.index_kind = IndexKind::Jain;
    return repair;
}

} // namespace

std::pair<Allocation, RepairTrace>
resolve_conflicts(const Scenario& s, const std::vector<Candidate>& candidates,
                  const FairnessConfig& fairness) {
    const FairnessConfig repair = repair_config(fairness);
    const ConflictGraph graph =
        build_conflict_graph(candidates, s.headway_minutes, s.horizon_minutes);

    Allocation alloc = Allocation::empty_for(s);
    RepairTrace trace;
    std::vector<double> sums(s.request_sets.size(), 0.0);
    std::vector<int> ru_of(candidates.size());

    auto schedule = [&](std::size_t idx) {
        const Candidate& c = candidates[idx];
        const int ru = ru_of[idx];
        const int k = c.request.service_id - 1;
        alloc.granted[ru][k] = 1;
        alloc.departures[ru][k] = c.departure;
        sums[ru] += c.request.importance;
    };

    std::vector<std::uint8_t> pending(candidates.size(), 0);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        ru_of[i] = ru_index_of(s, candidates[i].request.ru_id);
        if (graph.adjacency[i].empty()) {
            schedule(i);
            trace.scheduled_without_conflict.push_back(
                {candidates[i].request.ru_id, candidates[i].request.service_id});
        } else {
            pending[i] = 1;
        }
    }

    std::size_t pending_count =
        static_cast<std::size_t>(std::count(pending.begin(), pending.end(), 1));
    while (pending_count > 0) {
        // Most affected RU: minimal granted importance sum among owners of
        // pending services; ties go to the lowest RU id.
        int affected = -1;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!pending[i]) continue;
            const int ru = ru_of[i];
            if (affected < 0 || sums[ru] < sums[affected] ||
                (sums[ru] == sums[affected] &&
                 s.undertakings[ru].id < s.undertakings[affected].id))
                affected = ru;
        }

        // Among the affected RU's pending services, pick the one whose
        // hypothetical grant maximizes the fairness index; ties go to higher
        // importance, then lower service id.
        std::size_t best = candidates.size();
        double best_value = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!pending[i] || ru_of[i] != affected) continue;
            std::vector<double> trial = sums;
            trial[affected] += candidates[i].request.importance;
            const double value = fairness_value(trial, repair);
            bool better = value > best_value;
            if (!better && value == best_value && best < candidates.size()) {
                const auto& cur = candidates[best].request;
                const auto& alt = candidates[i].request;
                better = alt.importance > cur.importance ||
                         (alt.importance == cur.importance &&
                          alt.service_id < cur.service_id);
            }
            if (better) {
                best = i;
                best_value = value;
            }
        }

        RepairIteration it;
        it.most_affected_ru = s.undertakings[affected].id;
        it.chosen = {candidates[best].request.ru_id, candidates[best].request.service_id};
        schedule(best);
        pending[best] = 0;
        --pending_count;
        for (std::size_t nbr : graph.adjacency[best]) {
            if (!pending[nbr]) continue;
            pending[nbr] = 0;
            --pending_count;
            it.services_discarded.push_back(
                {candidates[nbr].request.ru_id, candidates[nbr].request.service_id});
        }
        trace.iterations.push_back(std::move(it));
    }

    return {std::move(alloc), std::move(trace)};
}

double revenue(const Scenario& s, const Allocation& a) {
    double total = 0.0;
    for (std::size_t i = 0; i < s.request_sets.size(); ++i) {
        const auto& rs = s.request_sets[i];
        for (std::size_t k = 0; k < rs.requests.size(); ++k) {
            if (!a.granted[i][k]) continue;
            const auto& req = rs.requests[k];
            const int deviation = std::abs(a.departures[i][k] - req.desired_departure);
            const double factor =
                std::max(0.0, 1.0 - s.penalty_per_minute * deviation);
            total += req.base_revenue * factor;
        }
    }
    return total;
}

double fitness(const Scenario& s, const Allocation& a, const FairnessConfig& cfg) {
    const double rev = revenue(s, a);
    if (cfg.index_kind == IndexKind::RevenueOnly) return rev;
    return rev * fairness_value(granted_importance_sums(s, a), cfg);
}

std::vector<Candidate> allocation_candidates(const Scenario& s, const Allocation& a) {
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < s.request_sets.size(); ++i) {
        const auto& rs = s.request_sets[i];
        for (std::size_t k = 0; k < rs.requests.size(); ++k)
            if (a.granted[i][k]) out.push_back({rs.requests[k], a.departures[i][k]});
    }
    return out;
}

} // namespace railfair
