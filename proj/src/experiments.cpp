#include "railfair/experiments.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace railfair {

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

double mean(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

double std_dev(const std::vector<double>& values) {
    if (values.size() < 2) return 0.0;
    const double m = mean(values);
    double acc = 0.0;
    for (double v : values) acc += (v - m) * (v - m);
    return std::sqrt(acc / static_cast<double>(values.size()));
}

RunOutput run_once(const Scenario& s, const FairnessConfig& cfg, const GaConfig& ga,
                   int run_number) {
    GaResult result = run(s, ga, cfg);
    RunOutput out;
    out.record = make_run_record(s, cfg, run_number, ga.seed, result.best_eval);
    out.history = std::move(result.history);
    return out;
}

std::vector<RunOutput> run_study(const Scenario& s, const FairnessConfig& cfg,
                                 const GaConfig& ga, int runs,
                                 std::uint64_t base_seed) {
    std::vector<RunOutput> out;
    out.reserve(runs);
    for (int r = 0; r < runs; ++r) {
        GaConfig run_ga = ga;
        run_ga.seed = base_seed + static_cast<std::uint64_t>(r);
        out.push_back(run_once(s, cfg, run_ga, r + 1));
    }
    return out;
}

std::vector<AlphaStudyRow> alpha_study(const Scenario& s, IndexKind index,
                                       double epsilon,
                                       const std::vector<double>& alphas,
                                       const GaConfig& ga, int runs,
                                       std::uint64_t base_seed) {
    std::vector<AlphaStudyRow> rows;
    for (double alpha : alphas) {
        FairnessConfig cfg{index, alpha, epsilon};
        const auto outputs = run_study(s, cfg, ga, runs, base_seed);
        std::vector<double> inequities;
        for (const auto& o : outputs) inequities.push_back(o.record.inequity_percent);
        rows.push_back({alpha, mean(inequities), std_dev(inequities)});
    }
    return rows;
}

std::string alpha_study_to_csv(const std::vector<AlphaStudyRow>& rows) {
    std::ostringstream os;
    os << "alpha,mean_inequity,std_inequity\n";
    for (const auto& r : rows)
        os << format_double(r.alpha) << ',' << format_double(r.mean_inequity) << ','
           << format_double(r.std_inequity) << '\n';
    return os.str();
}

std::vector<CompareCell> compare_grid(const std::vector<ScenarioKind>& kinds,
                                      const std::vector<IndexKind>& indices,
                                      const GaConfig& ga, int runs,
                                      std::uint64_t base_seed,
                                      const GeneratorOptions& opts) {
    std::vector<CompareCell> cells;
    for (ScenarioKind kind : kinds) {
        const Scenario s = make_scenario(kind, base_seed, opts);
        for (IndexKind index : indices) {
            FairnessConfig cfg;
            cfg.index_kind = index;
            cfg.alpha = FairnessConfig::default_alpha(index);
            const auto outputs = run_study(s, cfg, ga, runs, base_seed);

            CompareCell cell;
            cell.scenario_kind = to_string(kind);
            cell.index_kind = to_string(index);
            std::vector<double> inequity, rev, total, capacity;
            const std::size_t n = s.undertakings.size();
            std::vector<std::vector<double>> per_ru(n);
            for (const auto& o : outputs) {
                inequity.push_back(o.record.inequity_percent);
                rev.push_back(o.record.revenue);
                total.push_back(o.record.assigned_importance_percent);
                capacity.push_back(o.record.assigned_capacity_percent);
                for (std::size_t i = 0; i < n; ++i)
                    per_ru[i].push_back(o.record.importance_percents[i]);
            }
            cell.mean_inequity = mean(inequity);
            cell.std_inequity = std_dev(inequity);
            cell.mean_revenue = mean(rev);
            cell.std_revenue = std_dev(rev);
            for (std::size_t i = 0; i < n; ++i) {
                cell.mean_importance.push_back(mean(per_ru[i]));
                cell.std_importance.push_back(std_dev(per_ru[i]));
            }
            cell.mean_total_importance = mean(total);
            cell.std_total_importance = std_dev(total);
            cell.mean_assigned_capacity = mean(capacity);
            cell.std_assigned_capacity = std_dev(capacity);
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

std::string compare_to_csv(const std::vector<CompareCell>& cells) {
    std::size_t n = 0;
    for (const auto& c : cells) n = std::max(n, c.mean_importance.size());
    std::ostringstream os;
    os << "scenario,index,mean_inequity,std_inequity,mean_revenue,std_revenue";
    for (std::size_t i = 1; i <= n; ++i)
        os << ",mean_I" << i << ",std_I" << i;
    os << ",mean_total_importance,std_total_importance"
          ",mean_assigned_capacity,std_assigned_capacity\n";
    for (const auto& c : cells) {
        os << c.scenario_kind << ',' << c.index_kind << ','
           << format_double(c.mean_inequity) << ',' << format_double(c.std_inequity)
           << ',' << format_double(c.mean_revenue) << ','
           << format_double(c.std_revenue);
        for (std::size_t i = 0; i < n; ++i)
            os << ',' << format_double(c.mean_importance[i]) << ','
               << format_double(c.std_importance[i]);
        os << ',' << format_double(c.mean_total_importance) << ','
           << format_double(c.std_total_importance) << ','
           << format_double(c.mean_assigned_capacity) << ','
           << format_double(c.std_assigned_capacity) << '\n';
    }
    return os.str();
}

} // namespace railfair
