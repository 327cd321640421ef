#include "railfair/fairness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace railfair {

std::string to_string(IndexKind kind) {
    switch (kind) {
        case IndexKind::Jain: return "jain";
        case IndexKind::Gini: return "gini";
        case IndexKind::Atkinson: return "atkinson";
        case IndexKind::RevenueOnly: return "revenue";
    }
    throw std::logic_error("unknown index kind");
}

IndexKind index_kind_from_string(const std::string& name) {
    if (name == "jain") return IndexKind::Jain;
    if (name == "gini") return IndexKind::Gini;
    if (name == "atkinson") return IndexKind::Atkinson;
    if (name == "revenue") return IndexKind::RevenueOnly;
    throw std::invalid_argument("unknown fairness index: " + name);
}

double FairnessConfig::default_alpha(IndexKind kind) {
    return kind == IndexKind::Gini ? 10.0 : 25.0;
}

std::vector<double> alpha_transform(const std::vector<double>& importance_sums,
                                    double alpha) {
    if (alpha < 1.0) throw std::domain_error("alpha must be >= 1");
    std::vector<double> out;
    out.reserve(importance_sums.size());
    for (double v : importance_sums) {
        if (v < 0.0) throw std::domain_error("importance sums must be non-negative");
        out.push_back(std::pow(v, alpha));
    }
    return out;
}

double jain(const std::vector<double>& x) {
    if (x.empty()) throw std::domain_error("jain needs at least one entry");
    double sum = 0.0, sum_sq = 0.0;
    for (double v : x) {
        if (v < 0.0) throw std::domain_error("jain needs non-negative entries");
        sum += v;
        sum_sq += v * v;
    }
    if (sum_sq == 0.0) return 1.0; // everyone equally has nothing
    return (sum * sum) / (static_cast<double>(x.size()) * sum_sq);
}

double gini_fairness(const std::vector<double>& x) {
    if (x.empty()) throw std::domain_error("gini needs at least one entry");
    const double n = static_cast<double>(x.size());
    double sum = 0.0;
    for (double v : x) {
        if (v < 0.0) throw std::domain_error("gini needs non-negative entries");
        sum += v;
    }
    if (sum == 0.0) return 1.0;
    const double mean = sum / n;
    double diff = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) diff += std::abs(x[i] - x[j]);
    const double g = diff / (2.0 * n * n * mean);
    return 1.0 - g;
}

double atkinson_fairness(const std::vector<double>& x, double epsilon) {
    if (x.empty()) throw std::domain_error("atkinson needs at least one entry");
    if (epsilon <= 0.0) throw std::domain_error("epsilon must be positive");
    const double n = static_cast<double>(x.size());
    double sum = 0.0;
    for (double v : x) {
        if (v < 0.0) throw std::domain_error("atkinson needs non-negative entries");
        sum += v;
    }
    if (sum == 0.0) return 1.0;
    const double mean = sum / n;

    double ede; // equally distributed equivalent
    if (std::isinf(epsilon)) {
        ede = *std::min_element(x.begin(), x.end());
    } else if (epsilon == 1.0) {
        double log_sum = 0.0;
        for (double v : x) {
            if (v <= 0.0) return 0.0; // geometric mean collapses to zero
            log_sum += std::log(v);
        }
        ede = std::exp(log_sum / n);
    } else {
        double p = 0.0;
        for (double v : x) p += std::pow(v, 1.0 - epsilon);
        ede = std::pow(p / n, 1.0 / (1.0 - epsilon));
    }
    const double a = 1.0 - ede / mean;
    return 1.0 - a;
}

double fairness_value(const std::vector<double>& importance_sums,
                      const FairnessConfig& cfg) {
    const auto x = alpha_transform(importance_sums, cfg.alpha);
    switch (cfg.index_kind) {
        case IndexKind::Jain:
        case IndexKind::RevenueOnly:
            return jain(x);
        case IndexKind::Gini:
            return gini_fairness(x);
        case IndexKind::Atkinson:
            return atkinson_fairness(x, cfg.epsilon);
    }
    throw std::logic_error("unknown index kind");
}

double inequity_percent(const std::vector<double>& importance_sums) {
    const std::size_t n = importance_sums.size();
    if (n < 2) throw std::domain_error("inequity needs at least two entries");
    double pd_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pd_sum += std::abs(importance_sums[i] - importance_sums[j]);
    const double nn = static_cast<double>(n);
    const double iv_max = (n % 2 == 0) ? nn * nn / 4.0 : (nn * nn - 1.0) / 4.0;
    return 100.0 * pd_sum / iv_max;
}

double assigned_importance_percent(const std::vector<double>& importance_sums) {
    if (importance_sums.empty())
        throw std::domain_error("assigned importance needs at least one entry");
    const double total =
        std::accumulate(importance_sums.begin(), importance_sums.end(), 0.0);
    return 100.0 * total / static_cast<double>(importance_sums.size());
}

double assigned_capacity_percent(const std::vector<double>& importance_sums,
                                 const std::vector<double>& capacities) {
    if (importance_sums.size() != capacities.size())
        throw std::invalid_argument("importance and capacity lengths differ");
    if (importance_sums.empty())
        throw std::domain_error("assigned capacity needs at least one entry");
    double weighted = 0.0, cap_sum = 0.0;
    for (std::size_t i = 0; i < capacities.size(); ++i) {
        weighted += importance_sums[i] * capacities[i];
        cap_sum += capacities[i];
    }
    if (cap_sum == 0.0) throw std::domain_error("capacities sum to zero");
    return 100.0 * weighted / cap_sum;
}

} // namespace railfair
