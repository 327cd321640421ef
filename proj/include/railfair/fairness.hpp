#pragma once

#include <limits>
#include <string>
#include <vector>

namespace railfair {

enum class IndexKind { Jain, Gini, Atkinson, RevenueOnly };

std::string to_string(IndexKind kind);
IndexKind index_kind_from_string(const std::string& name);

struct FairnessConfig {
    IndexKind index_kind = IndexKind::Jain;
    double alpha = 25.0;  // sensitivity exponent applied to importance sums
    double epsilon = 0.5; // Atkinson inequality aversion

    static double default_alpha(IndexKind kind);
};

// Elementwise x_i^alpha on importance sums in [0,1]. Order-preserving.
std::vector<double> alpha_transform(const std::vector<double>& importance_sums,
                                    double alpha);

// (Sum x)^2 / (n * Sum x^2), in [1/n, 1]. All-zero input is treated as
// perfectly equal and returns 1.
double jain(const std::vector<double>& x);

// 1 - G with G the mean-normalized pairwise-difference Gini coefficient.
// Zero-mean input returns 1.
double gini_fairness(const std::vector<double>& x);

// 1 - A(epsilon). epsilon = 1 and epsilon = infinity use their dedicated
// branches. All-zero input returns 1.
double atkinson_fairness(const std::vector<double>& x, double epsilon);

// Configured index evaluated on the alpha-transformed importance sums.
// RevenueOnly falls back to Jain, which conflict repair still needs.
double fairness_value(const std::vector<double>& importance_sums,
                      const FairnessConfig& cfg);

// 100 * PD_sum / IV_max with PD_sum the sum over unordered pairs |I_i - I_j|
// and IV_max = n^2/4 (n even) or (n^2-1)/4 (n odd).
double inequity_percent(const std::vector<double>& importance_sums);

// 100 * mean(I).
double assigned_importance_percent(const std::vector<double>& importance_sums);

// 100 * Sum(I_i * c_i) / Sum(c_i); equals assigned_importance_percent when
// all capacities are identical.
double assigned_capacity_percent(const std::vector<double>& importance_sums,
                                 const std::vector<double>& capacities);

} // namespace railfair
