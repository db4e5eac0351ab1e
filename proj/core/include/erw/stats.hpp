// Statistical tests used by verification: Kolmogorov-Smirnov distance to
// the standard normal, chi-square goodness of fit, and log-log scaling
// exponent regression.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "erw/moments.hpp"

namespace erw {

/// Standard normal CDF, absolute accuracy better than 1e-12.
double normal_cdf(double x);

/// Inverse of normal_cdf (Acklam's rational approximation plus one Halley
/// refinement step).
double normal_quantile(double p);

/// two-sided empirical-CDF Kolmogorov-Smirnov distance to N(0,1):
///   D = sup_x |F_m(x) - Phi(x)|.
/// Requires m >= 100 finite samples.
double ks_distance_std_normal(std::span<const double> samples);

struct ChiSquareResult {
    double statistic = 0.0;
    std::uint64_t df = 0;
    double p_value = 0.0;
};

/// Pearson chi-square against expected cell probabilities.  Adjacent cells
/// are pooled until every retained cell has expected count >= 5 (standard
/// validity rule); df = retained cells - 1.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> expected_probs);

/// Upper tail P(X > x) for chi-square with df degrees of freedom.
double chi_square_sf(double x, double df);

struct RegressionResult {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
    std::size_t points_used = 0;
};

/// Least-squares slope of log(value) against log(time) over the last half
/// of the grid (scaling exponents are read off the asymptotic regime, not
/// the transient).  Requires >= 5 positive points.
RegressionResult exponent_regression(std::span<const double> times,
                                     std::span<const double> values);

/// Normality summary of a sample against N(0,1).
struct NormalityReport {
    std::uint64_t m = 0;
    double ks_distance = 0.0;
    double mean = 0.0, mean_se = 0.0;
    double variance = 0.0, variance_se = 0.0;
    double skewness = 0.0, skewness_se = 0.0;
    double excess_kurtosis = 0.0, excess_kurtosis_se = 0.0;
};

NormalityReport normality_report(std::span<const double> samples);

}  // namespace erw
