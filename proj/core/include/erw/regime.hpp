// Phase classification for the polynomially decaying bias model
// eps_n = n^(-gamma), the asymptotic law of E[S_n], and the iterated-
// logarithm envelopes.
#pragma once

#include <cstdint>
#include <string>

#include "erw/params.hpp"

namespace erw {

enum class LimitKind { L2Constant, Normal, RandomVariable };

/// One cell of the (alpha, gamma) phase table.  The label partitions
/// {alpha in [0,1), gamma > 0} into nine cases: i/ii/iii by gamma against
/// 1/2, sub-case a/b/c by alpha against the case boundary (1-gamma for
/// case i, 1/2 otherwise).
struct RegimeReport {
    double alpha = 0.0;
    double gamma = 0.0;
    std::string regime;         // "i-a", ..., "iii-c"
    std::string normalization;  // human-readable scaling sequence
    LimitKind limit_kind = LimitKind::L2Constant;

    // L2Constant: S_n / norm -> limit_constant in L2.
    double limit_constant = 0.0;
    // Normal: S_n / norm -> N(normal_mean, normal_var) in distribution.
    double normal_mean = 0.0;
    double normal_var = 0.0;

    /// Numeric value of the normalization sequence at time n.
    double norm_at(std::uint64_t n) const;
    std::string describe() const;
};

/// Classifies (alpha, gamma) into its phase cell.  Requires alpha in [0,1)
/// and gamma > 0.
RegimeReport classify_regime(double alpha, double gamma);

/// Asymptote of E[S_n] for the power-law schedule (exact-mean growth law):
/// E[S_n] ~ constant * n^exponent * (log n if log_factor).
struct MeanAsymptote {
    double exponent = 0.0;
    bool log_factor = false;
    double constant = 0.0;

    double value_at(std::uint64_t n) const;
};

/// Requires params.schedule to be PowerLaw.  For gamma > 1-alpha the
/// constant is C(alpha, beta, gamma) = (beta + (1-alpha) * sum_{l>=1}
/// eps_l / a_{l+1}) / Gamma(alpha+1), evaluated to ~1e-10 absolute.
MeanAsymptote mean_asymptote(const WalkParams& params);

/// sum_{l>=1} l^(-gamma) / a_{l+1}; converges iff gamma + alpha > 1.
double bias_series(double alpha, double gamma);

/// Hurwitz zeta sum_{k>=0} (k+a)^(-s) for s > 1, a >= 1 (Euler-Maclaurin).
double hurwitz_zeta(double s, double a);

/// Iterated-logarithm envelopes.
/// phi(t) = sqrt(2 t log log t), defined for t >= e (0 at the boundary).
double lil_phi(double t);
/// phi_hat(t) = sqrt(2 t log |log t|), defined for t > 0, t != 1, wherever
/// the inner logarithm is nonnegative (|log t| >= 1).
double lil_phi_hat(double t);

}  // namespace erw
