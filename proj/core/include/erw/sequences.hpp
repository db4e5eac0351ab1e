// Exact deterministic sequences of the model: the reinforcement growth
// factors a_n and a'_n, the moment recursions E[S_n], E[S_n^2], the
// martingale increment variances E[d_k^2], and their tail sums.
#pragma once

#include <cstdint>
#include <vector>

#include "erw/params.hpp"

namespace erw {

/// Compensated (Kahan) accumulator for long sums.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

/// log a_n = log Gamma(n+alpha) - log Gamma(n) - log Gamma(alpha+1), n >= 1.
/// a_0 = 1 by convention.  Evaluated in log space so n ~ 1e7 cannot overflow.
double log_growth_factor(double alpha, std::uint64_t n);

/// a_n via the defining product prod_{k<n} (1 + alpha/k).  Overflows for
/// large n * alpha; intended as a cross-check for n <= ~1e4.
double growth_factor_product(double alpha, std::uint64_t n);

/// Half of the conditional drift, h = (alpha * s/n + (1-alpha) * eps_n) / 2,
/// so that P(X_{n+1} = x | S_n = s) = 1/2 + x * h for x = +-1.  Computed in
/// this signed form, h(n, -s) is the exact negation of h(n, s) whenever
/// eps_n = 0, which makes mirror symmetry of the enumeration oracle exact
/// in floating point.  Requires n >= 1, |s| <= n, n + s even.
double half_conditional_drift(const WalkParams& params, std::uint64_t n, std::int64_t s);

/// Conditional probability P(X_{n+1} = +1 | S_n = s)
///   = alpha * ((n+s)/2) / n + (1-alpha) * (1+eps_n)/2
///   = 1/2 + half_conditional_drift(n, s), clamped to [0, 1].
/// Requires n >= 1, |s| <= n, and n + s even (s reachable at time n).
double conditional_step_probability(const WalkParams& params, std::uint64_t n, std::int64_t s);

/// Precomputed exact sequences for n = 0..n_max.  Index n is time n.
/// Immutable after construction; safe to share across threads.
struct SequenceTables {
    WalkParams params;
    std::uint64_t n_max = 0;

    std::vector<double> log_a;          // log a_n
    std::vector<double> log_a2;         // log a'_n  (exponent 2*alpha)
    std::vector<double> mean;           // E[S_n]
    std::vector<double> second_moment;  // E[S_n^2]
    std::vector<double> step_var;       // E[d_n^2], step_var[0] = 0
    std::vector<double> var_m_prefix;   // sum_{k<=n} E[d_k^2] = Var(M_n)

    static SequenceTables build(const WalkParams& params, std::uint64_t n_max);

    double a(std::uint64_t n) const { return std::exp(log_a[n]); }
    double a2(std::uint64_t n) const { return std::exp(log_a2[n]); }
    double variance(std::uint64_t n) const {
        return second_moment[n] - mean[n] * mean[n];
    }
    /// Truncated tail sum s_n^2 = sum_{k=n}^{n_max} E[d_k^2].
    double tail_step_var(std::uint64_t n) const {
        return var_m_prefix[n_max] - var_m_prefix[n] + step_var[n];
    }
    /// Exact variance of a_n * (M_N - M_n) = S_n - E[S_n] - M_N a_n:
    /// sigma^2_{n,N} = a_n^2 * sum_{k=n+1}^{N} E[d_k^2].
    double fluctuation_sigma2(std::uint64_t n, std::uint64_t N) const;
};

/// One row of the streaming scan: exact moments at a checkpoint.
struct MomentRow {
    std::uint64_t n = 0;
    double log_a = 0.0;   // log a_n
    double mean = 0.0;    // E[S_n]
    double second = 0.0;  // E[S_n^2]
    double step_var = 0.0;       // E[d_n^2]
    double var_m_prefix = 0.0;   // sum_{k<=n} E[d_k^2]

    double variance() const { return second - mean * mean; }
};

/// Runs the moment recursions up to max(checkpoints) with O(1) state and
/// returns one row per checkpoint.  This is how horizons of 1e7+ are scanned
/// without allocating full tables.  checkpoints must be sorted, >= 1.
std::vector<MomentRow> scan_moments(const WalkParams& params,
                                    const std::vector<std::uint64_t>& checkpoints);

/// E[S_n] by the summed closed form
///   beta a_n + (1-alpha) a_n sum_{l=1}^{n-1} eps_l / a_{l+1},
/// independent of the forward recursion; used to cross-check it.
std::vector<double> closed_form_mean(const WalkParams& params, std::uint64_t n_max);

/// Geometric checkpoint grid {floor(c * ratio^j)} intersected with
/// [n_min, n_max], deduplicated, always containing n_max.
std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n_min, std::uint64_t n_max,
                                                 double ratio = 1.5);

}  // namespace erw
