// Parallel Monte Carlo ensembles.  Work is partitioned into fixed blocks of
// trajectory indices; workers claim blocks dynamically but every
// per-trajectory quantity depends only on (master seed, trajectory index),
// and block results are reduced in a fixed binary tree, so the output is
// identical for any worker count.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "erw/moments.hpp"
#include "erw/params.hpp"

namespace erw {

struct EnsembleConfig {
    std::uint64_t m = 1;            // number of trajectories
    std::uint64_t master_seed = 1;
    unsigned workers = 0;           // 0 -> hardware concurrency
    std::uint64_t block_size = 1024;
};

/// Mergeable per-checkpoint statistics of an ensemble of walks.
struct EnsembleStats {
    std::vector<std::uint64_t> checkpoints;
    std::vector<RunningMoments> moments;  // one per checkpoint
    std::uint64_t trajectories = 0;

    void merge(const EnsembleStats& other);
};

/// Runs m independent trajectories and accumulates the law of S_n at each
/// checkpoint.  Deterministic in (params, checkpoints, m, master_seed).
EnsembleStats run_ensemble(const WalkParams& params,
                           const std::vector<std::uint64_t>& checkpoints,
                           const EnsembleConfig& cfg);

/// S_n for every trajectory (slot i belongs to trajectory i); used when a
/// test needs the raw sample rather than streaming moments.
std::vector<std::int64_t> sample_positions(const WalkParams& params, std::uint64_t n,
                                           const EnsembleConfig& cfg);

/// The supercritical fluctuation statistic of one ensemble:
///   T_i = (S_n - E[S_n] - M_N a_n) / sigma_{n,N},
/// where M_N = (S_N - E[S_N])/a_N is the finite-horizon proxy of W and
/// sigma^2_{n,N} = a_n^2 sum_{k=n+1}^{N} E[d_k^2] is exact, so T has mean 0
/// and variance 1 at every finite (n, N); Gaussian shape is the asymptotic
/// claim under test.
struct FluctuationResult {
    std::uint64_t n = 0;
    std::uint64_t N = 0;
    double sigma_exact = 0.0;  // sigma_{n,N}
    double sigma_asym = 0.0;   // sqrt((1-eps^2)/(2 alpha - 1) * n)
    std::vector<double> t_values;     // one per trajectory
    std::vector<double> w_estimates;  // M_N per trajectory

    RunningMoments t_moments() const;
};

/// Requires 1/2 < alpha < 1, n < N, verification-grade schedule.
FluctuationResult supercritical_fluctuation(const WalkParams& params, std::uint64_t n,
                                            std::uint64_t N, const EnsembleConfig& cfg);

/// Per-trajectory estimators of the martingale limit at horizon N:
///   w_raw = (S_N - E[S_N]) / a_N      (mean-0 proxy of W)
///   w_hat = S_N / N^alpha             (proxy of W_hat in the decaying-bias model)
struct WEstimates {
    std::uint64_t N = 0;
    std::vector<double> w_raw;
    std::vector<double> w_hat;

    RunningMoments raw_moments() const;
    RunningMoments hat_moments() const;
};

/// Requires alpha in (1/2, 1); for power-law schedules also gamma + alpha > 1.
WEstimates estimate_W(const WalkParams& params, std::uint64_t N, const EnsembleConfig& cfg);

/// Running-maximum record of the iterated-logarithm ratio, per seed.
/// Subcritical (alpha < 1/2):  R_n = (S_n - E[S_n]) / phi((1-eps^2)/(1-2a) n)
/// Critical    (alpha = 1/2):  R_n = (S_n - E[S_n]) / phi((1-eps^2) n log n)
/// Supercritical (alpha > 1/2):
///   R_n = (S_n - E[S_n] - W_proxy a_n) / (a_n phi_hat((1-eps^2)/(2a-1) n)),
/// with W_proxy = M_{n_max} from the same path.  Diagnostic output only;
/// limsup behavior is not decidable at a finite horizon.
struct LilRecord {
    std::uint64_t n = 0;
    double r_plus = 0.0;      // current +R_n
    double r_minus = 0.0;     // current -R_n
    double rmax_plus = 0.0;   // running max over steps <= n
    double rmax_minus = 0.0;
};

struct LilSeries {
    std::uint64_t seed_index = 0;
    std::uint64_t seed = 0;
    std::vector<LilRecord> records;

    double final_max_abs() const;
};

/// Runs `num_seeds` independent walks to n_max; the running maxima
/// accumulate over every step n >= n_min with the envelope argument in
/// domain, and are snapshotted at geometrically spaced times.
std::vector<LilSeries> lil_diagnostic(const WalkParams& params, std::uint64_t n_max,
                                      std::uint64_t master_seed, std::uint64_t num_seeds,
                                      unsigned workers = 0, std::uint64_t n_min = 10000);

// ---- serialization of ensemble outputs -----------------------------------

/// CSV columns: n,count,mean,var,skew,kurt,se_mean
void write_checkpoint_csv(std::ostream& os, const EnsembleStats& stats);

/// CSV with a single t_value column.
void write_fluctuation_csv(std::ostream& os, const FluctuationResult& r);

/// Flat little-endian array of float64 t-values.
void write_fluctuation_binary(std::ostream& os, const FluctuationResult& r);

/// CSV columns: seed,n,r_plus,r_minus,rmax_plus,rmax_minus
void write_lil_csv(std::ostream& os, const std::vector<LilSeries>& series);

}  // namespace erw
