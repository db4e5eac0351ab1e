// Trajectory generation.  The conditional law of the next step depends on
// the history only through (n, S_n), so a walk of any length runs in O(1)
// memory; the full history is never stored.
#pragma once

#include <cstdint>
#include <vector>

#include "erw/params.hpp"
#include "erw/rng.hpp"

namespace erw {

/// Positions of one walk at the requested checkpoint times.
struct Trajectory {
    WalkParams params;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> checkpoints;  // sorted times in [1, n_max]
    std::vector<std::int64_t> positions;     // S_n at each checkpoint
};

/// First step: +1 with probability (1+beta)/2.
int sample_first_step(const WalkParams& params, SplitMix64& rng);

/// Step X_{n+1} given S_n = s; +1 with conditional_step_probability(n, s).
int next_step(const WalkParams& params, std::uint64_t n, std::int64_t s, SplitMix64& rng);

/// Runs the walk to max(checkpoints) from the given seed.  checkpoints must
/// be nonempty, sorted, and >= 1.  Identical (params, seed, checkpoints)
/// always reproduce identical positions.
Trajectory simulate(const WalkParams& params, const std::vector<std::uint64_t>& checkpoints,
                    std::uint64_t seed);

/// Per-run precomputation for the stepping loop, shared read-only by all
/// workers of an ensemble.  In tabulated mode the up-probability is
/// evaluated as  p = S_n * half_coef[n] + half_bias[n]  with
/// half_coef[n] = alpha/(2n) and half_bias[n] = (1 + (1-alpha) eps_n)/2.
/// alpha = 1 and very long horizons use the direct formula instead, which
/// keeps boundary cases (p exactly 0 or 1) exact.
class StepTables {
  public:
    // n_max above which tables are not built (memory cap)
    static constexpr std::uint64_t kTableCap = 1ULL << 25;

    StepTables(const WalkParams& params, std::uint64_t n_max);

    bool tabulated() const { return !half_coef_.empty(); }
    const double* half_coef() const { return half_coef_.data(); }
    const double* half_bias_table() const {
        return half_bias_.empty() ? nullptr : half_bias_.data();
    }
    double half_bias_const() const { return half_bias_const_; }

  private:
    std::vector<double> half_coef_;  // index n in [1, n_max)
    std::vector<double> half_bias_;  // empty for Zero/Constant schedules
    double half_bias_const_ = 0.5;
};

/// Core stepping loop shared by simulate() and the ensemble workers.
/// Calls `record(n, S_n)` for every checkpoint time in order.
template <class Record>
void run_walk(const WalkParams& params, const StepTables& tables,
              const std::uint64_t* cp_begin, const std::uint64_t* cp_end, SplitMix64 rng,
              Record&& record) {
    std::int64_t s = rng.next_double() < params.q() ? 1 : -1;
    const std::uint64_t* cp = cp_begin;
    std::uint64_t n = 1;
    while (cp != cp_end && *cp == 1) {
        record(n, s);
        ++cp;
    }
    const std::uint64_t n_max = cp_end == cp_begin ? 1 : *(cp_end - 1);

    if (tables.tabulated()) {
        const double* hc = tables.half_coef();
        const double* hb = tables.half_bias_table();
        if (hb == nullptr) {
            const double bias = tables.half_bias_const();
            while (n < n_max) {
                double p_up = static_cast<double>(s) * hc[n] + bias;
                s += rng.next_double() < p_up ? 1 : -1;
                ++n;
                while (cp != cp_end && *cp == n) {
                    record(n, s);
                    ++cp;
                }
            }
        } else {
            while (n < n_max) {
                double p_up = static_cast<double>(s) * hc[n] + hb[n];
                s += rng.next_double() < p_up ? 1 : -1;
                ++n;
                while (cp != cp_end && *cp == n) {
                    record(n, s);
                    ++cp;
                }
            }
        }
    } else {
        const double alpha = params.alpha;
        const double one_m_alpha = 1.0 - alpha;
        while (n < n_max) {
            double drift = alpha * (static_cast<double>(s) / static_cast<double>(n)) +
                           one_m_alpha * params.eps(n);
            double p_up = 0.5 * (1.0 + drift);
            s += rng.next_double() < p_up ? 1 : -1;
            ++n;
            while (cp != cp_end && *cp == n) {
                record(n, s);
                ++cp;
            }
        }
    }
}

}  // namespace erw
