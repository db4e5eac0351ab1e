// Verification suites: each check pins a predicted limit value and a
// tolerance, runs the exact recursions and/or a Monte Carlo ensemble, and
// reports pass/fail.  The CLI `verify` command and the acceptance test
// suite are both thin wrappers around these runners, so every threshold
// lives here and nowhere else.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "erw/params.hpp"

namespace erw {

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// One verification check: pass iff measured in [lo, hi].
struct CheckResult {
    std::string name;
    double measured = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Shared Monte Carlo suite options.  Zeros mean "use the suite default".
/// tolerance_scale widens every statistical band (1 = the frozen gates).
struct SuiteOptions {
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 0;
    double tolerance_scale = 1.0;
    std::uint64_t n = 0;
    std::uint64_t N = 0;
    std::uint64_t m = 0;
};

/// Diffusive CLT: alpha = 0.2, beta = 0, eps = 0; z = (S_n - E[S_n])/sd_exact
/// over m trajectories must be close to N(0,1).
/// Defaults n = 1e4, m = 5e4; gates KS < 0.015, |skew| < 0.05, |kurt-3| < 0.1.
SuiteResult verify_diffusive(const SuiteOptions& opt = {});

/// Critical CLT: alpha = 0.5; defaults n = 1e5, m = 2e4; gate KS < 0.02.
SuiteResult verify_critical(const SuiteOptions& opt = {});

/// Gaussian fluctuation around the random drift at alpha in {0.75, 0.6}
/// (n = 1e4, N = 2e5, m = 2e4): Var(T) in [0.97, 1.03], KS < 0.02, and
/// sigma_{n,N}/sigma_asym within 2% of sqrt(1 - (n/N)^(2 alpha - 1)).
SuiteResult verify_fluctuation(const SuiteOptions& opt = {});

/// W moments at alpha = 0.75 (N = 1e6, m = 1e4): mean within 3 SE of 0,
/// variance within 3 SE of the exact increment-variance sum, both signs
/// attained with empirical probability > 0.05.
SuiteResult verify_w_moments(const SuiteOptions& opt = {});

/// Decaying bias (alpha, gamma) = (0.75, 0.8) (N = 1e6, m = 1e4): mean of
/// S_N/N^alpha within 3 SE of the series constant C(alpha, beta, gamma)
/// and strictly above beta/Gamma(alpha+1).
SuiteResult verify_decaying_bias(const SuiteOptions& opt = {});

/// The three superdiffusive runs above as one suite.
SuiteResult verify_supercritical(const SuiteOptions& opt = {});

/// Deterministic phase-table checks of the decaying-bias model via exact
/// recursions at horizon n (default 1e7); no sampling.
SuiteResult verify_phase(const SuiteOptions& opt = {});

/// Exact-oracle equivalence over the fixed 3x3x3 grid
/// alpha in {0, 0.5, 0.9} x beta in {-0.5, 0, 1} x
/// schedule in {Zero, Constant(0.3), PowerLaw(0.5)}: recursion moments must
/// match Markov-DP enumeration at every n <= n_max, and the DP must match
/// full path enumeration at n <= 12.
struct OracleCheckCell {
    double alpha = 0.0;
    double beta = 0.0;
    std::string schedule;
    double max_err_mean = 0.0;
    double max_err_second = 0.0;
};

struct OracleCheckReport {
    std::uint64_t n_max = 0;
    double tolerance = 0.0;
    std::vector<OracleCheckCell> cells;
    double max_abs_err = 0.0;          // recursion vs DP, over all cells
    double dp_vs_path_max_err = 0.0;   // DP vs path enumeration at n <= 12
    bool pass = false;
};

OracleCheckReport oracle_check(std::uint64_t n_max = 16, double tolerance = 1e-10);

}  // namespace erw
