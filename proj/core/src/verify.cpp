#include "erw/verify.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "erw/ensemble.hpp"
#include "erw/oracle.hpp"
#include "erw/regime.hpp"
#include "erw/rng.hpp"
#include "erw/sequences.hpp"
#include "erw/stats.hpp"

namespace erw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Timer {
  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

  private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

CheckResult band(std::string name, double measured, double lo, double hi,
                 std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.lo = lo;
    c.hi = hi;
    c.pass = std::isfinite(measured) && measured >= lo && measured <= hi;
    c.detail = std::move(detail);
    return c;
}

// z-samples (S_n - E[S_n])/sd_exact for one parameter set.
std::vector<double> exact_normalized_sample(const WalkParams& params, std::uint64_t n,
                                            const EnsembleConfig& cfg) {
    auto row = scan_moments(params, {n})[0];
    double sd = std::sqrt(row.variance());
    auto positions = sample_positions(params, n, cfg);
    std::vector<double> z(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        z[i] = (static_cast<double>(positions[i]) - row.mean) / sd;
    return z;
}

}  // namespace

SuiteResult verify_diffusive(const SuiteOptions& opt) {
    Timer timer;
    const double scale = opt.tolerance_scale;
    const std::uint64_t n = opt.n ? opt.n : 10000;
    const std::uint64_t m = opt.m ? opt.m : 50000;
    WalkParams params(0.2, 0.0, BiasSchedule::zero());
    params.validate_for_verification();

    EnsembleConfig cfg;
    cfg.m = m;
    cfg.master_seed = substream_seed(opt.seed, 1);
    cfg.workers = opt.workers;
    auto z = exact_normalized_sample(params, n, cfg);
    auto rep = normality_report(z);

    SuiteResult r;
    r.suite = "diffusive";
    r.checks.push_back(band("ks_normal", rep.ks_distance, 0.0, 0.015 * scale));
    r.checks.push_back(band("skewness", rep.skewness, -0.05 * scale, 0.05 * scale));
    r.checks.push_back(
        band("kurtosis", rep.excess_kurtosis + 3.0, 3.0 - 0.1 * scale, 3.0 + 0.1 * scale));
    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_critical(const SuiteOptions& opt) {
    Timer timer;
    const double scale = opt.tolerance_scale;
    const std::uint64_t n = opt.n ? opt.n : 100000;
    const std::uint64_t m = opt.m ? opt.m : 20000;
    WalkParams params(0.5, 0.0, BiasSchedule::zero());
    params.validate_for_verification();

    EnsembleConfig cfg;
    cfg.m = m;
    cfg.master_seed = substream_seed(opt.seed, 2);
    cfg.workers = opt.workers;
    auto z = exact_normalized_sample(params, n, cfg);
    auto rep = normality_report(z);

    SuiteResult r;
    r.suite = "critical";
    r.checks.push_back(band("ks_normal", rep.ks_distance, 0.0, 0.02 * scale));
    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_fluctuation(const SuiteOptions& opt) {
    Timer timer;
    const double scale = opt.tolerance_scale;
    const std::uint64_t n = opt.n ? opt.n : 10000;
    const std::uint64_t N = opt.N ? opt.N : 200000;
    const std::uint64_t m = opt.m ? opt.m : 20000;

    SuiteResult r;
    r.suite = "fluctuation";

    int salt = 3;
    for (double alpha : {0.75, 0.6}) {
        WalkParams params(alpha, 0.0, BiasSchedule::zero());
        EnsembleConfig cfg;
        cfg.m = m;
        cfg.master_seed = substream_seed(opt.seed, salt++);
        cfg.workers = opt.workers;
        auto fl = supercritical_fluctuation(params, n, N, cfg);
        auto mom = fl.t_moments();
        std::string tag = "[alpha=" + std::to_string(alpha).substr(0, 4) + "]";

        r.checks.push_back(band("fluct_var" + tag, mom.variance(), 1.0 - 0.03 * scale,
                                1.0 + 0.03 * scale));
        r.checks.push_back(
            band("fluct_ks" + tag, ks_distance_std_normal(fl.t_values), 0.0, 0.02 * scale));
        double predicted =
            std::sqrt(1.0 - std::pow(static_cast<double>(n) / static_cast<double>(N),
                                     2.0 * alpha - 1.0));
        r.checks.push_back(band("sigma_ratio" + tag, fl.sigma_exact / fl.sigma_asym,
                                predicted * (1.0 - 0.02 * scale),
                                predicted * (1.0 + 0.02 * scale)));
    }
    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_w_moments(const SuiteOptions& opt) {
    Timer timer;
    const double scale = opt.tolerance_scale;
    const std::uint64_t N = opt.N ? opt.N : 1000000;
    const std::uint64_t m = opt.m ? opt.m : 10000;

    SuiteResult r;
    r.suite = "w-moments";

    WalkParams params(0.75, 0.0, BiasSchedule::zero());
    EnsembleConfig cfg;
    cfg.m = m;
    cfg.master_seed = substream_seed(opt.seed, 5);
    cfg.workers = opt.workers;
    auto west = estimate_W(params, N, cfg);
    auto mom = west.raw_moments();
    double target_var = scan_moments(params, {N})[0].var_m_prefix;

    r.checks.push_back(band("w_mean", mom.mean(), -3.0 * scale * mom.se_mean(),
                            3.0 * scale * mom.se_mean()));
    r.checks.push_back(band("w_var", mom.variance(),
                            target_var - 3.0 * scale * mom.se_variance(),
                            target_var + 3.0 * scale * mom.se_variance()));
    double plus = 0.0;
    for (double w : west.w_raw) plus += w > 0.0 ? 1.0 : 0.0;
    double p_plus = plus / static_cast<double>(west.w_raw.size());
    r.checks.push_back(band("w_sign_plus", p_plus, 0.05, 1.0));
    r.checks.push_back(band("w_sign_minus", 1.0 - p_plus, 0.05, 1.0));

    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_decaying_bias(const SuiteOptions& opt) {
    Timer timer;
    const double scale = opt.tolerance_scale;
    const std::uint64_t N = opt.N ? opt.N : 1000000;
    const std::uint64_t m = opt.m ? opt.m : 10000;

    SuiteResult r;
    r.suite = "decaying-bias";

    WalkParams params(0.75, 0.0, BiasSchedule::power_law(0.8));
    EnsembleConfig cfg;
    cfg.m = m;
    cfg.master_seed = substream_seed(opt.seed, 6);
    cfg.workers = opt.workers;
    auto west = estimate_W(params, N, cfg);
    auto mom = west.hat_moments();
    double c_target = mean_asymptote(params).constant;

    r.checks.push_back(band("what_mean", mom.mean(),
                            c_target - 3.0 * scale * mom.se_mean(),
                            c_target + 3.0 * scale * mom.se_mean()));
    double lower = params.beta / std::tgamma(params.alpha + 1.0);
    CheckResult strict = band("what_above_beta_bound", mom.mean(), lower, kInf);
    strict.pass = strict.pass && mom.mean() > lower;
    r.checks.push_back(strict);

    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_supercritical(const SuiteOptions& opt) {
    Timer timer;
    SuiteResult r;
    r.suite = "supercritical";
    for (const auto& part :
         {verify_fluctuation(opt), verify_w_moments(opt), verify_decaying_bias(opt)})
        r.checks.insert(r.checks.end(), part.checks.begin(), part.checks.end());
    r.seconds = timer.seconds();
    return r;
}

SuiteResult verify_phase(const SuiteOptions& opt) {
    Timer timer;
    const double scale = opt.tolerance_scale;
    const std::uint64_t n_end = opt.n ? opt.n : 10000000;

    SuiteResult r;
    r.suite = "phase";

    auto scan_cell = [&](double alpha, double gamma) {
        WalkParams params(alpha, 0.0, BiasSchedule::power_law(gamma));
        auto cps = geometric_checkpoints(100, n_end);
        return std::make_pair(params, scan_moments(params, cps));
    };
    auto rel_band = [&](std::string name, double measured, double target, double rel) {
        return band(std::move(name), measured, target * (1.0 - rel * scale),
                    target * (1.0 + rel * scale));
    };

    const double nd = static_cast<double>(n_end);

    {  // (i)a  (0.4, 0.3): S_n/n^0.7 ->L2 2
        auto [params, rows] = scan_cell(0.4, 0.3);
        auto rep = classify_regime(0.4, 0.3);
        r.checks.push_back(band("ia_regime_label", rep.regime == "i-a" ? 1.0 : 0.0, 1.0, 1.0,
                                rep.regime));
        const MomentRow& last = rows.back();
        double norm = std::pow(nd, 0.7);
        r.checks.push_back(rel_band("ia_mean_const", last.mean / norm, 2.0, 0.03));

        // L2 distance E[(S_n/n^0.7 - 2)^2]: below 0.05 at the horizon and
        // decreasing across the last decade
        auto l2_dist = [](const MomentRow& row) {
            double nn = std::pow(static_cast<double>(row.n), 0.7);
            return row.second / (nn * nn) - 4.0 * row.mean / nn + 4.0;
        };
        r.checks.push_back(band("ia_l2_dist", l2_dist(last), 0.0, 0.05 * scale));
        double worst_increase = -kInf;
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
            if (rows[i].n < n_end / 10) continue;
            worst_increase = std::max(worst_increase, l2_dist(rows[i + 1]) - l2_dist(rows[i]));
        }
        r.checks.push_back(band("ia_l2_decreasing", worst_increase, -kInf, 0.0));
    }
    {  // (i)b  (0.7, 0.3): S_n/(n^0.7 log n) ->L2 0.3
        auto [params, rows] = scan_cell(0.7, 0.3);
        auto rep = classify_regime(0.7, 0.3);
        r.checks.push_back(band("ib_regime_label", rep.regime == "i-b" ? 1.0 : 0.0, 1.0, 1.0,
                                rep.regime));
        double norm = std::pow(nd, 0.7) * std::log(nd);
        r.checks.push_back(rel_band("ib_mean_const", rows.back().mean / norm, 0.3, 0.10));
    }
    {  // (ii)a (0.25, 0.5): S_n/sqrt(n) -> N(3, 2)
        auto [params, rows] = scan_cell(0.25, 0.5);
        auto rep = classify_regime(0.25, 0.5);
        r.checks.push_back(band("iia_regime_label", rep.regime == "ii-a" ? 1.0 : 0.0, 1.0, 1.0,
                                rep.regime));
        const MomentRow& last = rows.back();
        r.checks.push_back(rel_band("iia_mean_const", last.mean / std::sqrt(nd), 3.0, 0.05));
        r.checks.push_back(rel_band("iia_var_const", last.variance() / nd, 2.0, 0.05));
    }
    {  // (ii)b (0.5, 0.5): S_n/(sqrt(n) log n) ->L2 1/2
        auto [params, rows] = scan_cell(0.5, 0.5);
        auto rep = classify_regime(0.5, 0.5);
        r.checks.push_back(band("iib_regime_label", rep.regime == "ii-b" ? 1.0 : 0.0, 1.0, 1.0,
                                rep.regime));
        double norm = std::sqrt(nd) * std::log(nd);
        r.checks.push_back(rel_band("iib_mean_const", rows.back().mean / norm, 0.5, 0.10));
    }
    {  // (iii)a (0.2, 0.8): Var(S_n) scales linearly
        auto [params, rows] = scan_cell(0.2, 0.8);
        auto rep = classify_regime(0.2, 0.8);
        r.checks.push_back(band("iiia_regime_label", rep.regime == "iii-a" ? 1.0 : 0.0, 1.0, 1.0,
                                rep.regime));
        std::vector<double> times, vars;
        for (const auto& row : rows) {
            times.push_back(static_cast<double>(row.n));
            vars.push_back(row.variance());
        }
        auto fit = exponent_regression(times, vars);
        r.checks.push_back(band("iiia_var_slope", fit.slope, 1.0 - 0.02 * scale,
                                1.0 + 0.02 * scale));
    }

    r.seconds = timer.seconds();
    return r;
}

OracleCheckReport oracle_check(std::uint64_t n_max, double tolerance) {
    OracleCheckReport rep;
    rep.n_max = n_max;
    rep.tolerance = tolerance;

    const double alphas[] = {0.0, 0.5, 0.9};
    const double betas[] = {-0.5, 0.0, 1.0};
    const BiasSchedule schedules[] = {BiasSchedule::zero(), BiasSchedule::constant(0.3),
                                      BiasSchedule::power_law(0.5)};

    for (double alpha : alphas) {
        for (double beta : betas) {
            for (const auto& schedule : schedules) {
                WalkParams params(alpha, beta, schedule);
                auto tables = SequenceTables::build(params, n_max);

                OracleCheckCell cell;
                cell.alpha = alpha;
                cell.beta = beta;
                cell.schedule = schedule.describe();
                for (std::uint64_t n = 1; n <= n_max; ++n) {
                    auto dist = enumerate_distribution(params, n, OracleMode::MarkovDP);
                    cell.max_err_mean =
                        std::max(cell.max_err_mean, std::fabs(dist.mean() - tables.mean[n]));
                    cell.max_err_second = std::max(
                        cell.max_err_second,
                        std::fabs(dist.second_moment() - tables.second_moment[n]));
                }
                rep.max_abs_err =
                    std::max({rep.max_abs_err, cell.max_err_mean, cell.max_err_second});

                // independent cross-check of the DP against raw path sums
                auto dp12 = enumerate_distribution(params, 12, OracleMode::MarkovDP);
                auto path12 = enumerate_distribution(params, 12, OracleMode::PathEnumeration);
                for (std::size_t i = 0; i < dp12.probs.size(); ++i)
                    rep.dp_vs_path_max_err = std::max(
                        rep.dp_vs_path_max_err, std::fabs(dp12.probs[i] - path12.probs[i]));

                rep.cells.push_back(std::move(cell));
            }
        }
    }
    rep.pass = rep.max_abs_err < tolerance && rep.dp_vs_path_max_err < 1e-12;
    return rep;
}

}  // namespace erw
