#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <sstream>

#include "erw/ensemble.hpp"
#include "erw/rng.hpp"
#include "erw/sampler.hpp"
#include "erw/sequences.hpp"
#include "erw/verify.hpp"

using namespace erw;

namespace {

EnsembleConfig cfg_of(std::uint64_t m, std::uint64_t seed, unsigned workers,
                      std::uint64_t block = 1024) {
    EnsembleConfig c;
    c.m = m;
    c.master_seed = seed;
    c.workers = workers;
    c.block_size = block;
    return c;
}

}  // namespace

TEST_CASE("ensemble statistics are identical for any worker count") {
    WalkParams params(0.6, 0.1, BiasSchedule::power_law(0.7));
    std::vector<std::uint64_t> cps{10, 100, 1000};
    auto one = run_ensemble(params, cps, cfg_of(3000, 42, 1, 128));
    auto two = run_ensemble(params, cps, cfg_of(3000, 42, 2, 128));
    auto four = run_ensemble(params, cps, cfg_of(3000, 42, 4, 128));
    REQUIRE(one.trajectories == 3000);
    for (std::size_t i = 0; i < cps.size(); ++i) {
        CHECK(one.moments[i].mean() == two.moments[i].mean());        // bitwise
        CHECK(one.moments[i].variance() == two.moments[i].variance());
        CHECK(one.moments[i].kurtosis() == four.moments[i].kurtosis());
    }

    auto p1 = sample_positions(params, 500, cfg_of(2000, 7, 1, 64));
    auto p3 = sample_positions(params, 500, cfg_of(2000, 7, 3, 64));
    CHECK(p1 == p3);
}

TEST_CASE("m = 1 degenerates to a single trajectory") {
    WalkParams params(0.4, -0.3);
    std::vector<std::uint64_t> cps{1, 50, 200};
    auto stats = run_ensemble(params, cps, cfg_of(1, 99, 1));
    auto traj = simulate(params, cps, substream_seed(99, 0));
    REQUIRE(stats.trajectories == 1);
    for (std::size_t i = 0; i < cps.size(); ++i) {
        CHECK(stats.moments[i].count() == 1);
        CHECK(stats.moments[i].mean() == static_cast<double>(traj.positions[i]));
        CHECK(stats.moments[i].variance() == 0.0);
    }
}

TEST_CASE("merging disjoint ensembles equals pushing the union") {
    WalkParams params(0.3, 0.0, BiasSchedule::constant(0.2));
    std::vector<std::uint64_t> cps{64, 512};
    auto a = run_ensemble(params, cps, cfg_of(1500, 1, 2));
    auto b = run_ensemble(params, cps, cfg_of(2500, 2, 2));

    EnsembleStats merged = a;
    merged.merge(b);
    REQUIRE(merged.trajectories == 4000);

    for (std::size_t i = 0; i < cps.size(); ++i) {
        RunningMoments direct;
        for (std::int64_t s : sample_positions(params, cps[i], cfg_of(1500, 1, 2)))
            direct.push(static_cast<double>(s));
        for (std::int64_t s : sample_positions(params, cps[i], cfg_of(2500, 2, 2)))
            direct.push(static_cast<double>(s));
        CHECK(merged.moments[i].variance() ==
              doctest::Approx(direct.variance()).epsilon(1e-9));
        CHECK(merged.moments[i].mean() == doctest::Approx(direct.mean()).epsilon(1e-12));
    }

    EnsembleStats mismatched = a;
    EnsembleStats other;
    other.checkpoints = {64};
    other.moments.resize(1);
    CHECK_THROWS_AS(mismatched.merge(other), std::invalid_argument);
}

TEST_CASE("simple walk variance: Var(S_n)/n near 1") {
    WalkParams params(0.0, 0.0);
    auto stats = run_ensemble(params, {2000}, cfg_of(20000, kDefaultSeed, 0));
    CHECK(stats.moments[0].variance() / 2000.0 == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("reinforced walk variance matches the exact recursion") {
    WalkParams params(0.2, 0.0);
    const std::uint64_t n = 2000;
    auto stats = run_ensemble(params, {n}, cfg_of(20000, kDefaultSeed, 0));
    double exact = scan_moments(params, {n})[0].variance();
    CHECK(stats.moments[0].variance() == doctest::Approx(exact).epsilon(0.03));
}

TEST_CASE("supercritical fluctuation statistic: exact centering and unit variance") {
    WalkParams params(0.75, 0.0);
    auto fl = supercritical_fluctuation(params, 500, 10000, cfg_of(5000, 31337, 0));
    REQUIRE(fl.t_values.size() == 5000);
    auto mom = fl.t_moments();
    // exact normalization: mean 0 and variance 1 up to sampling error
    CHECK(std::fabs(mom.mean()) < 3.0 / std::sqrt(5000.0));
    CHECK(mom.variance() == doctest::Approx(1.0).epsilon(0.06));

    // sigma ratio approaches sqrt(1 - (n/N)^(2 alpha - 1))
    double predicted = std::sqrt(1.0 - std::pow(500.0 / 10000.0, 0.5));
    CHECK(fl.sigma_exact / fl.sigma_asym == doctest::Approx(predicted).epsilon(0.02));
}

TEST_CASE("fluctuation unit-variance identity across the reinforcement grid") {
    for (double alpha : {0.6, 0.75, 0.9}) {
        WalkParams params(alpha, 0.0);
        auto fl = supercritical_fluctuation(params, 500, 10000, cfg_of(4000, 60 + (int)(100 * alpha), 0));
        auto mom = fl.t_moments();
        CAPTURE(alpha);
        CHECK(std::fabs(mom.mean()) < 3.0 * mom.se_mean());
        CHECK(std::fabs(mom.variance() - 1.0) < 3.0 * mom.se_variance());
    }
}

TEST_CASE("supercritical fluctuation: scope rejections") {
    std::vector<std::uint64_t> dummy;
    CHECK_THROWS_AS(supercritical_fluctuation(WalkParams(0.5, 0.0), 10, 100, cfg_of(10, 1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(supercritical_fluctuation(WalkParams(0.3, 0.0), 10, 100, cfg_of(10, 1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(supercritical_fluctuation(WalkParams(1.0, 0.0), 10, 100, cfg_of(10, 1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(supercritical_fluctuation(WalkParams(0.75, 0.0), 100, 100, cfg_of(10, 1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        supercritical_fluctuation(WalkParams(0.75, 0.0, BiasSchedule::constant(-0.5)), 10, 100,
                                  cfg_of(10, 1, 1)),
        std::invalid_argument);
}

TEST_CASE("W estimators: mean zero and variance equal to the increment sum") {
    WalkParams params(0.75, 0.0);
    const std::uint64_t N = 20000;
    auto west = estimate_W(params, N, cfg_of(5000, 2718, 0));
    auto mom = west.raw_moments();
    CHECK(std::fabs(mom.mean()) < 3.0 * mom.se_mean());
    double target = scan_moments(params, {N})[0].var_m_prefix;  // Var(M_N) exactly
    CHECK(std::fabs(mom.variance() - target) < 3.0 * mom.se_variance());

    // w_hat = S_N/N^alpha tracks w_raw/Gamma(alpha+1) when beta = 0, eps = 0
    auto hat = west.hat_moments();
    CHECK(hat.variance() * std::pow(std::tgamma(1.75), 2) ==
          doctest::Approx(mom.variance()).epsilon(0.01));
}

TEST_CASE("W estimators: hypothesis rejections") {
    CHECK_THROWS_AS(estimate_W(WalkParams(0.4, 0.0), 100, cfg_of(10, 1, 1)),
                    std::invalid_argument);
    // power-law case c needs gamma + alpha > 1
    CHECK_THROWS_AS(
        estimate_W(WalkParams(0.6, 0.0, BiasSchedule::power_law(0.3)), 100, cfg_of(10, 1, 1)),
        std::invalid_argument);
    CHECK_NOTHROW(
        estimate_W(WalkParams(0.6, 0.0, BiasSchedule::power_law(0.9)), 100, cfg_of(10, 1, 1)));
}

TEST_CASE("lil diagnostic: records are finite and reproducible") {
    WalkParams params(0.0, 0.0);
    auto series = lil_diagnostic(params, 200000, 13, 3, 2, 1000);
    REQUIRE(series.size() == 3);
    for (const auto& s : series) {
        REQUIRE(!s.records.empty());
        CHECK(s.records.back().n == 200000);
        for (const auto& rec : s.records) {
            REQUIRE(std::isfinite(rec.r_plus));
            REQUIRE(std::isfinite(rec.rmax_plus));
            REQUIRE(std::isfinite(rec.rmax_minus));
            CHECK(rec.rmax_plus >= rec.r_plus);
        }
        CHECK(s.final_max_abs() > 0.0);
        CHECK(s.final_max_abs() < 3.0);
    }
    auto again = lil_diagnostic(params, 200000, 13, 3, 1, 1000);
    for (std::size_t i = 0; i < series.size(); ++i) {
        CHECK(series[i].records.back().rmax_plus == again[i].records.back().rmax_plus);
        CHECK(series[i].records.back().rmax_minus == again[i].records.back().rmax_minus);
    }
}

TEST_CASE("lil diagnostic: supercritical mode uses the drift proxy") {
    WalkParams params(0.75, 0.0);
    auto series = lil_diagnostic(params, 100000, 5, 2, 2, 1000);
    for (const auto& s : series) {
        for (const auto& rec : s.records) REQUIRE(std::isfinite(rec.r_plus));
        // the proxy recenters the path at the horizon, so R_n shrinks there
        CHECK(std::fabs(s.records.back().r_plus) < 0.5);
    }
}

TEST_CASE("csv writers emit the documented schemas") {
    WalkParams params(0.2, 0.0);
    auto stats = run_ensemble(params, {10, 100}, cfg_of(500, 3, 1));
    std::ostringstream os;
    write_checkpoint_csv(os, stats);
    auto text = os.str();
    CHECK(text.rfind("n,count,mean,var,skew,kurt,se_mean\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);

    auto fl = supercritical_fluctuation(WalkParams(0.75, 0.0), 50, 500, cfg_of(40, 1, 1));
    std::ostringstream fs;
    write_fluctuation_csv(fs, fl);
    auto fl_text = fs.str();
    CHECK(std::count(fl_text.begin(), fl_text.end(), '\n') == 41);

    std::ostringstream bs(std::ios::binary);
    write_fluctuation_binary(bs, fl);
    CHECK(bs.str().size() == 40 * sizeof(double));
}
