#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "erw/rng.hpp"
#include "erw/sequences.hpp"

using namespace erw;

namespace {

WalkParams make(double alpha, double beta, BiasSchedule s = BiasSchedule::zero()) {
    return WalkParams(alpha, beta, std::move(s));
}

double rel_err(double a, double b) {
    double scale = std::max(std::fabs(a), std::fabs(b));
    return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

}  // namespace

TEST_CASE("growth factor: defining product") {
    // empty product at alpha = 0
    for (std::uint64_t n : {1ull, 5ull, 100ull, 10000ull})
        CHECK(std::exp(log_growth_factor(0.0, n)) == doctest::Approx(1.0).epsilon(1e-14));
    // alpha = 1 collapses to n
    for (std::uint64_t n : {1ull, 2ull, 7ull, 1000ull})
        CHECK(std::exp(log_growth_factor(1.0, n)) == doctest::Approx((double)n).epsilon(1e-12));
    // two-factor product: (1 + 0.5)(1 + 0.25)
    CHECK(growth_factor_product(0.5, 3) == doctest::Approx(1.875).epsilon(1e-15));
    CHECK(std::exp(log_growth_factor(0.5, 3)) == doctest::Approx(1.875).epsilon(1e-13));
}

TEST_CASE("growth factor: product vs Gamma ratio to 1e-10 up to n = 1e4") {
    for (double alpha = 0.0; alpha <= 1.0; alpha += 0.1) {
        double prod = 1.0;
        double worst = 0.0;
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            worst = std::max(worst, rel_err(prod, std::exp(log_growth_factor(alpha, n))));
            prod *= 1.0 + alpha / static_cast<double>(n);
        }
        CAPTURE(alpha);
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("growth factor: a_n Gamma(alpha+1)/n^alpha -> 1") {
    for (double alpha : {0.25, 0.5, 0.75}) {
        double ratio = std::exp(log_growth_factor(alpha, 1000000) + std::lgamma(alpha + 1.0) -
                                alpha * std::log(1e6));
        CHECK(ratio > 0.999);
        CHECK(ratio < 1.001);
    }
}

TEST_CASE("growth factor: second-moment sequence exponents above 1") {
    // a'_n uses the same code with parameter 2 alpha in (1, 2]
    for (double c : {1.2, 1.5, 1.9, 2.0}) {
        double prod = 1.0;
        double worst = 0.0;
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            worst = std::max(worst, rel_err(prod, std::exp(log_growth_factor(c, n))));
            prod *= 1.0 + c / static_cast<double>(n);
        }
        CAPTURE(c);
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("sequence tables: normalization and monotonicity") {
    auto t = SequenceTables::build(WalkParams(0.75, 0.2, BiasSchedule::constant(0.3)), 5000);
    CHECK(t.log_a[0] == 0.0);   // a_0 = 1
    CHECK(t.log_a2[0] == 0.0);  // a'_0 = 1
    CHECK(t.log_a[1] == doctest::Approx(0.0).epsilon(1e-14));
    for (std::uint64_t n = 1; n < 5000; ++n) {
        CHECK(t.log_a[n + 1] >= t.log_a[n]);
        CHECK(t.log_a2[n + 1] >= t.log_a2[n]);
        CHECK(t.log_a2[n] >= t.log_a[n]);  // 2 alpha grows at least as fast
    }
}

TEST_CASE("conditional step probability") {
    CHECK(conditional_step_probability(make(0.5, 0.0), 4, 2) == doctest::Approx(0.625).epsilon(1e-15));
    // no reinforcement: (1 + eps)/2 regardless of s
    auto p_free = make(0.0, 0.0, BiasSchedule::constant(0.4));
    for (std::int64_t s : {-4ll, -2ll, 0ll, 2ll, 4ll})
        CHECK(conditional_step_probability(p_free, 4, s) == doctest::Approx(0.7).epsilon(1e-15));
    // full reinforcement of an all-plus history
    CHECK(conditional_step_probability(make(1.0, 0.0), 5, 5) == 1.0);
    CHECK(conditional_step_probability(make(1.0, 0.0), 5, -5) == 0.0);

    CHECK_THROWS_AS(conditional_step_probability(make(0.5, 0.0), 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(conditional_step_probability(make(0.5, 0.0), 4, 6), std::invalid_argument);
    CHECK_THROWS_AS(conditional_step_probability(make(0.5, 0.0), 0, 0), std::invalid_argument);

    // signed half-drift is an exact negation under mirror
    auto p = make(0.37, 0.0);
    for (std::int64_t s : {1ll, 3ll, 5ll, 7ll})
        CHECK(half_conditional_drift(p, 7, s) == -half_conditional_drift(p, 7, -s));
}

TEST_CASE("exact mean: trivial closed forms") {
    // eps = 0: E[S_n] = beta a_n
    auto t = SequenceTables::build(make(0.5, 1.0), 64);
    CHECK(t.mean[2] == doctest::Approx(1.5).epsilon(1e-15));
    for (std::uint64_t n = 1; n <= 64; ++n)
        CHECK(rel_err(t.mean[n], std::exp(t.log_a[n])) < 1e-12);

    // independent steps: E[S_n] = beta + (n-1) eps
    auto t2 = SequenceTables::build(make(0.0, -0.25, BiasSchedule::constant(0.3)), 100);
    for (std::uint64_t n = 1; n <= 100; ++n)
        CHECK(t2.mean[n] ==
              doctest::Approx(-0.25 + 0.3 * static_cast<double>(n - 1)).epsilon(1e-13));
}

TEST_CASE("exact mean: recursion matches summed closed form everywhere") {
    auto bumpy = BiasSchedule::custom(
        [](std::uint64_t n) { return 0.7 * std::sin(static_cast<double>(n)); }, "sin");
    const BiasSchedule schedules[] = {BiasSchedule::zero(), BiasSchedule::constant(0.3),
                                      BiasSchedule::constant(-0.6),
                                      BiasSchedule::power_law(0.6), bumpy};
    for (double alpha : {0.0, 0.3, 0.7, 0.95, 1.0}) {
        for (double beta : {-1.0, -0.3, 0.0, 0.6, 1.0}) {
            for (const auto& sched : schedules) {
                WalkParams params(alpha, beta, sched);
                auto tables = SequenceTables::build(params, 2000);
                auto closed = closed_form_mean(params, 2000);
                double worst = 0.0;
                for (std::uint64_t n = 1; n <= 2000; ++n)
                    worst = std::max(worst, rel_err(tables.mean[n], closed[n]));
                CAPTURE(alpha);
                CAPTURE(beta);
                CHECK(worst < 1e-10);
            }
        }
    }
}

TEST_CASE("second moment: simple walk and diffusive limit") {
    auto t = SequenceTables::build(make(0.0, 0.0), 1000);
    for (std::uint64_t n = 1; n <= 1000; ++n)
        CHECK(t.second_moment[n] == static_cast<double>(n));  // exact in fp

    // E[S_n^2] (1-2 alpha)/n -> 1 for alpha = 0.2
    auto row = scan_moments(make(0.2, 0.0), {1000000}).back();
    CHECK(row.second * 0.6 / 1e6 == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("step variances") {
    // iid symmetric steps: a_k = 1 and E[d_k^2] = 1
    auto t = SequenceTables::build(make(0.0, 0.0), 50);
    for (std::uint64_t k = 1; k <= 50; ++k) CHECK(t.step_var[k] == doctest::Approx(1.0));

    // deterministic first step
    CHECK(SequenceTables::build(make(0.3, 1.0), 10).step_var[1] == 0.0);
    CHECK(SequenceTables::build(make(0.3, -1.0), 10).step_var[1] == 0.0);

    // alpha = 1, beta = 1: every step is deterministic; the exact value is 0
    // and rounding residue of the k^2 recursion stays below 1e-15
    auto t1 = SequenceTables::build(make(1.0, 1.0), 200);
    for (std::uint64_t k = 1; k <= 200; ++k) {
        CHECK(t1.step_var[k] >= 0.0);
        CHECK(t1.step_var[k] < 1e-15);
    }
}

TEST_CASE("telescoping: prefix sums of E[d_k^2] equal Var(M_n)") {
    const BiasSchedule schedules[] = {BiasSchedule::zero(), BiasSchedule::constant(0.3),
                                      BiasSchedule::power_law(0.5)};
    for (double alpha : {0.0, 0.2, 0.5, 0.75, 0.9}) {
        for (double beta : {-0.5, 0.0, 1.0}) {
            for (const auto& sched : schedules) {
                auto t = SequenceTables::build(WalkParams(alpha, beta, sched), 10000);
                double worst = 0.0;
                for (std::uint64_t n = 1; n <= 10000; ++n) {
                    double a_n = std::exp(t.log_a[n]);
                    double var_m = t.variance(n) / (a_n * a_n);
                    worst = std::max(worst, rel_err(var_m, t.var_m_prefix[n]));
                }
                CAPTURE(alpha);
                CAPTURE(beta);
                CHECK(worst < 1e-9);
            }
        }
    }
}

TEST_CASE("Var(M_n) is nondecreasing and Var(S_n) >= 0") {
    SplitMix64 rng(7);
    for (int rep = 0; rep < 25; ++rep) {
        double alpha = rng.next_double();
        double beta = 2.0 * rng.next_double() - 1.0;
        double eps = rng.next_double() * 0.99;
        auto t = SequenceTables::build(WalkParams(alpha, beta, BiasSchedule::constant(eps)), 3000);
        double prev = 0.0;
        for (std::uint64_t n = 1; n <= 3000; ++n) {
            double var_s = t.variance(n);
            CHECK(var_s >= -1e-9);
            double a_n = std::exp(t.log_a[n]);
            double var_m = var_s / (a_n * a_n);
            CHECK(var_m >= prev - 1e-12 * std::max(1.0, prev));
            prev = var_m;
        }
    }
}

TEST_CASE("tail sums and fluctuation scale") {
    auto t = SequenceTables::build(make(0.75, 0.0), 20000);
    // s_n^2 is decreasing in n and positive
    CHECK(t.tail_step_var(1) > t.tail_step_var(100));
    CHECK(t.tail_step_var(100) > t.tail_step_var(10000));
    CHECK(t.tail_step_var(20000) == t.step_var[20000]);
    // sigma^2_{n,N} = a_n^2 (VarM_N - VarM_n)
    double sig2 = t.fluctuation_sigma2(100, 20000);
    double a100 = t.a(100);
    CHECK(sig2 ==
          doctest::Approx(a100 * a100 * (t.var_m_prefix[20000] - t.var_m_prefix[100])));
    CHECK_THROWS_AS(t.fluctuation_sigma2(200, 100), std::invalid_argument);
}

TEST_CASE("scan_moments agrees with full tables at checkpoints") {
    WalkParams params(0.6, -0.4, BiasSchedule::power_law(0.7));
    auto tables = SequenceTables::build(params, 5000);
    auto rows = scan_moments(params, {1, 2, 17, 100, 4999, 5000});
    for (const auto& row : rows) {
        CHECK(row.mean == tables.mean[row.n]);
        CHECK(row.second == tables.second_moment[row.n]);
        CHECK(row.step_var == tables.step_var[row.n]);
        CHECK(row.log_a == doctest::Approx(tables.log_a[row.n]).epsilon(1e-9));
        CHECK(row.var_m_prefix == doctest::Approx(tables.var_m_prefix[row.n]).epsilon(1e-12));
    }
}

TEST_CASE("geometric checkpoints") {
    auto cps = geometric_checkpoints(1, 1000, 1.5);
    CHECK(cps.front() == 1);
    CHECK(cps.back() == 1000);
    for (std::size_t i = 1; i < cps.size(); ++i) CHECK(cps[i] > cps[i - 1]);
    CHECK_THROWS_AS(geometric_checkpoints(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(geometric_checkpoints(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(geometric_checkpoints(1, 10, 1.0), std::invalid_argument);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(SequenceTables::build(make(0.5, 0.0), 0), std::invalid_argument);
    CHECK_THROWS_AS(WalkParams(1.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(WalkParams(-0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(WalkParams(0.5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(BiasSchedule::constant(1.5), std::invalid_argument);
    CHECK_THROWS_AS(BiasSchedule::power_law(0.0), std::invalid_argument);
    CHECK_THROWS_AS(log_growth_factor(std::nan(""), 5), std::invalid_argument);
    CHECK_THROWS_AS(scan_moments(make(0.5, 0.0), {}), std::invalid_argument);
    CHECK_THROWS_AS(scan_moments(make(0.5, 0.0), {5, 3}), std::invalid_argument);

    // verification-grade gate
    CHECK_NOTHROW(make(0.5, 0.0, BiasSchedule::power_law(0.8)).validate_for_verification());
    CHECK_THROWS_AS(make(1.0, 0.0).validate_for_verification(), std::invalid_argument);
    CHECK_THROWS_AS(make(0.5, 0.0, BiasSchedule::constant(-0.2)).validate_for_verification(),
                    std::invalid_argument);
    CHECK_THROWS_AS(make(0.5, 0.0, BiasSchedule::constant(1.0)).validate_for_verification(),
                    std::invalid_argument);
}
