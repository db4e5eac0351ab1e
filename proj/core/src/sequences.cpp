#include "erw/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace erw {

double log_growth_factor(double alpha, std::uint64_t n) {
    if (!std::isfinite(alpha)) throw std::invalid_argument("log_growth_factor: alpha not finite");
    if (n == 0) return 0.0;
    double x = static_cast<double>(n);
    return std::lgamma(x + alpha) - std::lgamma(x) - std::lgamma(alpha + 1.0);
}

double growth_factor_product(double alpha, std::uint64_t n) {
    double a = 1.0;
    for (std::uint64_t k = 1; k < n; ++k) a *= 1.0 + alpha / static_cast<double>(k);
    return a;
}

double half_conditional_drift(const WalkParams& params, std::uint64_t n, std::int64_t s) {
    params.validate();
    if (n < 1) throw std::invalid_argument("half_conditional_drift: n must be >= 1");
    std::int64_t ni = static_cast<std::int64_t>(n);
    if (s > ni || s < -ni || ((ni + s) & 1) != 0)
        throw std::invalid_argument("half_conditional_drift: (n, s) not reachable");
    double drift = params.alpha * (static_cast<double>(s) / static_cast<double>(n)) +
                   (1.0 - params.alpha) * params.eps(n);
    return std::clamp(0.5 * drift, -0.5, 0.5);
}

double conditional_step_probability(const WalkParams& params, std::uint64_t n, std::int64_t s) {
    return std::clamp(0.5 + half_conditional_drift(params, n, s), 0.0, 1.0);
}

namespace {

// Forward state of the moment recursions:
//   E[S_{n+1}]   = (1 + alpha/n)  E[S_n]   + (1-alpha) eps_n
//   E[S_{n+1}^2] = (1 + 2alpha/n) E[S_n^2] + 2(1-alpha) eps_n E[S_n] + 1
// with E[S_1] = beta, E[S_1^2] = 1, and
//   E[d_{n+1}^2] = (1 - E[(alpha S_n/n + (1-alpha) eps_n)^2]) / a_{n+1}^2,
//   E[d_1^2]     = 1 - beta^2.
struct MomentCursor {
    const WalkParams& p;
    std::uint64_t n = 1;
    double mean;
    double second;
    double log_a = 0.0;       // log a_n; a_1 = 1
    double step_var;          // E[d_n^2]
    KahanSum var_m;           // sum_{k<=n} E[d_k^2]

    explicit MomentCursor(const WalkParams& params)
        : p(params), mean(params.beta), second(1.0),
          step_var(1.0 - params.beta * params.beta) {
        var_m.add(step_var);
    }

    void advance() {
        double nd = static_cast<double>(n);
        double eps_n = p.eps(n);
        double one_m_alpha = 1.0 - p.alpha;
        double log_a_next = log_a + std::log1p(p.alpha / nd);

        // conditional mean of X_{n+1} squared, in expectation
        double m_over_n = mean / nd;
        double s2_over_n2 = second / (nd * nd);
        double drift2 = p.alpha * p.alpha * s2_over_n2 +
                        2.0 * p.alpha * one_m_alpha * eps_n * m_over_n +
                        one_m_alpha * one_m_alpha * eps_n * eps_n;
        double dvar = (1.0 - drift2) * std::exp(-2.0 * log_a_next);
        // drift2 can exceed 1 by rounding only when the step is deterministic
        // (exact value 0); anything clearly negative is a numerical fault.
        if (dvar < 0.0) {
            if (dvar < -1e-12) throw std::runtime_error("step variance went negative");
            dvar = 0.0;
        }

        double next_mean = (1.0 + p.alpha / nd) * mean + one_m_alpha * eps_n;
        double next_second =
            (1.0 + 2.0 * p.alpha / nd) * second + 2.0 * one_m_alpha * eps_n * mean + 1.0;

        n += 1;
        mean = next_mean;
        second = next_second;
        log_a = log_a_next;
        step_var = dvar;
        var_m.add(dvar);
    }

    MomentRow row() const {
        return MomentRow{n, log_a, mean, second, step_var, var_m.value()};
    }
};

}  // namespace

SequenceTables SequenceTables::build(const WalkParams& params, std::uint64_t n_max) {
    params.validate();
    if (n_max < 1) throw std::invalid_argument("SequenceTables: n_max must be >= 1");

    SequenceTables t;
    t.params = params;
    t.n_max = n_max;
    t.log_a.resize(n_max + 1);
    t.log_a2.resize(n_max + 1);
    t.mean.resize(n_max + 1);
    t.second_moment.resize(n_max + 1);
    t.step_var.resize(n_max + 1);
    t.var_m_prefix.resize(n_max + 1);

    for (std::uint64_t n = 0; n <= n_max; ++n) {
        t.log_a[n] = log_growth_factor(params.alpha, n);
        t.log_a2[n] = log_growth_factor(2.0 * params.alpha, n);
    }

    t.mean[0] = 0.0;
    t.second_moment[0] = 0.0;
    t.step_var[0] = 0.0;
    t.var_m_prefix[0] = 0.0;

    MomentCursor cur(params);
    t.mean[1] = cur.mean;
    t.second_moment[1] = cur.second;
    t.step_var[1] = cur.step_var;
    t.var_m_prefix[1] = cur.var_m.value();
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        cur.advance();
        t.mean[n] = cur.mean;
        t.second_moment[n] = cur.second;
        t.step_var[n] = cur.step_var;
        t.var_m_prefix[n] = cur.var_m.value();
    }
    return t;
}

double SequenceTables::fluctuation_sigma2(std::uint64_t n, std::uint64_t N) const {
    if (n >= N || N > n_max)
        throw std::invalid_argument("fluctuation_sigma2: need n < N <= n_max");
    double a_n = a(n);
    return a_n * a_n * (var_m_prefix[N] - var_m_prefix[n]);
}

std::vector<MomentRow> scan_moments(const WalkParams& params,
                                    const std::vector<std::uint64_t>& checkpoints) {
    params.validate();
    if (checkpoints.empty()) throw std::invalid_argument("scan_moments: no checkpoints");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::invalid_argument("scan_moments: checkpoints must be sorted");
    if (checkpoints.front() < 1) throw std::invalid_argument("scan_moments: checkpoints start at 1");

    std::vector<MomentRow> rows;
    rows.reserve(checkpoints.size());
    MomentCursor cur(params);
    for (std::uint64_t cp : checkpoints) {
        while (cur.n < cp) cur.advance();
        rows.push_back(cur.row());
    }
    return rows;
}

std::vector<double> closed_form_mean(const WalkParams& params, std::uint64_t n_max) {
    params.validate();
    if (n_max < 1) throw std::invalid_argument("closed_form_mean: n_max must be >= 1");
    std::vector<double> out(n_max + 1);
    out[0] = 0.0;
    // E[S_n] = a_n * (beta + (1-alpha) * sum_{l=1}^{n-1} eps_l / a_{l+1})
    KahanSum sum;
    double log_a_next = 0.0;  // log a_{l+1}, starting at l = 0 -> log a_1 = 0
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        double log_a_n = log_a_next;
        out[n] = std::exp(log_a_n) * (params.beta + (1.0 - params.alpha) * sum.value());
        // extend the sum with the l = n term for the next iterate
        log_a_next = log_a_n + std::log1p(params.alpha / static_cast<double>(n));
        sum.add(params.eps(n) * std::exp(-log_a_next));
    }
    return out;
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t n_min, std::uint64_t n_max,
                                                 double ratio) {
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("geometric_checkpoints: bad range");
    if (ratio <= 1.0) throw std::invalid_argument("geometric_checkpoints: ratio must be > 1");
    std::vector<std::uint64_t> cps;
    double x = static_cast<double>(n_min);
    while (true) {
        auto n = static_cast<std::uint64_t>(x);
        if (n >= n_max) break;
        if (cps.empty() || n > cps.back()) cps.push_back(n);
        x *= ratio;
    }
    cps.push_back(n_max);
    return cps;
}

}  // namespace erw
