#include "erw/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace erw {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_quantile: p must be in (0,1)");

    // Acklam's rational approximation (relative error < 1.15e-9)
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // one Halley step against the exact CDF
    double e = normal_cdf(x) - p;
    double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

double ks_distance_std_normal(std::span<const double> samples) {
    const std::size_t m = samples.size();
    if (m < 100) throw std::invalid_argument("ks_distance_std_normal: need m >= 100");
    std::vector<double> sorted(samples.begin(), samples.end());
    for (double x : sorted)
        if (!std::isfinite(x))
            throw std::invalid_argument("ks_distance_std_normal: non-finite sample");
    std::sort(sorted.begin(), sorted.end());

    double d = 0.0;
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
        double cdf = normal_cdf(sorted[i]);
        double above = static_cast<double>(i + 1) * inv_m - cdf;
        double below = cdf - static_cast<double>(i) * inv_m;
        d = std::max({d, above, below});
    }
    return d;
}

namespace {

// Regularized incomplete gamma functions (series + continued fraction),
// Numerical Recipes style.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_contfrac(double a, double x) {
    const double fpmin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < fpmin) d = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double chi_square_sf(double x, double df) {
    if (x < 0.0 || df <= 0.0) throw std::invalid_argument("chi_square_sf: bad arguments");
    if (x == 0.0) return 1.0;
    double a = 0.5 * df;
    double xx = 0.5 * x;
    return xx < a + 1.0 ? 1.0 - gamma_p_series(a, xx) : gamma_q_contfrac(a, xx);
}

ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> expected_probs) {
    if (observed.size() != expected_probs.size())
        throw std::invalid_argument("chi_square_gof: mismatched lengths");
    if (observed.empty()) throw std::invalid_argument("chi_square_gof: empty input");

    double total = 0.0;
    for (std::uint64_t o : observed) total += static_cast<double>(o);

    // pool adjacent cells until each retained cell has expected count >= 5
    std::vector<double> obs_cells, exp_cells;
    double o_acc = 0.0, e_acc = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        o_acc += static_cast<double>(observed[i]);
        e_acc += expected_probs[i] * total;
        if (e_acc >= 5.0) {
            obs_cells.push_back(o_acc);
            exp_cells.push_back(e_acc);
            o_acc = e_acc = 0.0;
        }
    }
    if (o_acc > 0.0 || e_acc > 0.0) {
        if (!exp_cells.empty()) {
            obs_cells.back() += o_acc;
            exp_cells.back() += e_acc;
        } else {
            obs_cells.push_back(o_acc);
            exp_cells.push_back(e_acc);
        }
    }

    ChiSquareResult r;
    for (std::size_t i = 0; i < obs_cells.size(); ++i) {
        if (exp_cells[i] <= 0.0) {
            if (obs_cells[i] > 0.0)
                throw std::invalid_argument("chi_square_gof: observed mass in zero-probability cell");
            continue;
        }
        double diff = obs_cells[i] - exp_cells[i];
        r.statistic += diff * diff / exp_cells[i];
        r.df += 1;
    }
    if (r.df < 2) throw std::invalid_argument("chi_square_gof: fewer than two usable cells");
    r.df -= 1;
    r.p_value = chi_square_sf(r.statistic, static_cast<double>(r.df));
    return r;
}

RegressionResult exponent_regression(std::span<const double> times,
                                     std::span<const double> values) {
    if (times.size() != values.size())
        throw std::invalid_argument("exponent_regression: mismatched lengths");
    if (times.size() < 5) throw std::invalid_argument("exponent_regression: need >= 5 points");

    // fit over the last half of the grid
    std::size_t start = times.size() / 2;
    if (times.size() - start < 3) start = times.size() - 3;

    double sx = 0.0, sy = 0.0;
    std::size_t k = times.size() - start;
    std::vector<double> lx(k), ly(k);
    for (std::size_t i = 0; i < k; ++i) {
        double t = times[start + i];
        double v = values[start + i];
        if (!(t > 0.0) || !(v > 0.0))
            throw std::invalid_argument("exponent_regression: nonpositive point");
        lx[i] = std::log(t);
        ly[i] = std::log(v);
        sx += lx[i];
        sy += ly[i];
    }
    double mx = sx / static_cast<double>(k);
    double my = sy / static_cast<double>(k);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("exponent_regression: degenerate time grid");

    RegressionResult r;
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    r.points_used = k;
    if (k > 2) {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double resid = ly[i] - (r.intercept + r.slope * lx[i]);
            ss_res += resid * resid;
        }
        r.slope_se = std::sqrt(ss_res / (static_cast<double>(k - 2) * sxx));
    }
    return r;
}

NormalityReport normality_report(std::span<const double> samples) {
    NormalityReport rep;
    rep.m = samples.size();
    rep.ks_distance = ks_distance_std_normal(samples);
    RunningMoments m;
    for (double x : samples) m.push(x);
    rep.mean = m.mean();
    rep.mean_se = m.se_mean();
    rep.variance = m.variance();
    rep.variance_se = m.se_variance();
    rep.skewness = m.skewness();
    rep.skewness_se = m.se_skewness();
    rep.excess_kurtosis = m.excess_kurtosis();
    rep.excess_kurtosis_se = m.se_kurtosis();
    return rep;
}

}  // namespace erw
