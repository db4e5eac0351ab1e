#include "erw/regime.hpp"

#include <cmath>
#include <stdexcept>

#include "erw/sequences.hpp"

namespace erw {

namespace {

// The case-(i) sub-boundary alpha = 1 - gamma is measure zero; user inputs
// like (0.7, 0.3) land within rounding of it, so both the classifier and the
// mean asymptote detect it through the same small window.
constexpr double kBoundaryTol = 1e-12;

bool on_ib_boundary(double alpha, double gamma) {
    return std::fabs(alpha + gamma - 1.0) <= kBoundaryTol;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

}  // namespace

double RegimeReport::norm_at(std::uint64_t n) const {
    double nd = static_cast<double>(n);
    double ln = std::log(nd);
    if (regime == "i-a") return std::pow(nd, 1.0 - gamma);
    if (regime == "i-b") return std::pow(nd, alpha) * ln;
    if (regime == "ii-a") return std::sqrt(nd);
    if (regime == "ii-b") return std::sqrt(nd) * ln;
    if (regime == "iii-a") return std::sqrt(nd / (1.0 - 2.0 * alpha));
    if (regime == "iii-b") return std::sqrt(nd * ln);
    // c cases: n^alpha
    return std::pow(nd, alpha);
}

std::string RegimeReport::describe() const {
    switch (limit_kind) {
        case LimitKind::L2Constant:
            return regime + ": S_n/" + normalization + " -> " + fmt(limit_constant) + " in L2";
        case LimitKind::Normal:
            return regime + ": S_n/" + normalization + " -> N(" + fmt(normal_mean) + ", " +
                   fmt(normal_var) + ")";
        case LimitKind::RandomVariable:
            return regime + ": S_n/" + normalization + " -> W_hat a.s. and in L2";
    }
    return regime;
}

RegimeReport classify_regime(double alpha, double gamma) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= 1.0)
        throw std::invalid_argument("classify_regime: alpha must be in [0, 1)");
    if (!std::isfinite(gamma) || gamma <= 0.0)
        throw std::invalid_argument("classify_regime: gamma must be > 0");

    RegimeReport r;
    r.alpha = alpha;
    r.gamma = gamma;

    if (gamma < 0.5) {
        // competition between memory and bias; sub-case boundary at 1-gamma
        if (on_ib_boundary(alpha, gamma)) {
            r.regime = "i-b";
            r.normalization = "n^" + fmt(alpha) + "*log(n)";
            r.limit_kind = LimitKind::L2Constant;
            r.limit_constant = 1.0 - alpha;
        } else if (alpha < 1.0 - gamma) {
            r.regime = "i-a";
            r.normalization = "n^" + fmt(1.0 - gamma);
            r.limit_kind = LimitKind::L2Constant;
            r.limit_constant = (1.0 - alpha) / (1.0 - gamma - alpha);
        } else {
            r.regime = "i-c";
            r.normalization = "n^" + fmt(alpha);
            r.limit_kind = LimitKind::RandomVariable;
        }
    } else if (gamma == 0.5) {
        if (alpha < 0.5) {
            r.regime = "ii-a";
            r.normalization = "sqrt(n)";
            r.limit_kind = LimitKind::Normal;
            r.normal_mean = (2.0 - 2.0 * alpha) / (1.0 - 2.0 * alpha);
            r.normal_var = 1.0 / (1.0 - 2.0 * alpha);
        } else if (alpha == 0.5) {
            r.regime = "ii-b";
            r.normalization = "sqrt(n)*log(n)";
            r.limit_kind = LimitKind::L2Constant;
            r.limit_constant = 0.5;
        } else {
            r.regime = "ii-c";
            r.normalization = "n^" + fmt(alpha);
            r.limit_kind = LimitKind::RandomVariable;
        }
    } else {
        if (alpha < 0.5) {
            r.regime = "iii-a";
            r.normalization = "sqrt(n/" + fmt(1.0 - 2.0 * alpha) + ")";
            r.limit_kind = LimitKind::Normal;
            r.normal_mean = 0.0;
            r.normal_var = 1.0;
        } else if (alpha == 0.5) {
            r.regime = "iii-b";
            r.normalization = "sqrt(n*log(n))";
            r.limit_kind = LimitKind::Normal;
            r.normal_mean = 0.0;
            r.normal_var = 1.0;
        } else {
            r.regime = "iii-c";
            r.normalization = "n^" + fmt(alpha);
            r.limit_kind = LimitKind::RandomVariable;
        }
    }
    return r;
}

double MeanAsymptote::value_at(std::uint64_t n) const {
    double nd = static_cast<double>(n);
    double v = constant * std::pow(nd, exponent);
    if (log_factor) v *= std::log(nd);
    return v;
}

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0)) throw std::invalid_argument("hurwitz_zeta: s must be > 1");
    if (!(a >= 1.0)) throw std::invalid_argument("hurwitz_zeta: a must be >= 1");

    KahanSum sum;
    while (a < 25.0) {
        sum.add(std::pow(a, -s));
        a += 1.0;
    }
    // Euler-Maclaurin tail at a: integral + half-term + Bernoulli corrections
    sum.add(std::pow(a, 1.0 - s) / (s - 1.0));
    sum.add(0.5 * std::pow(a, -s));
    // B_{2j}/(2j)! for j = 1..6
    static const double coef[6] = {1.0 / 12.0,       -1.0 / 720.0,      1.0 / 30240.0,
                                   -1.0 / 1209600.0, 1.0 / 47900160.0,  -691.0 / 1307674368000.0};
    double poch = s;                     // (s)_{2j-1}
    double apow = std::pow(a, -s - 1.0); // a^{-s-2j+1}
    for (int j = 0; j < 6; ++j) {
        sum.add(coef[j] * poch * apow);
        poch *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        apow /= a * a;
    }
    return sum.value();
}

double bias_series(double alpha, double gamma) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("bias_series: alpha must be in [0, 1]");
    if (!std::isfinite(gamma) || gamma <= 0.0)
        throw std::invalid_argument("bias_series: gamma must be > 0");
    double s = gamma + alpha;
    if (s <= 1.0)
        throw std::invalid_argument("bias_series: diverges unless gamma + alpha > 1");

    // Exact terms l = 1..L0, then the Euler-Maclaurin tail of the
    // asymptotic form l^(-gamma)/a_{l+1} = Gamma(alpha+1) *
    // (l^-s - alpha(1+alpha)/2 * l^-(s+1) + O(l^-(s+2))).
    const std::uint64_t L0 = 100000;
    KahanSum sum;
    double a_next = 1.0 + alpha;  // a_{l+1} at l = 1
    for (std::uint64_t l = 1; l <= L0; ++l) {
        sum.add(std::pow(static_cast<double>(l), -gamma) / a_next);
        a_next *= 1.0 + alpha / static_cast<double>(l + 1);
    }
    double g = std::tgamma(alpha + 1.0);
    double a0 = static_cast<double>(L0 + 1);
    double tail = g * (hurwitz_zeta(s, a0) -
                       0.5 * alpha * (1.0 + alpha) * hurwitz_zeta(s + 1.0, a0));
    return sum.value() + tail;
}

MeanAsymptote mean_asymptote(const WalkParams& params) {
    params.validate();
    if (params.schedule.kind() != BiasSchedule::Kind::PowerLaw)
        throw std::invalid_argument("mean_asymptote: requires a power-law schedule");
    double alpha = params.alpha;
    double gamma = params.schedule.gamma();

    MeanAsymptote out;
    if (on_ib_boundary(alpha, gamma)) {
        out.exponent = alpha;
        out.log_factor = true;
        out.constant = 1.0 - alpha;
    } else if (gamma < 1.0 - alpha) {
        out.exponent = 1.0 - gamma;
        out.log_factor = false;
        out.constant = (1.0 - alpha) / (1.0 - gamma - alpha);
    } else {
        out.exponent = alpha;
        out.log_factor = false;
        out.constant =
            (params.beta + (1.0 - alpha) * bias_series(alpha, gamma)) / std::tgamma(alpha + 1.0);
    }
    return out;
}

double lil_phi(double t) {
    constexpr double e = 2.718281828459045;
    if (!(t >= e)) throw std::domain_error("lil_phi: requires t >= e");
    return std::sqrt(2.0 * t * std::log(std::log(t)));
}

double lil_phi_hat(double t) {
    if (!(t > 0.0) || t == 1.0) throw std::domain_error("lil_phi_hat: requires t > 0, t != 1");
    double inner = std::log(std::fabs(std::log(t)));
    if (inner < 0.0)
        throw std::domain_error("lil_phi_hat: undefined for |log t| < 1");
    return std::sqrt(2.0 * t * inner);
}

}  // namespace erw
