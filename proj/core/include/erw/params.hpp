// Model parameters for step-reinforced (elephant) random walks with a
// time-dependent bias schedule.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace erw {

/// Time-dependent bias of the non-memory step.  eps(n) is the mean of the
/// coin used to generate X_{n+1} when the walker does not consult memory,
/// for n = 1, 2, ...  Index 0 is defined to be 0 so that sums over
/// eps_l * f(l) can start at l = 0 without a special case.
class BiasSchedule {
  public:
    enum class Kind { Zero, Constant, PowerLaw, Custom };

    BiasSchedule() : kind_(Kind::Zero) {}

    static BiasSchedule zero() { return BiasSchedule(); }

    /// eps_n = eps for all n >= 1.  Requires eps in [-1, 1].
    static BiasSchedule constant(double eps);

    /// eps_n = n^(-gamma).  Requires gamma > 0.
    static BiasSchedule power_law(double gamma);

    /// Arbitrary user-supplied sequence; values must stay in [-1, 1].
    /// Not accepted by verification operations.
    static BiasSchedule custom(std::function<double(std::uint64_t)> fn,
                               std::string label = "custom");

    Kind kind() const { return kind_; }
    double constant_value() const { return value_; }
    double gamma() const { return value_; }
    const std::string& label() const { return label_; }

    double operator()(std::uint64_t n) const {
        if (n == 0) return 0.0;
        switch (kind_) {
            case Kind::Zero: return 0.0;
            case Kind::Constant: return value_;
            case Kind::PowerLaw: return std::pow(static_cast<double>(n), -value_);
            case Kind::Custom: return fn_(n);
        }
        return 0.0;
    }

    /// Limit of eps_n, used by the CLT/LIL normalizations.  Constant -> eps,
    /// Zero/PowerLaw -> 0.  Custom has no known limit; callers must reject it
    /// before asking.
    double limit() const;

    /// True if this schedule satisfies the hypotheses of the limit theorems:
    /// eps_n in [0, 1] for all n with lim eps_n in [0, 1).
    bool verification_grade() const;

    std::string describe() const;

  private:
    Kind kind_;
    double value_ = 0.0;  // Constant: eps, PowerLaw: gamma
    std::function<double(std::uint64_t)> fn_;
    std::string label_;
};

/// Full model specification: reinforcement strength alpha, first-step mean
/// beta = E[X_1], and the bias schedule of the non-memory step.
struct WalkParams {
    double alpha = 0.0;
    double beta = 0.0;
    BiasSchedule schedule;

    WalkParams() = default;
    WalkParams(double alpha_, double beta_, BiasSchedule schedule_ = BiasSchedule::zero());

    /// Probability that the first step is +1.
    double q() const { return 0.5 * (1.0 + beta); }

    double eps(std::uint64_t n) const { return schedule(n); }

    /// Throws std::invalid_argument unless alpha in [0,1] and beta in [-1,1].
    void validate() const;

    /// Stricter check for verification operations: alpha < 1 and a
    /// verification-grade schedule.  Throws std::invalid_argument.
    void validate_for_verification() const;
};

}  // namespace erw
