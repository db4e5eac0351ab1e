#include "erw/params.hpp"

#include <cmath>

namespace erw {

BiasSchedule BiasSchedule::constant(double eps) {
    if (!std::isfinite(eps) || eps < -1.0 || eps > 1.0)
        throw std::invalid_argument("BiasSchedule::constant: eps must be in [-1, 1]");
    BiasSchedule s;
    s.kind_ = Kind::Constant;
    s.value_ = eps;
    return s;
}

BiasSchedule BiasSchedule::power_law(double gamma) {
    if (!std::isfinite(gamma) || gamma <= 0.0)
        throw std::invalid_argument("BiasSchedule::power_law: gamma must be > 0");
    BiasSchedule s;
    s.kind_ = Kind::PowerLaw;
    s.value_ = gamma;
    return s;
}

BiasSchedule BiasSchedule::custom(std::function<double(std::uint64_t)> fn, std::string label) {
    if (!fn) throw std::invalid_argument("BiasSchedule::custom: null function");
    BiasSchedule s;
    s.kind_ = Kind::Custom;
    s.fn_ = std::move(fn);
    s.label_ = std::move(label);
    return s;
}

double BiasSchedule::limit() const {
    switch (kind_) {
        case Kind::Zero: return 0.0;
        case Kind::Constant: return value_;
        case Kind::PowerLaw: return 0.0;  // n^(-gamma) -> 0 for gamma > 0
        case Kind::Custom:
            throw std::invalid_argument("BiasSchedule::limit: unknown for custom schedules");
    }
    return 0.0;
}

bool BiasSchedule::verification_grade() const {
    switch (kind_) {
        case Kind::Zero: return true;
        case Kind::Constant: return value_ >= 0.0 && value_ < 1.0;
        case Kind::PowerLaw: return true;  // eps_n in (0, 1], limit 0
        case Kind::Custom: return false;
    }
    return false;
}

std::string BiasSchedule::describe() const {
    switch (kind_) {
        case Kind::Zero: return "zero";
        case Kind::Constant: return "constant(" + std::to_string(value_) + ")";
        case Kind::PowerLaw: return "powerlaw(" + std::to_string(value_) + ")";
        case Kind::Custom: return label_;
    }
    return "?";
}

WalkParams::WalkParams(double alpha_, double beta_, BiasSchedule schedule_)
    : alpha(alpha_), beta(beta_), schedule(std::move(schedule_)) {
    validate();
}

void WalkParams::validate() const {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("WalkParams: alpha must be in [0, 1]");
    if (!std::isfinite(beta) || beta < -1.0 || beta > 1.0)
        throw std::invalid_argument("WalkParams: beta must be in [-1, 1]");
}

void WalkParams::validate_for_verification() const {
    validate();
    if (alpha >= 1.0)
        throw std::invalid_argument(
            "WalkParams: alpha = 1 is simulable but excluded from verification");
    if (!schedule.verification_grade())
        throw std::invalid_argument(
            "WalkParams: schedule does not satisfy the theorem hypotheses "
            "(need eps_n in [0,1] with limit in [0,1))");
}

}  // namespace erw
