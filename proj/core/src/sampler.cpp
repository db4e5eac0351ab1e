#include "erw/sampler.hpp"

#include <algorithm>
#include <stdexcept>

#include "erw/sequences.hpp"

namespace erw {

int sample_first_step(const WalkParams& params, SplitMix64& rng) {
    return rng.next_double() < params.q() ? 1 : -1;
}

int next_step(const WalkParams& params, std::uint64_t n, std::int64_t s, SplitMix64& rng) {
    double p_up = conditional_step_probability(params, n, s);
    return rng.next_double() < p_up ? 1 : -1;
}

StepTables::StepTables(const WalkParams& params, std::uint64_t n_max) {
    // alpha = 1 stays on the direct formula so that p_up is exactly 1 at the
    // all-plus boundary; tabulation would round alpha/(2n) * n away from 1/2.
    if (params.alpha >= 1.0 || n_max > kTableCap) return;

    half_coef_.resize(n_max);
    half_coef_[0] = 0.0;
    for (std::uint64_t n = 1; n < n_max; ++n)
        half_coef_[n] = 0.5 * params.alpha / static_cast<double>(n);

    switch (params.schedule.kind()) {
        case BiasSchedule::Kind::Zero:
            half_bias_const_ = 0.5;
            break;
        case BiasSchedule::Kind::Constant:
            half_bias_const_ =
                0.5 + 0.5 * (1.0 - params.alpha) * params.schedule.constant_value();
            break;
        default:
            half_bias_.resize(n_max);
            half_bias_[0] = 0.5;
            for (std::uint64_t n = 1; n < n_max; ++n)
                half_bias_[n] = 0.5 + 0.5 * (1.0 - params.alpha) * params.eps(n);
            break;
    }
}

Trajectory simulate(const WalkParams& params, const std::vector<std::uint64_t>& checkpoints,
                    std::uint64_t seed) {
    params.validate();
    if (checkpoints.empty()) throw std::invalid_argument("simulate: empty checkpoint list");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::invalid_argument("simulate: checkpoints must be sorted");
    if (checkpoints.front() < 1) throw std::invalid_argument("simulate: checkpoints start at 1");

    Trajectory t;
    t.params = params;
    t.seed = seed;
    t.checkpoints = checkpoints;
    t.positions.reserve(checkpoints.size());

    StepTables tables(params, checkpoints.back());
    run_walk(params, tables, checkpoints.data(), checkpoints.data() + checkpoints.size(),
             SplitMix64(seed),
             [&](std::uint64_t, std::int64_t s) { t.positions.push_back(s); });
    return t;
}

}  // namespace erw
