#include "erw/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "erw/sequences.hpp"

namespace erw {

double ExactDistribution::mean() const {
    KahanSum s;
    for (std::size_t i = 0; i < support.size(); ++i)
        s.add(probs[i] * static_cast<double>(support[i]));
    return s.value();
}

double ExactDistribution::second_moment() const {
    KahanSum s;
    for (std::size_t i = 0; i < support.size(); ++i) {
        double x = static_cast<double>(support[i]);
        s.add(probs[i] * x * x);
    }
    return s.value();
}

double ExactDistribution::total() const {
    KahanSum s;
    for (double p : probs) s.add(p);
    return s.value();
}

double path_probability(const WalkParams& params, std::span<const int> signs) {
    params.validate();
    if (signs.empty() || signs.size() > 25)
        throw std::invalid_argument("path_probability: path length must be in [1, 25]");
    for (int x : signs)
        if (x != 1 && x != -1) throw std::invalid_argument("path_probability: signs must be +-1");

    double p = 0.5 + static_cast<double>(signs[0]) * (0.5 * params.beta);
    std::int64_t s = signs[0];
    for (std::size_t i = 1; i < signs.size(); ++i) {
        double h = half_conditional_drift(params, i, s);
        p *= 0.5 + static_cast<double>(signs[i]) * h;
        s += signs[i];
    }
    return p;
}

namespace {

ExactDistribution enumerate_paths(const WalkParams& params, std::uint64_t n) {
    // S_n = n - 2 * (number of -1 steps); index by (n + S)/2
    std::vector<KahanSum> acc(n + 1);
    std::vector<int> signs(n);
    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::int64_t s = 0;
        for (std::uint64_t i = 0; i < n; ++i) {
            signs[i] = (bits >> i) & 1 ? 1 : -1;
            s += signs[i];
        }
        acc[static_cast<std::size_t>((static_cast<std::int64_t>(n) + s) / 2)].add(
            path_probability(params, signs));
    }
    ExactDistribution d;
    d.n = n;
    for (std::uint64_t k = 0; k <= n; ++k) {
        d.support.push_back(2 * static_cast<std::int64_t>(k) - static_cast<std::int64_t>(n));
        d.probs.push_back(acc[k].value());
    }
    return d;
}

ExactDistribution enumerate_dp(const WalkParams& params, std::uint64_t n) {
    // state k: distribution of S_k over index u = (k + S)/2 in [0, k]
    std::vector<double> cur(2, 0.0), next;
    cur[1] = 0.5 + 0.5 * params.beta;  // S_1 = +1
    cur[0] = 0.5 - 0.5 * params.beta;  // S_1 = -1
    for (std::uint64_t k = 1; k < n; ++k) {
        next.assign(k + 2, 0.0);
        for (std::uint64_t u = 0; u <= k; ++u) {
            double p = cur[u];
            if (p == 0.0) continue;
            std::int64_t s = 2 * static_cast<std::int64_t>(u) - static_cast<std::int64_t>(k);
            double h = half_conditional_drift(params, k, s);
            next[u + 1] += p * (0.5 + h);
            next[u] += p * (0.5 - h);
        }
        cur.swap(next);
    }
    ExactDistribution d;
    d.n = n;
    for (std::uint64_t u = 0; u <= n; ++u) {
        d.support.push_back(2 * static_cast<std::int64_t>(u) - static_cast<std::int64_t>(n));
        d.probs.push_back(cur[u]);
    }
    return d;
}

}  // namespace

ExactDistribution enumerate_distribution(const WalkParams& params, std::uint64_t n,
                                         OracleMode mode) {
    params.validate();
    if (n < 1) throw std::invalid_argument("enumerate_distribution: n must be >= 1");
    if (mode == OracleMode::PathEnumeration) {
        if (n > 20) throw std::invalid_argument("enumerate_distribution: path mode limited to n <= 20");
        return enumerate_paths(params, n);
    }
    if (n > 10000) throw std::invalid_argument("enumerate_distribution: DP mode limited to n <= 1e4");
    return enumerate_dp(params, n);
}

}  // namespace erw
