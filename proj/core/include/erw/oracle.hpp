// Exact ground truth for small horizons: the law of S_n computed without
// sampling, either by summing all 2^n sign paths or by dynamic programming
// over the Markov state (n, S_n).  The two routes are independent of the
// moment recursions and of each other, so each can validate the rest.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "erw/params.hpp"

namespace erw {

/// Exact law of S_n: support[i] carries probs[i], support is
/// {-n, -n+2, ..., n}.
struct ExactDistribution {
    std::uint64_t n = 0;
    std::vector<std::int64_t> support;
    std::vector<double> probs;

    double mean() const;
    double second_moment() const;
    double total() const;
};

/// Probability of one sign path (X_1, ..., X_k): the first-step probability
/// times the conditional probabilities along the path.  length in [1, 25].
double path_probability(const WalkParams& params, std::span<const int> signs);

enum class OracleMode { PathEnumeration, MarkovDP };

/// PathEnumeration sums all 2^n paths (n <= 20); MarkovDP propagates the
/// distribution over reachable (step, S) states in O(n^2) (n <= 1e4).
ExactDistribution enumerate_distribution(const WalkParams& params, std::uint64_t n,
                                         OracleMode mode = OracleMode::MarkovDP);

}  // namespace erw
