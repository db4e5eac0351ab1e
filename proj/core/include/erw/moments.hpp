// Streaming central moments (count, mean, M2, M3, M4) with exact pairwise
// merge, after Welford/Chan/Pebay.  Merging disjoint accumulators gives the
// same result as a single pass over the union, so ensembles can be reduced
// in parallel without precision loss.
#pragma once

#include <cmath>
#include <cstdint>

namespace erw {

class RunningMoments {
  public:
    void push(double x) {
        double n1 = static_cast<double>(n_);
        n_ += 1;
        double n = static_cast<double>(n_);
        double delta = x - m1_;
        double delta_n = delta / n;
        double delta_n2 = delta_n * delta_n;
        double term1 = delta * delta_n * n1;
        m1_ += delta_n;
        m4_ += term1 * delta_n2 * (n * n - 3.0 * n + 3.0) + 6.0 * delta_n2 * m2_ -
               4.0 * delta_n * m3_;
        m3_ += term1 * delta_n * (n - 2.0) - 3.0 * delta_n * m2_;
        m2_ += term1;
    }

    void merge(const RunningMoments& o) {
        if (o.n_ == 0) return;
        if (n_ == 0) {
            *this = o;
            return;
        }
        double na = static_cast<double>(n_);
        double nb = static_cast<double>(o.n_);
        double n = na + nb;
        double delta = o.m1_ - m1_;
        double d2 = delta * delta;

        double m2 = m2_ + o.m2_ + d2 * na * nb / n;
        double m3 = m3_ + o.m3_ + delta * d2 * na * nb * (na - nb) / (n * n) +
                    3.0 * delta * (na * o.m2_ - nb * m2_) / n;
        double m4 = m4_ + o.m4_ +
                    d2 * d2 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                    6.0 * d2 * (na * na * o.m2_ + nb * nb * m2_) / (n * n) +
                    4.0 * delta * (na * o.m3_ - nb * m3_) / n;

        m1_ += delta * nb / n;
        m2_ = m2;
        m3_ = m3;
        m4_ = m4;
        n_ += o.n_;
    }

    std::uint64_t count() const { return n_; }
    double mean() const { return m1_; }

    /// Unbiased sample variance M2/(n-1).
    double variance() const { return n_ > 1 ? m2_ / (static_cast<double>(n_) - 1.0) : 0.0; }
    double population_variance() const { return n_ > 0 ? m2_ / static_cast<double>(n_) : 0.0; }
    double stddev() const { return std::sqrt(variance()); }

    double skewness() const {
        if (n_ < 2 || m2_ <= 0.0) return 0.0;
        double n = static_cast<double>(n_);
        return std::sqrt(n) * m3_ / std::pow(m2_, 1.5);
    }
    /// Pearson kurtosis (3 for a normal law).
    double kurtosis() const {
        if (n_ < 2 || m2_ <= 0.0) return 0.0;
        return static_cast<double>(n_) * m4_ / (m2_ * m2_);
    }
    double excess_kurtosis() const { return kurtosis() - 3.0; }

    double se_mean() const { return n_ > 1 ? stddev() / std::sqrt(static_cast<double>(n_)) : 0.0; }
    /// Standard error of the sample variance from the sample's own fourth
    /// moment: sqrt((m4 - sigma^4 (n-3)/(n-1)) / n).
    double se_variance() const {
        if (n_ < 4) return 0.0;
        double n = static_cast<double>(n_);
        double s2 = m2_ / n;
        double m4 = m4_ / n;
        double v = (m4 - s2 * s2 * (n - 3.0) / (n - 1.0)) / n;
        return v > 0.0 ? std::sqrt(v) : 0.0;
    }
    // Normal-theory standard errors, adequate for report columns.
    double se_skewness() const { return n_ > 0 ? std::sqrt(6.0 / static_cast<double>(n_)) : 0.0; }
    double se_kurtosis() const { return n_ > 0 ? std::sqrt(24.0 / static_cast<double>(n_)) : 0.0; }

  private:
    std::uint64_t n_ = 0;
    double m1_ = 0.0;
    double m2_ = 0.0;
    double m3_ = 0.0;
    double m4_ = 0.0;
};

}  // namespace erw
