#include "erw/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "erw/regime.hpp"
#include "erw/rng.hpp"
#include "erw/sampler.hpp"
#include "erw/sequences.hpp"

namespace erw {

namespace {

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs fn(block_index, first, last) over the fixed partition of [0, m)
/// into blocks of block_size, using `workers` threads.  The first worker
/// exception is rethrown after all threads join.
template <class Fn>
void for_each_block(std::uint64_t m, std::uint64_t block_size, unsigned workers, Fn&& fn) {
    const std::uint64_t num_blocks = (m + block_size - 1) / block_size;
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::uint64_t b = next.fetch_add(1);
            if (b >= num_blocks) break;
            try {
                fn(b, b * block_size, std::min(m, (b + 1) * block_size));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
            }
        }
    };

    unsigned w = std::min<std::uint64_t>(resolve_workers(workers), num_blocks);
    if (w <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(w);
        for (unsigned i = 0; i < w; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace

void EnsembleStats::merge(const EnsembleStats& other) {
    if (checkpoints.empty()) {
        *this = other;
        return;
    }
    if (other.checkpoints != checkpoints)
        throw std::invalid_argument("EnsembleStats::merge: checkpoint grids differ");
    for (std::size_t i = 0; i < moments.size(); ++i) moments[i].merge(other.moments[i]);
    trajectories += other.trajectories;
}

EnsembleStats run_ensemble(const WalkParams& params,
                           const std::vector<std::uint64_t>& checkpoints,
                           const EnsembleConfig& cfg) {
    params.validate();
    if (cfg.m < 1) throw std::invalid_argument("run_ensemble: m must be >= 1");
    if (checkpoints.empty()) throw std::invalid_argument("run_ensemble: empty checkpoint list");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::invalid_argument("run_ensemble: checkpoints must be sorted");
    if (checkpoints.front() < 1) throw std::invalid_argument("run_ensemble: checkpoints start at 1");

    const StepTables tables(params, checkpoints.back());
    const std::uint64_t num_blocks = (cfg.m + cfg.block_size - 1) / cfg.block_size;
    std::vector<EnsembleStats> blocks(num_blocks);

    for_each_block(cfg.m, cfg.block_size, cfg.workers,
                   [&](std::uint64_t b, std::uint64_t first, std::uint64_t last) {
        EnsembleStats local;
        local.checkpoints = checkpoints;
        local.moments.resize(checkpoints.size());
        for (std::uint64_t i = first; i < last; ++i) {
            std::size_t slot = 0;
            run_walk(params, tables, checkpoints.data(), checkpoints.data() + checkpoints.size(),
                     substream(cfg.master_seed, i), [&](std::uint64_t, std::int64_t s) {
                         local.moments[slot++].push(static_cast<double>(s));
                     });
            local.trajectories += 1;
        }
        blocks[b] = std::move(local);
    });

    // fixed binary reduction tree over block index
    while (blocks.size() > 1) {
        std::vector<EnsembleStats> up;
        up.reserve((blocks.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < blocks.size(); i += 2) {
            blocks[i].merge(blocks[i + 1]);
            up.push_back(std::move(blocks[i]));
        }
        if (blocks.size() % 2 == 1) up.push_back(std::move(blocks.back()));
        blocks = std::move(up);
    }
    return std::move(blocks.front());
}

std::vector<std::int64_t> sample_positions(const WalkParams& params, std::uint64_t n,
                                           const EnsembleConfig& cfg) {
    params.validate();
    if (n < 1 || cfg.m < 1) throw std::invalid_argument("sample_positions: need n >= 1, m >= 1");
    const std::vector<std::uint64_t> cps{n};
    const StepTables tables(params, n);
    std::vector<std::int64_t> out(cfg.m);
    for_each_block(cfg.m, cfg.block_size, cfg.workers,
                   [&](std::uint64_t, std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t i = first; i < last; ++i) {
            run_walk(params, tables, cps.data(), cps.data() + 1, substream(cfg.master_seed, i),
                     [&](std::uint64_t, std::int64_t s) { out[i] = s; });
        }
    });
    return out;
}

RunningMoments FluctuationResult::t_moments() const {
    RunningMoments m;
    for (double t : t_values) m.push(t);
    return m;
}

FluctuationResult supercritical_fluctuation(const WalkParams& params, std::uint64_t n,
                                            std::uint64_t N, const EnsembleConfig& cfg) {
    params.validate_for_verification();
    if (!(params.alpha > 0.5))
        throw std::invalid_argument(
            "supercritical_fluctuation: requires alpha > 1/2 (statistic undefined otherwise)");
    if (!(n >= 1 && n < N))
        throw std::invalid_argument("supercritical_fluctuation: requires 1 <= n < N");
    if (cfg.m < 1) throw std::invalid_argument("supercritical_fluctuation: m must be >= 1");

    const std::vector<std::uint64_t> cps{n, N};
    const auto rows = scan_moments(params, cps);
    const MomentRow& row_n = rows[0];
    const MomentRow& row_N = rows[1];
    const double a_n = std::exp(row_n.log_a);
    const double a_N = std::exp(row_N.log_a);
    const double sigma2 = a_n * a_n * (row_N.var_m_prefix - row_n.var_m_prefix);
    if (!(sigma2 > 0.0))
        throw std::runtime_error("supercritical_fluctuation: degenerate sigma_{n,N}");
    const double sigma = std::sqrt(sigma2);
    const double eps_inf = params.schedule.limit();
    const double sigma_asym =
        std::sqrt((1.0 - eps_inf * eps_inf) / (2.0 * params.alpha - 1.0) * static_cast<double>(n));

    FluctuationResult out;
    out.n = n;
    out.N = N;
    out.sigma_exact = sigma;
    out.sigma_asym = sigma_asym;
    out.t_values.resize(cfg.m);
    out.w_estimates.resize(cfg.m);

    const StepTables tables(params, N);
    for_each_block(cfg.m, cfg.block_size, cfg.workers,
                   [&](std::uint64_t, std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t i = first; i < last; ++i) {
            std::int64_t s_n = 0, s_N = 0;
            run_walk(params, tables, cps.data(), cps.data() + cps.size(),
                     substream(cfg.master_seed, i), [&](std::uint64_t t, std::int64_t s) {
                         (t == n ? s_n : s_N) = s;
                     });
            double m_N = (static_cast<double>(s_N) - row_N.mean) / a_N;
            out.w_estimates[i] = m_N;
            out.t_values[i] =
                (static_cast<double>(s_n) - row_n.mean - m_N * a_n) / sigma;
        }
    });
    return out;
}

RunningMoments WEstimates::raw_moments() const {
    RunningMoments m;
    for (double w : w_raw) m.push(w);
    return m;
}

RunningMoments WEstimates::hat_moments() const {
    RunningMoments m;
    for (double w : w_hat) m.push(w);
    return m;
}

WEstimates estimate_W(const WalkParams& params, std::uint64_t N, const EnsembleConfig& cfg) {
    params.validate_for_verification();
    if (!(params.alpha > 0.5))
        throw std::invalid_argument("estimate_W: requires alpha > 1/2");
    if (params.schedule.kind() == BiasSchedule::Kind::PowerLaw &&
        params.schedule.gamma() + params.alpha <= 1.0)
        throw std::invalid_argument("estimate_W: power-law schedule requires gamma + alpha > 1");
    if (N < 1 || cfg.m < 1) throw std::invalid_argument("estimate_W: need N >= 1 and m >= 1");

    const std::vector<std::uint64_t> cps{N};
    const MomentRow row_N = scan_moments(params, cps)[0];
    const double a_N = std::exp(row_N.log_a);
    const double n_alpha = std::pow(static_cast<double>(N), params.alpha);

    WEstimates out;
    out.N = N;
    out.w_raw.resize(cfg.m);
    out.w_hat.resize(cfg.m);

    const StepTables tables(params, N);
    for_each_block(cfg.m, cfg.block_size, cfg.workers,
                   [&](std::uint64_t, std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t i = first; i < last; ++i) {
            std::int64_t s_N = 0;
            run_walk(params, tables, cps.data(), cps.data() + cps.size(),
                     substream(cfg.master_seed, i),
                     [&](std::uint64_t, std::int64_t s) { s_N = s; });
            out.w_raw[i] = (static_cast<double>(s_N) - row_N.mean) / a_N;
            out.w_hat[i] = static_cast<double>(s_N) / n_alpha;
        }
    });
    return out;
}

double LilSeries::final_max_abs() const {
    if (records.empty()) return 0.0;
    return std::max(records.back().rmax_plus, records.back().rmax_minus);
}

namespace {

constexpr double kEuler = 2.718281828459045;

// Envelope denominator for the LIL ratio at time n, or 0 when out of domain.
struct LilScale {
    const WalkParams& p;
    double eps_inf;
    bool supercritical;

    explicit LilScale(const WalkParams& params)
        : p(params), eps_inf(params.schedule.limit()), supercritical(params.alpha > 0.5) {}

    double operator()(std::uint64_t n, double a_n) const {
        double nd = static_cast<double>(n);
        double one_m_e2 = 1.0 - eps_inf * eps_inf;
        if (p.alpha < 0.5) {
            double arg = one_m_e2 / (1.0 - 2.0 * p.alpha) * nd;
            return arg > kEuler ? lil_phi(arg) : 0.0;
        }
        if (p.alpha == 0.5) {
            double arg = one_m_e2 * nd * std::log(nd);
            return arg > kEuler ? lil_phi(arg) : 0.0;
        }
        double arg = one_m_e2 / (2.0 * p.alpha - 1.0) * nd;
        return arg > kEuler ? a_n * lil_phi_hat(arg) : 0.0;
    }
};

}  // namespace

std::vector<LilSeries> lil_diagnostic(const WalkParams& params, std::uint64_t n_max,
                                      std::uint64_t master_seed, std::uint64_t num_seeds,
                                      unsigned workers, std::uint64_t n_min) {
    params.validate_for_verification();
    if (n_max < n_min || num_seeds < 1)
        throw std::invalid_argument("lil_diagnostic: need n_max >= n_min and num_seeds >= 1");

    const auto record_times = geometric_checkpoints(n_min, n_max);
    const StepTables tables(params, n_max);
    const LilScale scale(params);
    std::vector<LilSeries> out(num_seeds);

    for_each_block(num_seeds, 1, workers,
                   [&](std::uint64_t, std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t i = first; i < last; ++i) {
            const std::uint64_t seed = substream_seed(master_seed, i);

            // Supercritical mode needs the W proxy M_{n_max} before the
            // recorded pass; replaying the same seed reproduces the path.
            double w_proxy = 0.0;
            if (scale.supercritical) {
                std::vector<std::uint64_t> end{n_max};
                std::int64_t s_end = 0;
                run_walk(params, tables, end.data(), end.data() + 1, SplitMix64(seed),
                         [&](std::uint64_t, std::int64_t s) { s_end = s; });
                const MomentRow row = scan_moments(params, end)[0];
                w_proxy = (static_cast<double>(s_end) - row.mean) / std::exp(row.log_a);
            }

            LilSeries series;
            series.seed_index = i;
            series.seed = seed;
            series.records.reserve(record_times.size());

            // Walk again, tracking the exact mean recursion alongside.
            double mean = params.beta;
            double log_a = 0.0;
            double rmax_plus = 0.0, rmax_minus = 0.0;
            double r_plus = 0.0, r_minus = 0.0;
            std::uint64_t step_n = 0;
            std::size_t next_rec = 0;

            auto visit = [&](std::uint64_t n, std::int64_t s) {
                double a_n = std::exp(log_a);
                double denom = scale(n, a_n);
                if (n >= n_min && denom > 0.0) {
                    double dev = static_cast<double>(s) - mean;
                    if (scale.supercritical) dev -= w_proxy * a_n;
                    r_plus = dev / denom;
                    r_minus = -dev / denom;
                    rmax_plus = std::max(rmax_plus, r_plus);
                    rmax_minus = std::max(rmax_minus, r_minus);
                }
                if (next_rec < record_times.size() && record_times[next_rec] == n) {
                    series.records.push_back({n, r_plus, r_minus, rmax_plus, rmax_minus});
                    ++next_rec;
                }
            };

            // dense checkpoint stream: every step is visited
            SplitMix64 rng(seed);
            std::int64_t s = rng.next_double() < params.q() ? 1 : -1;
            step_n = 1;
            visit(step_n, s);
            while (step_n < n_max) {
                double nd = static_cast<double>(step_n);
                double e = params.eps(step_n);
                double drift = params.alpha * (static_cast<double>(s) / nd) +
                               (1.0 - params.alpha) * e;
                s += rng.next_double() < 0.5 * (1.0 + drift) ? 1 : -1;
                // advance the exact-mean recursion and log a_n in lockstep
                mean = (1.0 + params.alpha / nd) * mean + (1.0 - params.alpha) * e;
                log_a += std::log1p(params.alpha / nd);
                ++step_n;
                visit(step_n, s);
            }
            out[i] = std::move(series);
        }
    });
    return out;
}

// ---- serialization --------------------------------------------------------

void write_checkpoint_csv(std::ostream& os, const EnsembleStats& stats) {
    os << "n,count,mean,var,skew,kurt,se_mean\n";
    char buf[256];
    for (std::size_t i = 0; i < stats.checkpoints.size(); ++i) {
        const RunningMoments& m = stats.moments[i];
        std::snprintf(buf, sizeof(buf), "%llu,%llu,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      static_cast<unsigned long long>(stats.checkpoints[i]),
                      static_cast<unsigned long long>(m.count()), m.mean(), m.variance(),
                      m.skewness(), m.kurtosis(), m.se_mean());
        os << buf;
    }
}

void write_fluctuation_csv(std::ostream& os, const FluctuationResult& r) {
    os << "t_value\n";
    char buf[64];
    for (double t : r.t_values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", t);
        os << buf;
    }
}

void write_fluctuation_binary(std::ostream& os, const FluctuationResult& r) {
    os.write(reinterpret_cast<const char*>(r.t_values.data()),
             static_cast<std::streamsize>(r.t_values.size() * sizeof(double)));
}

void write_lil_csv(std::ostream& os, const std::vector<LilSeries>& series) {
    os << "seed,n,r_plus,r_minus,rmax_plus,rmax_minus\n";
    char buf[256];
    for (const LilSeries& s : series) {
        for (const LilRecord& rec : s.records) {
            std::snprintf(buf, sizeof(buf), "%llu,%llu,%.10g,%.10g,%.10g,%.10g\n",
                          static_cast<unsigned long long>(s.seed_index),
                          static_cast<unsigned long long>(rec.n), rec.r_plus, rec.r_minus,
                          rec.rmax_plus, rec.rmax_minus);
            os << buf;
        }
    }
}

}  // namespace erw
