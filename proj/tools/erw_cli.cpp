// erw -- command line front end: exact moment tables, single trajectories,
// Monte Carlo ensembles, limit-theorem verification suites, phase scans,
// and iterated-logarithm diagnostics.  Tabular output is CSV with a
// one-line header; verdicts and reports are JSON.  Exit codes: 0 success,
// 1 verification failure, 2 usage/config error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "erw/ensemble.hpp"
#include "erw/oracle.hpp"
#include "erw/regime.hpp"
#include "erw/rng.hpp"
#include "erw/sampler.hpp"
#include "erw/sequences.hpp"
#include "erw/stats.hpp"
#include "erw/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

struct RunConfig {
    std::string command;
    double alpha = 0.0;
    double beta = 0.0;
    std::string schedule_kind = "zero";  // zero | constant | powerlaw
    double eps = 0.0;
    double gamma = 0.5;

    std::uint64_t n = 0;  // 0 = per-command default
    std::uint64_t N = 0;
    std::uint64_t m = 0;
    std::uint64_t seed = erw::kDefaultSeed;
    unsigned workers = 0;
    std::uint64_t seeds = 8;        // lil
    std::uint64_t n_min = 0;        // checkpoint grid start / lil record window
    double ratio = 1.5;             // checkpoint grid ratio
    std::uint64_t fluct_n = 0;      // ensemble: inner time of fluctuation samples
    std::string suite;              // verify
    double tolerance_scale = 1.0;
    std::vector<double> grid_alpha; // phase-scan
    std::vector<double> grid_gamma;
    std::string samples_format = "csv";  // csv | bin
    std::string out = "erw_out";
};

json to_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["alpha"] = c.alpha;
    j["beta"] = c.beta;
    json sched;
    sched["kind"] = c.schedule_kind;
    if (c.schedule_kind == "constant") sched["eps"] = c.eps;
    if (c.schedule_kind == "powerlaw") sched["gamma"] = c.gamma;
    j["schedule"] = sched;
    j["n"] = c.n;
    j["N"] = c.N;
    j["m"] = c.m;
    j["seed"] = c.seed;
    j["workers"] = c.workers;
    j["seeds"] = c.seeds;
    j["n_min"] = c.n_min;
    j["ratio"] = c.ratio;
    j["fluct_n"] = c.fluct_n;
    j["suite"] = c.suite;
    j["tolerance_scale"] = c.tolerance_scale;
    j["grid_alpha"] = c.grid_alpha;
    j["grid_gamma"] = c.grid_gamma;
    j["samples_format"] = c.samples_format;
    j["out"] = c.out;
    return j;
}

void from_json_file(const std::string& path, RunConfig& c) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j = json::parse(in);
    c.alpha = j.value("alpha", c.alpha);
    c.beta = j.value("beta", c.beta);
    if (j.contains("schedule")) {
        const json& s = j["schedule"];
        c.schedule_kind = s.value("kind", c.schedule_kind);
        c.eps = s.value("eps", c.eps);
        c.gamma = s.value("gamma", c.gamma);
    }
    c.n = j.value("n", c.n);
    c.N = j.value("N", c.N);
    c.m = j.value("m", c.m);
    c.seed = j.value("seed", c.seed);
    c.workers = j.value("workers", c.workers);
    c.seeds = j.value("seeds", c.seeds);
    c.n_min = j.value("n_min", c.n_min);
    c.ratio = j.value("ratio", c.ratio);
    c.fluct_n = j.value("fluct_n", c.fluct_n);
    c.suite = j.value("suite", c.suite);
    c.tolerance_scale = j.value("tolerance_scale", c.tolerance_scale);
    if (j.contains("grid_alpha")) c.grid_alpha = j["grid_alpha"].get<std::vector<double>>();
    if (j.contains("grid_gamma")) c.grid_gamma = j["grid_gamma"].get<std::vector<double>>();
    c.samples_format = j.value("samples_format", c.samples_format);
    c.out = j.value("out", c.out);
}

erw::BiasSchedule make_schedule(const RunConfig& c) {
    if (c.schedule_kind == "zero") return erw::BiasSchedule::zero();
    if (c.schedule_kind == "constant") return erw::BiasSchedule::constant(c.eps);
    if (c.schedule_kind == "powerlaw") return erw::BiasSchedule::power_law(c.gamma);
    throw std::invalid_argument("unknown schedule kind: " + c.schedule_kind);
}

erw::WalkParams make_params(const RunConfig& c) {
    return erw::WalkParams(c.alpha, c.beta, make_schedule(c));
}

std::filesystem::path prepare_out_dir(const RunConfig& c) {
    std::filesystem::path dir(c.out);
    std::filesystem::create_directories(dir);
    std::ofstream cfg(dir / "config.json");
    cfg << to_json(c).dump(2) << "\n";
    return dir;
}

std::ofstream open_out(const std::filesystem::path& p, bool binary = false) {
    std::ofstream os(p, binary ? std::ios::binary : std::ios::out);
    if (!os) throw std::runtime_error("cannot open output file: " + p.string());
    return os;
}

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// shared model/run flags
void add_model_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--alpha", cfg.alpha, "reinforcement strength in [0, 1]");
    cmd->add_option("--beta", cfg.beta, "first-step mean E[X_1] in [-1, 1]");
    auto* eps = cmd->add_option("--eps", cfg.eps, "constant bias schedule eps_n = eps");
    auto* gam = cmd->add_option("--gamma", cfg.gamma, "power-law bias schedule eps_n = n^-gamma");
    eps->excludes(gam);
    gam->excludes(eps);
    cmd->callback([cmd, &cfg]() {
        if (cmd->count("--gamma")) cfg.schedule_kind = "powerlaw";
        else if (cmd->count("--eps")) cfg.schedule_kind = "constant";
    });
}

std::vector<std::uint64_t> make_grid(const RunConfig& c, std::uint64_t default_min) {
    std::uint64_t lo = c.n_min ? c.n_min : default_min;
    return erw::geometric_checkpoints(std::min(lo, c.n), c.n, c.ratio);
}

// ---- moments ---------------------------------------------------------------

// Predicted asymptotes for the moments table; nan when no closed prediction
// applies.
struct Predictor {
    erw::WalkParams params;
    double eps_inf = 0.0;
    std::optional<erw::MeanAsymptote> mean_asym;
    std::optional<erw::RegimeReport> regime;
    double w2 = std::numeric_limits<double>::quiet_NaN();  // E[W^2] proxy for alpha > 1/2

    explicit Predictor(const erw::WalkParams& p, double var_m_at_horizon) : params(p) {
        if (p.schedule.kind() != erw::BiasSchedule::Kind::Custom) eps_inf = p.schedule.limit();
        if (p.schedule.kind() == erw::BiasSchedule::Kind::PowerLaw) {
            mean_asym = erw::mean_asymptote(p);
            if (p.alpha < 1.0) regime = erw::classify_regime(p.alpha, p.schedule.gamma());
        }
        if (p.alpha > 0.5) w2 = var_m_at_horizon;
    }

    double pred_mean(const erw::MomentRow& row) const {
        double nd = static_cast<double>(row.n);
        if (mean_asym) return mean_asym->value_at(row.n);
        if (eps_inf != 0.0) return eps_inf * nd;       // E[S_n]/n -> eps
        return params.beta * std::exp(row.log_a);      // exact for eps = 0
    }

    double pred_var(const erw::MomentRow& row) const {
        double nd = static_cast<double>(row.n);
        double one_m_e2 = 1.0 - eps_inf * eps_inf;
        if (params.alpha < 0.5) return one_m_e2 / (1.0 - 2.0 * params.alpha) * nd;
        if (params.alpha == 0.5) return one_m_e2 * nd * std::log(nd);
        double a_n = std::exp(row.log_a);
        return w2 * a_n * a_n;
    }

    double mean_normed(const erw::MomentRow& row) const {
        if (regime) return row.mean / regime->norm_at(row.n);
        return row.mean / std::exp(row.log_a);  // -> beta + (1-alpha) sum eps_l/a_{l+1}
    }
};

int cmd_moments(RunConfig cfg) {
    if (cfg.n == 0) cfg.n = 1000000;
    auto params = make_params(cfg);
    auto dir = prepare_out_dir(cfg);
    auto grid = make_grid(cfg, 1);
    auto rows = erw::scan_moments(params, grid);

    Predictor pred(params, rows.back().var_m_prefix);
    auto os = open_out(dir / "moments.csv");
    os << "n,a_n,mean,var,step_var,pred_mean,pred_var,mean_normed\n";
    for (const auto& row : rows) {
        os << row.n << ',' << g17(std::exp(row.log_a)) << ',' << g17(row.mean) << ','
           << g17(row.variance()) << ',' << g17(row.step_var) << ','
           << g17(pred.pred_mean(row)) << ',' << g17(pred.pred_var(row)) << ','
           << g17(pred.mean_normed(row)) << '\n';
    }
    std::cout << "wrote " << (dir / "moments.csv").string() << " (" << rows.size()
              << " rows, horizon " << cfg.n << ")\n";
    return kExitOk;
}

// ---- simulate --------------------------------------------------------------

int cmd_simulate(RunConfig cfg) {
    if (cfg.n == 0) cfg.n = 1000000;
    auto params = make_params(cfg);
    auto dir = prepare_out_dir(cfg);
    auto grid = make_grid(cfg, 1);
    auto traj = erw::simulate(params, grid, cfg.seed);

    auto os = open_out(dir / "trajectory.csv");
    os << "n,s\n";
    for (std::size_t i = 0; i < traj.checkpoints.size(); ++i)
        os << traj.checkpoints[i] << ',' << traj.positions[i] << '\n';
    std::cout << "wrote " << (dir / "trajectory.csv").string() << " (seed " << cfg.seed
              << ", final S = " << traj.positions.back() << ")\n";
    return kExitOk;
}

// ---- ensemble --------------------------------------------------------------

int cmd_ensemble(RunConfig cfg) {
    if (cfg.n == 0) cfg.n = 1000000;
    if (cfg.m == 0) cfg.m = 10000;
    auto params = make_params(cfg);
    auto dir = prepare_out_dir(cfg);

    erw::EnsembleConfig ecfg;
    ecfg.m = cfg.m;
    ecfg.master_seed = cfg.seed;
    ecfg.workers = cfg.workers;

    auto grid = make_grid(cfg, 1);
    auto stats = erw::run_ensemble(params, grid, ecfg);
    {
        auto os = open_out(dir / "ensemble.csv");
        erw::write_checkpoint_csv(os, stats);
    }
    std::cout << "wrote " << (dir / "ensemble.csv").string() << " (" << stats.trajectories
              << " trajectories, " << grid.size() << " checkpoints)\n";

    if (cfg.fluct_n > 0) {
        auto fl = erw::supercritical_fluctuation(params, cfg.fluct_n, cfg.n, ecfg);
        if (cfg.samples_format == "bin") {
            auto os = open_out(dir / "fluctuation.bin", /*binary=*/true);
            erw::write_fluctuation_binary(os, fl);
        } else {
            auto os = open_out(dir / "fluctuation.csv");
            erw::write_fluctuation_csv(os, fl);
        }
        auto mom = fl.t_moments();
        std::cout << "fluctuation samples: n = " << fl.n << ", N = " << fl.N
                  << ", var(T) = " << mom.variance() << ", sigma_exact/sigma_asym = "
                  << fl.sigma_exact / fl.sigma_asym << "\n";
    }
    return kExitOk;
}

// ---- oracle-check ----------------------------------------------------------

int cmd_oracle_check(const RunConfig& cfg) {
    auto dir = prepare_out_dir(cfg);
    auto rep = erw::oracle_check();

    json j;
    j["n_max"] = rep.n_max;
    j["tolerance"] = rep.tolerance;
    j["max_abs_err"] = rep.max_abs_err;
    j["dp_vs_path_max_err"] = rep.dp_vs_path_max_err;
    j["pass"] = rep.pass;
    j["cells"] = json::array();
    for (const auto& c : rep.cells) {
        j["cells"].push_back({{"alpha", c.alpha},
                              {"beta", c.beta},
                              {"schedule", c.schedule},
                              {"max_err_mean", c.max_err_mean},
                              {"max_err_second_moment", c.max_err_second}});
    }
    open_out(dir / "oracle_check.json") << j.dump(2) << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << " oracle-check: max |recursion - enumeration| = "
              << rep.max_abs_err << " (tolerance " << rep.tolerance << ")\n";
    return rep.pass ? kExitOk : kExitCheckFailed;
}

// ---- verify ----------------------------------------------------------------

json suite_to_json(const erw::SuiteResult& r) {
    json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass();
    j["seconds"] = r.seconds;
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        json cj{{"name", c.name}, {"measured", c.measured}, {"lo", c.lo},
                {"hi", c.hi},     {"pass", c.pass}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        j["checks"].push_back(cj);
    }
    return j;
}

int cmd_verify(const RunConfig& cfg) {
    auto dir = prepare_out_dir(cfg);

    erw::SuiteOptions opt;
    opt.seed = cfg.seed;
    opt.workers = cfg.workers;
    opt.tolerance_scale = cfg.tolerance_scale;
    opt.n = cfg.n;  // zeros mean suite defaults
    opt.N = cfg.N;
    opt.m = cfg.m;

    erw::SuiteResult result;
    if (cfg.suite == "diffusive") result = erw::verify_diffusive(opt);
    else if (cfg.suite == "critical") result = erw::verify_critical(opt);
    else if (cfg.suite == "supercritical") result = erw::verify_supercritical(opt);
    else if (cfg.suite == "phase") result = erw::verify_phase(opt);
    else throw std::invalid_argument("unknown suite: " + cfg.suite);

    open_out(dir / "verdict.json") << suite_to_json(result).dump(2) << "\n";
    for (const auto& c : result.checks)
        std::printf("%-4s %-28s measured=%-12.6g band=[%.6g, %.6g]\n",
                    c.pass ? "ok" : "FAIL", c.name.c_str(), c.measured, c.lo, c.hi);
    std::printf("%s suite '%s' in %.1fs; report: %s\n", result.pass() ? "PASS" : "FAIL",
                result.suite.c_str(), result.seconds, (dir / "verdict.json").string().c_str());
    return result.pass() ? kExitOk : kExitCheckFailed;
}

// ---- phase-scan ------------------------------------------------------------

int cmd_phase_scan(RunConfig cfg) {
    if (cfg.n == 0) cfg.n = 1000000;
    if (cfg.grid_alpha.empty() || cfg.grid_gamma.empty())
        throw std::invalid_argument("phase-scan: --grid-alpha and --grid-gamma are required");
    for (double a : cfg.grid_alpha)
        if (!(a >= 0.0 && a < 1.0))
            throw std::invalid_argument("phase-scan: grid alpha values must be in [0, 1)");
    for (double g : cfg.grid_gamma)
        if (!(g > 0.0)) throw std::invalid_argument("phase-scan: grid gamma values must be > 0");

    auto dir = prepare_out_dir(cfg);
    auto os = open_out(dir / "phase_scan.csv");
    os << "alpha,gamma,regime,limit_kind,pred_exponent,pred_constant,pred_var_const,"
          "meas_exponent,meas_constant,meas_var_const,abs_dev\n";

    const double nd = static_cast<double>(cfg.n);
    for (double gamma : cfg.grid_gamma) {
        for (double alpha : cfg.grid_alpha) {
            erw::WalkParams params(alpha, cfg.beta, erw::BiasSchedule::power_law(gamma));
            auto regime = erw::classify_regime(alpha, gamma);
            auto asym = erw::mean_asymptote(params);

            double pred_const, pred_var_const;
            const char* kind;
            switch (regime.limit_kind) {
                case erw::LimitKind::L2Constant:
                    kind = "L2-constant";
                    pred_const = regime.limit_constant;
                    pred_var_const = 0.0;  // L2 limit is deterministic
                    break;
                case erw::LimitKind::Normal:
                    kind = "normal";
                    pred_const = regime.normal_mean;
                    pred_var_const = regime.normal_var;
                    break;
                default:
                    kind = "random-variable";
                    pred_const = asym.constant;  // E[W_hat] = C(alpha, beta, gamma)
                    pred_var_const = std::numeric_limits<double>::quiet_NaN();
                    break;
            }

            auto grid = make_grid(cfg, 100);
            auto rows = erw::scan_moments(params, grid);
            const auto& last = rows.back();
            double meas_const = last.mean / regime.norm_at(last.n);
            double meas_var_const =
                last.variance() / (regime.norm_at(last.n) * regime.norm_at(last.n));

            double meas_exp = std::numeric_limits<double>::quiet_NaN();
            try {
                std::vector<double> times, means;
                for (const auto& row : rows) {
                    times.push_back(static_cast<double>(row.n));
                    means.push_back(row.mean);
                }
                meas_exp = erw::exponent_regression(times, means).slope;
            } catch (const std::invalid_argument&) {
                // nonpositive means (possible for beta < 0); exponent not measurable
            }

            os << g17(alpha) << ',' << g17(gamma) << ',' << regime.regime << ',' << kind << ','
               << g17(asym.exponent) << ',' << g17(pred_const) << ',' << g17(pred_var_const)
               << ',' << g17(meas_exp) << ',' << g17(meas_const) << ',' << g17(meas_var_const)
               << ',' << g17(std::fabs(meas_const - pred_const)) << '\n';
        }
    }
    std::cout << "wrote " << (dir / "phase_scan.csv").string() << " ("
              << cfg.grid_alpha.size() * cfg.grid_gamma.size() << " cells, horizon " << nd
              << ")\n";
    return kExitOk;
}

// ---- lil -------------------------------------------------------------------

int cmd_lil(RunConfig cfg) {
    if (cfg.n == 0) cfg.n = 10000000;
    auto params = make_params(cfg);
    auto dir = prepare_out_dir(cfg);
    std::uint64_t n_min = cfg.n_min ? cfg.n_min : 10000;
    auto series = erw::lil_diagnostic(params, cfg.n, cfg.seed, cfg.seeds, cfg.workers, n_min);
    {
        auto os = open_out(dir / "lil.csv");
        erw::write_lil_csv(os, series);
    }
    for (const auto& s : series)
        std::printf("seed %llu: running max |R| = %.4f over %zu records\n",
                    static_cast<unsigned long long>(s.seed_index), s.final_max_abs(),
                    s.records.size());
    std::cout << "wrote " << (dir / "lil.csv").string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    // load --config first so that explicit flags override file values
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        try {
            if (arg == "--config" && i + 1 < argc) from_json_file(argv[i + 1], cfg);
            else if (arg.rfind("--config=", 0) == 0) from_json_file(arg.substr(9), cfg);
        } catch (const std::exception& e) {
            std::cerr << "config error: " << e.what() << "\n";
            return kExitConfigError;
        }
    }

    if (const char* env = std::getenv("ERW_WORKERS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0') cfg.workers = static_cast<unsigned>(v);
    }

    CLI::App app{"elephant random walk toolkit: exact moments, Monte Carlo ensembles, "
                 "and limit-theorem verification"};
    app.require_subcommand(1);
    std::string config_path;  // consumed above; registered so CLI11 accepts it

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file (flags override)");
        cmd->add_option("--seed", cfg.seed, "master seed");
        cmd->add_option("--workers", cfg.workers, "worker threads (0 = hardware, env ERW_WORKERS)");
        cmd->add_option("--out", cfg.out, "output directory");
    };

    auto* moments = app.add_subcommand("moments", "exact moment tables (CSV)");
    add_model_flags(moments, cfg);
    add_common(moments);
    moments->add_option("--n", cfg.n, "horizon");
    moments->add_option("--n-min", cfg.n_min, "first checkpoint (default 1)");
    moments->add_option("--ratio", cfg.ratio, "geometric checkpoint ratio");

    auto* simulate = app.add_subcommand("simulate", "one trajectory (CSV)");
    add_model_flags(simulate, cfg);
    add_common(simulate);
    simulate->add_option("--n", cfg.n, "horizon");
    simulate->add_option("--n-min", cfg.n_min, "first checkpoint (default 1)");
    simulate->add_option("--ratio", cfg.ratio, "geometric checkpoint ratio");

    auto* ensemble = app.add_subcommand("ensemble", "Monte Carlo ensemble statistics (CSV)");
    add_model_flags(ensemble, cfg);
    add_common(ensemble);
    ensemble->add_option("--n", cfg.n, "horizon");
    ensemble->add_option("--m", cfg.m, "trajectory count");
    ensemble->add_option("--n-min", cfg.n_min, "first checkpoint (default 1)");
    ensemble->add_option("--ratio", cfg.ratio, "geometric checkpoint ratio");
    ensemble->add_option("--fluct-n", cfg.fluct_n,
                         "also emit fluctuation samples with this inner time (N = --n)");
    ensemble->add_option("--samples-format", cfg.samples_format, "csv or bin")
        ->check(CLI::IsMember({"csv", "bin"}));

    auto* oracle = app.add_subcommand("oracle-check",
                                      "exact recursions vs enumeration oracle (JSON)");
    add_common(oracle);

    auto* verify = app.add_subcommand("verify", "limit-theorem verification suites (JSON)");
    add_model_flags(verify, cfg);
    add_common(verify);
    verify->add_option("--suite", cfg.suite, "diffusive | critical | supercritical | phase")
        ->required()
        ->check(CLI::IsMember({"diffusive", "critical", "supercritical", "phase"}));
    verify->add_option("--n", cfg.n, "inner horizon override");
    verify->add_option("--N", cfg.N, "outer horizon override");
    verify->add_option("--m", cfg.m, "trajectory count override");
    verify->add_option("--tolerance-scale", cfg.tolerance_scale,
                       "multiplies every statistical tolerance band");

    auto* scan = app.add_subcommand("phase-scan", "deterministic phase table scan (CSV)");
    add_common(scan);
    scan->add_option("--beta", cfg.beta, "first-step mean");
    scan->add_option("--n", cfg.n, "scan horizon");
    scan->add_option("--n-min", cfg.n_min, "first checkpoint (default 100)");
    scan->add_option("--ratio", cfg.ratio, "geometric checkpoint ratio");
    scan->add_option("--grid-alpha", cfg.grid_alpha, "alpha grid values (in [0,1))")->delimiter(',');
    scan->add_option("--grid-gamma", cfg.grid_gamma, "gamma grid values (> 0)")->delimiter(',');

    auto* lil = app.add_subcommand("lil", "iterated-logarithm running-maximum diagnostic (CSV)");
    add_model_flags(lil, cfg);
    add_common(lil);
    lil->add_option("--n", cfg.n, "horizon");
    lil->add_option("--seeds", cfg.seeds, "number of independent seeds");
    lil->add_option("--n-min", cfg.n_min, "record window start (default 1e4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfigError;
    }

    try {
        if (moments->parsed()) { cfg.command = "moments"; return cmd_moments(cfg); }
        if (simulate->parsed()) { cfg.command = "simulate"; return cmd_simulate(cfg); }
        if (ensemble->parsed()) { cfg.command = "ensemble"; return cmd_ensemble(cfg); }
        if (oracle->parsed()) { cfg.command = "oracle-check"; return cmd_oracle_check(cfg); }
        if (verify->parsed()) { cfg.command = "verify"; return cmd_verify(cfg); }
        if (scan->parsed()) { cfg.command = "phase-scan"; return cmd_phase_scan(cfg); }
        if (lil->parsed()) { cfg.command = "lil"; return cmd_lil(cfg); }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitConfigError;
}
