// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

// irssec: Monte Carlo simulator for secrecy-rate optimization of IRS-assisted links.
//
//   irssec run          [--config F] [--set k=v]... [--out F]
//   irssec sweep        --param lp|power|elements|rho --values a,b,c [...]
//   irssec oracle-check [--config F] [--set k=v]...
//   irssec selftest
//
// Exit codes: 0 success, 1 configuration error, 2 solver failure.

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "irssec/config.hpp"
#include "irssec/csv.hpp"
#include "irssec/errors.hpp"
#include "irssec/harness.hpp"
#include "irssec/selfcheck.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;

struct CommonOptions
{
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_path;
    bool paper_trials = false;
    std::size_t trials = 0;
    std::size_t threads = 0;
    bool no_timing = false;
};

void add_common(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("-c,--config", o.config_path, "key = value config file");
    cmd->add_option("-s,--set", o.overrides, "override a config key (key=value), repeatable");
    cmd->add_option("-o,--out", o.out_path, "CSV output path (default: stdout)");
    cmd->add_option("-t,--trials", o.trials, "Monte Carlo trials per sweep value");
    cmd->add_flag("--paper", o.paper_trials, "use 1000 trials per point");
    cmd->add_option("-j,--threads", o.threads, "worker threads");
    cmd->add_flag("--no-timing", o.no_timing, "write zero timings (byte-reproducible CSV)");
}

irssec::ExperimentConfig resolve(const CommonOptions& o)
{
    irssec::ExperimentConfig cfg;
    if (!o.config_path.empty())
        cfg = irssec::load_config_file(o.config_path, cfg);
    for (const auto& kv : o.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw irssec::ConfigError("--set expects key=value, got '" + kv + "'");
        irssec::apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (o.paper_trials)
        cfg.num_trials = 1000;
    if (o.trials)
        cfg.num_trials = o.trials;
    if (o.threads)
        cfg.threads = o.threads;
    if (o.no_timing)
        cfg.record_timing = false;
    cfg.validate();
    return cfg;
}

int write_result(const irssec::SweepResult& res, const std::string& out_path)
{
    if (out_path.empty())
        std::cout << irssec::format_csv(res);
    else
        irssec::emit_csv(res, out_path);
    if (res.failures > 0) {
        std::cerr << "irssec: " << res.failures << " solver failure(s) recorded\n";
        return kExitSolver;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Secrecy-rate optimization for IRS-assisted mmWave/THz links"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    auto* run = app.add_subcommand("run", "run a single configuration");
    add_common(run, run_opts);

    CommonOptions sweep_opts;
    std::string sweep_param;
    std::string sweep_values;
    auto* sweep = app.add_subcommand("sweep", "sweep one parameter");
    add_common(sweep, sweep_opts);
    sweep->add_option("-p,--param", sweep_param, "lp | power | elements | rho")
        ->required()
        ->check(CLI::IsMember({"lp", "power", "elements", "rho"}));
    sweep->add_option("-v,--values", sweep_values, "comma separated values")->required();

    CommonOptions oracle_opts;
    auto* oracle = app.add_subcommand("oracle-check", "BCD and SDP gap against exhaustive search");
    add_common(oracle, oracle_opts);

    std::uint64_t selftest_seed = 7;
    auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
    selftest->add_option("--seed", selftest_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run) {
            auto cfg = resolve(run_opts);
            cfg.sweep = {};
            return write_result(irssec::run_sweep(cfg), run_opts.out_path);
        }
        if (*sweep) {
            auto cfg = resolve(sweep_opts);
            cfg.sweep.param = irssec::parse_sweep_param(sweep_param);
            cfg.sweep.values = irssec::parse_value_list(sweep_values);
            cfg.validate();
            return write_result(irssec::run_sweep(cfg), sweep_opts.out_path);
        }
        if (*oracle) {
            const auto cfg = resolve(oracle_opts);
            const auto rep = irssec::oracle_check(cfg);
            std::cout << std::setprecision(6) << "trials                 " << rep.trials << '\n'
                      << "N, L_P                 " << cfg.irs_elements << ", " << cfg.phase_levels << '\n'
                      << "mean rate exhaustive   " << rep.mean_exhaustive_rate << '\n'
                      << "mean rate bcd-discrete " << rep.mean_bcd_rate << "  (gap " << 100.0 * rep.bcd_gap << "%)\n"
                      << "mean rate sdp          " << rep.mean_sdp_rate << "  (gap " << 100.0 * rep.sdp_gap << "%)\n"
                      << "dominance violations   bcd=" << rep.bcd_violations << " sdp=" << rep.sdp_violations << '\n';
            return rep.bcd_violations + rep.sdp_violations == 0 ? 0 : kExitSolver;
        }
        if (*selftest) {
            bool ok = true;
            for (const auto& r : irssec::run_selfcheck(selftest_seed)) {
                std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
                if (!r.detail.empty())
                    std::cout << "  (" << r.detail << ")";
                std::cout << '\n';
                ok = ok && r.passed;
            }
            return ok ? 0 : kExitSolver;
        }
    } catch (const irssec::ConfigError& e) {
        std::cerr << "irssec: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const irssec::SolverFailure& e) {
        std::cerr << "irssec: solver failure: " << e.what() << '\n';
        return kExitSolver;
    } catch (const irssec::EnumerationCapExceeded& e) {
        std::cerr << "irssec: " << e.what() << '\n';
        return kExitConfig;
    } catch (const irssec::Error& e) {
        std::cerr << "irssec: " << e.what() << '\n';
        return kExitSolver;
    }
    return 0;
}
