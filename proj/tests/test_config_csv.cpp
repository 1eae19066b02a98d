// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "irssec/config.hpp"
#include "irssec/csv.hpp"
#include "irssec/errors.hpp"
#include "irssec/harness.hpp"

using namespace irssec;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("irssec_" + name)).string();
}

SweepResult small_sweep()
{
    ExperimentConfig cfg;
    cfg.num_trials = 5;
    cfg.record_timing = false;
    cfg.solvers = {SolverKind::BcdDiscrete, SolverKind::Sdp, SolverKind::Exhaustive};
    cfg.sweep.param = SweepParam::PhaseLevels;
    cfg.sweep.values = {2, 4, 8, 16};
    return run_sweep(cfg);
}

} // namespace

TEST(Config, ParsesKeysCommentsAndWhitespace)
{
    const auto cfg = parse_config("# comment\n"
                                  "tx.power_dbm = 20\n"
                                  "  irs.elements=8   # trailing\n"
                                  "irs.phase_levels = 16\n"
                                  "eve.intercepts = bs\n"
                                  "eve.blocking = bs\n"
                                  "eve.rho = 0.25\n"
                                  "solver.list = bcd-discrete, sdp\n"
                                  "run.seed = 42\n"
                                  "\n");
    EXPECT_EQ(cfg.power_dbm, 20.0);
    EXPECT_EQ(cfg.irs_elements, 8u);
    EXPECT_EQ(cfg.phase_levels, 16u);
    EXPECT_EQ(cfg.interception, Interception::Bs);
    EXPECT_EQ(cfg.scenario.blocking_target, BlockingTarget::BsBeam);
    EXPECT_EQ(cfg.scenario.blocking_fraction, 0.25);
    ASSERT_EQ(cfg.solvers.size(), 2u);
    EXPECT_EQ(cfg.solvers[1], SolverKind::Sdp);
    EXPECT_EQ(cfg.master_seed, 42u);
}

TEST(Config, RejectsBadInput)
{
    EXPECT_THROW(parse_config("tx.bogus = 1"), ConfigError);
    EXPECT_THROW(parse_config("tx.power_dbm = loud"), ConfigError);
    EXPECT_THROW(parse_config("irs.elements = -3"), ConfigError);
    EXPECT_THROW(parse_config("no equals sign"), ConfigError);
    EXPECT_THROW(parse_config("eve.intercepts = satellite"), ConfigError);
    EXPECT_THROW(parse_config("solver.list = magic"), ConfigError);
    EXPECT_THROW(parse_config("irs.elements = 0").validate(), ConfigError);
    EXPECT_THROW(parse_config("tx.rf_chains = 40").validate(), ConfigError);
    EXPECT_THROW(parse_config("sweep.param = rho\nsweep.values = 0,0.5").validate(), ConfigError);
    EXPECT_THROW(load_config_file("/nonexistent/irssec.cfg"), ConfigError);
}

TEST(Config, FormatRoundTrips)
{
    auto cfg = parse_config("tx.power_dbm = 17.5\nirs.elements = 6\neve.blocking = irs\neve.rho = 0.3\n"
                            "sweep.param = power\nsweep.values = 10, 20\n");
    const auto again = parse_config(format_config(cfg));
    EXPECT_EQ(format_config(again), format_config(cfg));
    EXPECT_EQ(again.power_dbm, 17.5);
    EXPECT_EQ(again.sweep.values, (std::vector<double>{10, 20}));
}

TEST(Config, SweepValueApplication)
{
    ExperimentConfig cfg;
    EXPECT_EQ(with_sweep_value(cfg, SweepParam::PhaseLevels, 16).phase_levels, 16u);
    EXPECT_EQ(with_sweep_value(cfg, SweepParam::Power, 12.5).power_dbm, 12.5);
    EXPECT_EQ(with_sweep_value(cfg, SweepParam::Elements, 40).irs_elements, 40u);
    EXPECT_EQ(with_sweep_value(cfg, SweepParam::Rho, 0.5).scenario.blocking_fraction, 0.5);
    EXPECT_THROW(with_sweep_value(cfg, SweepParam::Elements, 2.5), ConfigError);
    EXPECT_EQ(parse_value_list("1, 2.5,3"), (std::vector<double>{1, 2.5, 3}));
    EXPECT_THROW(parse_value_list(""), ConfigError);
}

TEST(Csv, RowCount)
{
    const auto res = small_sweep();
    const std::string text = format_csv(res);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 13);
    EXPECT_EQ(text.substr(0, text.find('\n')), kCsvHeader);
    EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(Csv, ReemissionIsByteIdentical)
{
    const auto res = small_sweep();
    const auto a = temp_path("a.csv"), b = temp_path("b.csv");
    emit_csv(res, a);
    emit_csv(res, b);
    EXPECT_EQ(slurp(a), slurp(b));
    emit_csv(small_sweep(), b);
    EXPECT_EQ(slurp(a), slurp(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST(Csv, ParseBackReproducesMeans)
{
    const auto res = small_sweep();
    const auto path = temp_path("c.csv");
    emit_csv(res, path);
    const auto rows = parse_csv(slurp(path));
    ASSERT_EQ(rows.size(), res.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double mean = res.rows[i].mean_rate;
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9g", mean);
        const double printed = std::strtod(buf, nullptr);
        EXPECT_NEAR(rows[i].mean_rate, printed, 1e-9 * std::max(1.0, std::abs(printed)));
        // nine significant digits: at most half a unit in the ninth digit
        EXPECT_LE(std::abs(rows[i].mean_rate - mean), 5e-9 * std::abs(mean) + 1e-300);
        EXPECT_EQ(rows[i].trials, res.rows[i].trials);
        EXPECT_EQ(rows[i].solver, std::string(to_string(res.rows[i].solver)));
        EXPECT_EQ(rows[i].sweep_param, "lp");
    }
    std::filesystem::remove(path);
}

TEST(Csv, EmptySolverRowWritesNan)
{
    ExperimentConfig cfg;
    cfg.num_trials = 2;
    cfg.irs_elements = 12;
    cfg.solvers = {SolverKind::Exhaustive};
    const auto res = run_sweep(cfg);
    ASSERT_EQ(res.rows.size(), 1u);
    EXPECT_EQ(res.rows[0].trials, 0u);
    const auto rows = parse_csv(format_csv(res));
    EXPECT_TRUE(std::isnan(rows[0].mean_rate));
}

TEST(Csv, UnwritablePathNamesThePath)
{
    try {
        emit_csv(small_sweep(), "/nonexistent-dir/out.csv");
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.csv"), std::string::npos);
    }
}

TEST(Csv, RejectsForeignHeader) { EXPECT_THROW(parse_csv("a,b,c\n1,2,3\n"), Error); }
