// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "irssec/channel.hpp"

namespace irssec {

enum class SolverKind { BcdDiscrete, BcdContinuous, Sdp, Exhaustive, SecrecyOblivious, BcdHybrid };

enum class SweepParam { None, PhaseLevels, Power, Elements, Rho };

// Where the eavesdropper listens: next to Bob (IRS beam) or next to the BS.
enum class Interception { Irs, Bs };

std::string_view to_string(SolverKind kind);
std::string_view to_string(SweepParam param);
SolverKind parse_solver(std::string_view name);
SweepParam parse_sweep_param(std::string_view name);

struct SweepSpec
{
    SweepParam param = SweepParam::None;
    std::vector<double> values;
};

struct ExperimentConfig
{
    PathGainModel gains;
    ScenarioGeometry scenario;
    Interception interception = Interception::Irs;

    double power_dbm = 25.0;
    std::size_t bs_antennas = 16;   // M
    std::size_t rf_chains = 10;     // M_RF
    std::size_t irs_elements = 4;   // N
    std::size_t num_paths = 3;      // L
    std::size_t phase_levels = 8;   // L_P
    double noise_bob_dbm = -85.0;
    double noise_eve_dbm = -85.0;

    std::vector<SolverKind> solvers{SolverKind::BcdDiscrete, SolverKind::BcdContinuous, SolverKind::Sdp,
                                    SolverKind::Exhaustive, SolverKind::SecrecyOblivious};
    std::size_t gaussian_samples = 100;
    double bcd_epsilon = 1e-4;
    std::size_t bcd_max_iters = 100;
    bool bcd_zero_init = false;
    std::uint64_t exhaustive_cap = 10'000'000;
    double sdp_tolerance = 1e-9;
    std::size_t alternation_cap = 20;
    double alternation_tolerance = 1e-5;

    std::size_t num_trials = 100;
    std::uint64_t master_seed = 1;
    std::size_t threads = 1;
    bool record_timing = true;

    SweepSpec sweep;

    void validate() const;
};

/// Applies one `key = value` setting. Keys are dotted, e.g. `tx.power_dbm`.
/// Unknown keys and malformed values raise ConfigError.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// Parses the flat config format: one `key = value` per line, `#` starts a comment,
/// blank lines ignored. Later keys override earlier ones.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

// Serializes every key in the format parse_config reads.
std::string format_config(const ExperimentConfig& config);

// Copy of `config` with the sweep parameter set to `value`.
ExperimentConfig with_sweep_value(const ExperimentConfig& config, SweepParam param, double value);

std::vector<double> parse_value_list(std::string_view text);

} // namespace irssec
