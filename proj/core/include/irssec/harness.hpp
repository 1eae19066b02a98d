// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irssec/beamforming.hpp"
#include "irssec/channel.hpp"
#include "irssec/config.hpp"
#include "irssec/secrecy.hpp"

namespace irssec {

struct SolverOutcome
{
    SolverKind kind = SolverKind::BcdDiscrete;
    double rate = 0.0;      // bits/s/Hz
    double objective = 0.0; // secrecy ratio
    double wall_time_s = 0.0;
    std::size_t iterations = 0;
    bool failed = false;
    bool skipped = false; // e.g. exhaustive beyond the enumeration cap
    std::string message;
};

struct TrialRecord
{
    double sweep_value = 0.0;
    std::size_t trial_index = 0;
    std::vector<SolverOutcome> outcomes; // in config.solvers order
    std::optional<double> hybrid_gap;    // digital minus hybrid rate with the BCD-discrete phases
    std::size_t alternations = 0;        // GEVD/BCD rounds (BS interception only)

    const SolverOutcome* find(SolverKind kind) const;
};

// Everything a trial derives from its random stream, before any phase optimization.
struct TrialSetup
{
    ChannelSet channels;
    NoisePowers noise;
    CVec beamformer;  // digital w
    BeamformerSolution hybrid;
    std::size_t alternations = 0;
};

// Per-trial stream seeded from (master_seed, trial_index, stream). Stream 0 draws the
// channels; stream 1 feeds Gaussian randomization.
Rng trial_rng(std::uint64_t master_seed, std::size_t trial_index, std::uint32_t stream = 0);

/// Synthesizes channels and the transmit beamformer for one trial of an already
/// sweep-resolved config.
TrialSetup prepare_trial(const ExperimentConfig& config, std::size_t trial_index);

TrialRecord run_trial(const ExperimentConfig& config, double sweep_value, std::size_t trial_index);

struct SweepRow
{
    double sweep_value = 0.0;
    SolverKind solver = SolverKind::BcdDiscrete;
    double mean_rate = 0.0;
    double stderr_rate = 0.0;
    double mean_time_s = 0.0;
    std::size_t trials = 0; // trials that produced a rate for this solver
};

struct SweepResult
{
    SweepParam param = SweepParam::None;
    std::vector<double> values;
    std::vector<SolverKind> solvers;
    std::vector<std::vector<TrialRecord>> trials; // [value][trial]
    std::vector<SweepRow> rows;                   // value-major, solver order within a value
    std::size_t failures = 0;

    const SweepRow* row(double value, SolverKind solver) const;
};

/// Runs config.num_trials trials at every sweep value on config.threads workers.
/// Aggregation happens in a fixed order after all trials finish, so the result does
/// not depend on the worker count.
SweepResult run_sweep(const ExperimentConfig& config);

struct OracleReport
{
    std::size_t trials = 0;
    std::size_t bcd_violations = 0; // trials with exhaustive < BCD-discrete
    std::size_t sdp_violations = 0;
    double mean_exhaustive_rate = 0.0;
    double mean_bcd_rate = 0.0;
    double mean_sdp_rate = 0.0;
    double bcd_gap = 0.0; // 1 - mean(BCD) / mean(exhaustive)
    double sdp_gap = 0.0;
};

// BCD-discrete and SDP against exhaustive search on the config's (N, L_P).
OracleReport oracle_check(const ExperimentConfig& config);

} // namespace irssec
