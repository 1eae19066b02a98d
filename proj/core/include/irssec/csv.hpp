// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <string>
#include <vector>

#include "irssec/harness.hpp"

namespace irssec {

inline constexpr const char* kCsvHeader = "sweep_param,sweep_value,solver,mean_rate,stderr_rate,mean_time_s,trials";

/// One header line plus one row per (sweep value, solver); numbers carry 9 significant
/// digits, LF line endings.
std::string format_csv(const SweepResult& result);

// Writes format_csv(result); I/O failures raise Error naming the path.
void emit_csv(const SweepResult& result, const std::string& path);

struct CsvRow
{
    std::string sweep_param;
    double sweep_value = 0.0;
    std::string solver;
    double mean_rate = 0.0;
    double stderr_rate = 0.0;
    double mean_time_s = 0.0;
    std::size_t trials = 0;
};

std::vector<CsvRow> parse_csv(const std::string& text);

} // namespace irssec
