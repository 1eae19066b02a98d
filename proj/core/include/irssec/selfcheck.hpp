// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace irssec {

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

// Fast invariant sweep over every module (a few seconds); deterministic for a seed.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed = 7);

} // namespace irssec
