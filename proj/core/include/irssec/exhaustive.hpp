// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstddef>
#include <cstdint>

#include "irssec/secrecy.hpp"

namespace irssec {

struct ExhaustiveOptions
{
    std::uint64_t enumeration_cap = 10'000'000; // refuse when L_P^N exceeds this
    std::size_t workers = 1; // partitions the first element's levels across threads
};

struct ExhaustiveResult
{
    PhaseVector phase;
    double objective = 0.0; // exact ratio, recomputed from scratch for the winner
    std::uint64_t candidates = 0;
};

// L_P^N, saturating at UINT64_MAX.
std::uint64_t enumeration_size(std::size_t levels, std::size_t elements);

/// Global discrete optimum of the secrecy ratio over all L_P^N phase vectors.
///
/// Candidates are walked in reflected mixed-radix Gray order so each step moves one
/// element by one level and the two complex accumulators update in O(1). Ties go to
/// the lexicographically smallest level vector.
ExhaustiveResult exhaustive_search(const CascadeVectors& cascades, const DiscretePhaseSet& set,
                                   const ExhaustiveOptions& options = {});

} // namespace irssec
