// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstddef>
#include <vector>

#include "irssec/types.hpp"

namespace irssec {

/// Real symmetric standard-form SDP
///   minimize <C, X>  s.t.  <A_i, X> = b_i,  X >= 0
/// with dual  maximize b^T y  s.t.  sum_i y_i A_i + Z = C,  Z >= 0.
struct SdpProblem
{
    RMat objective;
    std::vector<RMat> constraints;
    RVec rhs;
};

struct SdpSettings
{
    double tolerance = 1e-9;
    // Accepted instead when the iteration breaks down numerically (rank-deficient optimum) or
    // runs out of iterations.
    double acceptable_tolerance = 1e-7;
    std::size_t max_iterations = 200;
    double step_fraction = 0.95; // fraction of the step to the PSD boundary
};

struct SdpResult
{
    RMat x;
    RVec y;
    RMat z;
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    // relative: ||b - A(X)|| / (1 + ||b||), ||C - Z - A^T y||_F / (1 + ||C||_F),
    // |<C,X> - b^T y| / (1 + |<C,X>| + |b^T y|)
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double gap = 0.0;
    std::size_t iterations = 0;
    bool reached_tolerance = false; // false: stopped at acceptable_tolerance
};

/// Infeasible primal-dual path following with Nesterov-Todd scaling and a Mehrotra-style
/// centering choice. Dense; intended for matrix orders up to ~64. Throws SolverFailure
/// carrying the final residuals when not even the acceptable tolerance is reached.
SdpResult solve_standard_sdp(const SdpProblem& problem, const SdpSettings& settings = {});

} // namespace irssec
