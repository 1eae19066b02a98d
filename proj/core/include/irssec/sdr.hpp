// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstddef>

#include "irssec/channel.hpp"
#include "irssec/sdp_solver.hpp"
#include "irssec/secrecy.hpp"

namespace irssec {

/// R_k = (1/n) I + (1/s_k) c_k c_k^H over the phase Gram matrix Phi = v v^H, v = conj(theta-hat).
///
/// When Eve also hears the BS directly the vector is augmented with a unit-modulus
/// auxiliary entry, v = [conj(theta-hat); t], and c_eve gains the direct term as its
/// last entry (n = N + 1).
struct SdrMatrices
{
    CMat bob;
    CMat eve;
    bool augmented = false;

    Eigen::Index order() const { return bob.rows(); }
    std::size_t num_elements() const { return static_cast<std::size_t>(order()) - (augmented ? 1 : 0); }
};

SdrMatrices build_sdr_matrices(const CascadeVectors& cascades);
SdrMatrices build_sdr_matrices(const ChannelSet& channels, const CVec& w, const NoisePowers& noise);

struct SdpSolution
{
    CMat x;          // Charnes-Cooper variable X = mu * Phi
    double mu = 0.0; // common diagonal of X
    double objective = 0.0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double gap = 0.0;
    std::size_t iterations = 0;
};

/// max tr(R_bob X)  s.t.  tr(R_eve X) = 1,  X_nn = mu for all n,  X >= 0.
/// Solved through the 2n x 2n real symmetric embedding of the Hermitian problem.
SdpSolution solve_sdp(const SdrMatrices& matrices, const SdpSettings& settings = {});

struct RandomizedPhases
{
    PhaseVector phase; // continuous
    double objective = 0.0;
    bool rank_one = false; // principal eigenvector used instead of sampling
};

// v^H R_bob v / v^H R_eve v for v = [conj(theta-hat); 1 if augmented]
double sdr_ratio(const PhaseVector& phase, const SdrMatrices& matrices);

/// Draws `num_samples` complex Gaussian vectors with covariance Phi = X / mu, projects each
/// onto unit modulus and keeps the best under the exact ratio (first sample wins ties).
/// A numerically rank-one Phi (sigma_2 / sigma_1 < 1e-6) is read off its principal
/// eigenvector without sampling.
RandomizedPhases gaussian_randomize(const SdpSolution& solution, std::size_t num_samples,
                                    const SdrMatrices& matrices, Rng& rng);

struct SdpPipelineResult
{
    PhaseVector phase;            // quantized onto F
    PhaseVector continuous_phase; // randomization output
    SdpSolution sdp;
    double continuous_objective = 0.0;
    double objective = 0.0;
};

SdpPipelineResult sdp_pipeline(const CascadeVectors& cascades, const DiscretePhaseSet& set,
                               std::size_t num_samples, Rng& rng, const SdpSettings& settings = {});

} // namespace irssec
