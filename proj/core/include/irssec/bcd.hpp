// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "irssec/secrecy.hpp"

namespace irssec {

/// Single-element view of the fractional objective:
///   f(theta) = (c_D + d_D cos(theta + p_D)) / (c_E + d_E cos(theta + p_E))
/// with the other N-1 phases frozen.
struct ElementCoefficients
{
    double c_bob = 1.0;
    double c_eve = 1.0;
    double d_bob = 0.0;
    double d_eve = 0.0;
    double p_bob = 0.0;
    double p_eve = 0.0;

    double evaluate(double theta) const;
};

ElementCoefficients element_coefficients(std::size_t index, const PhaseVector& phase,
                                         const CascadeVectors& cascades);

/// Unique maximizer of f over theta in [0, 2pi), or nullopt when f is (numerically)
/// constant in theta and the caller should keep the current phase.
std::optional<double> bcd_phase_update(const ElementCoefficients& coeffs);

struct BcdOptions
{
    double epsilon = 1e-4;       // stop once ||Theta^n - Theta^{n-1}||_F <= epsilon
    std::size_t max_iters = 100; // full sweeps
    // Called after every element visit with the current phase vector.
    std::function<void(std::size_t, const PhaseVector&)> on_update;
};

struct BcdState
{
    PhaseVector phase;
    double initial_objective = 0.0;
    std::vector<double> objective_history; // after every full sweep
    std::size_t iterations = 0;
    bool converged = false;

    double objective() const { return objective_history.empty() ? initial_objective : objective_history.back(); }
};

/// Element-wise BCD over the IRS phases.
///
/// The domain of `init` selects the mode: continuous phases take the closed-form update
/// directly; discrete phases quantize it onto F and keep it only if the objective strictly
/// improves. Either way no update decreases the objective.
BcdState run_algorithm1(const CascadeVectors& cascades, const PhaseVector& init,
                        const BcdOptions& options = {});

BcdState run_algorithm1(const ChannelSet& channels, const CVec& w, const NoisePowers& noise,
                        const PhaseVector& init, const BcdOptions& options = {});

// theta_i = -arg(cascade_bob_i): every reflected path adds coherently at Bob.
// Quantized onto `set` when one is given.
PhaseVector bob_aligned_phases(const CascadeVectors& cascades,
                               const std::optional<DiscretePhaseSet>& set = std::nullopt);

} // namespace irssec
