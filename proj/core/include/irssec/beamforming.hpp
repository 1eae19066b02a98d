// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstddef>
#include <vector>

#include "irssec/channel.hpp"
#include "irssec/types.hpp"

namespace irssec {

// w = F_RF * f_BB over R RF chains, alongside the fully digital w it approximates.
struct BeamformerSolution
{
    CVec digital_full;
    CMat analog;   // M x R, constant-modulus 1/sqrt(M) entries
    CVec baseband; // R
    double power_budget = 0.0;
    std::vector<double> residual_history; // ||w - F_RF f_BB|| after each OMP step

    CVec hybrid() const { return analog * baseband; }
};

// K candidate ULA steering vectors on a uniform sin(angle) grid over [-1, 1).
class SteeringDictionary
{
public:
    SteeringDictionary(const ArrayGeometry& geometry, std::size_t num_atoms);
    // Default resolution: K = 2M.
    explicit SteeringDictionary(const ArrayGeometry& geometry);

    const CMat& atoms() const { return atoms_; }
    std::size_t size() const { return static_cast<std::size_t>(atoms_.cols()); }
    // sin(angle) of atom k
    double grid_point(std::size_t k) const;

private:
    CMat atoms_;
};

// sqrt(P_s) b / ||b||; DegenerateChannel for b = 0.
CVec mrt_beamformer(const CVec& b, double power);

/// Maximizer of (s_D + |h_D^H w|^2) / (s_E + |h_E^H w|^2) over ||w||^2 <= P_s.
///
/// The direction is the principal generalized eigenvector of the pencil
/// (s_D/P I + h_D h_D^H, s_E/P I + h_E h_E^H), found by Cholesky whitening of the
/// second form and a Hermitian eigendecomposition. When even the best full-power
/// direction scores below w = 0 (ratio s_D/s_E) the zero vector is returned.
CVec gevd_beamformer(const CVec& h_bob, const CVec& h_eve, double noise_bob, double noise_eve,
                     double power);

// (s_D + |h_D^H w|^2) / (s_E + |h_E^H w|^2)
double direct_link_ratio(const CVec& w, const CVec& h_bob, const CVec& h_eve, double noise_bob,
                         double noise_eve);

/// Greedy OMP factorization of w onto `rf_chains` dictionary atoms with a least-squares
/// baseband refit after every selection. The final baseband is rescaled so that
/// ||F_RF f_BB|| = ||w||.
BeamformerSolution omp_hybrid_decompose(const CVec& w, const SteeringDictionary& dictionary,
                                        std::size_t rf_chains, double power_budget);

} // namespace irssec
