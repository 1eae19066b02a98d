// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "irssec/channel.hpp"
#include "irssec/types.hpp"

namespace irssec {

// F = {0, step, ..., (L_P - 1) step}, step = 2pi / L_P.
class DiscretePhaseSet
{
public:
    explicit DiscretePhaseSet(std::size_t num_levels);

    std::size_t num_levels() const { return levels_; }
    double step() const { return kTwoPi / static_cast<double>(levels_); }
    double value(std::size_t level) const { return step() * static_cast<double>(level); }
    std::vector<double> values() const;

    // Level index of theta if theta is a member of F (within 1e-9 rad), else nullopt.
    std::optional<std::size_t> level_of(double theta) const;

    friend bool operator==(const DiscretePhaseSet&, const DiscretePhaseSet&) = default;

private:
    std::size_t levels_;
};

/// Chord-distance-nearest member of F: argmin over F of |e^{j theta} - e^{j f}|.
/// Exact ties resolve to the smaller phase value.
double quantize_phase(double theta, const DiscretePhaseSet& set);

class PhaseVector
{
public:
    PhaseVector() = default;

    static PhaseVector continuous(RVec thetas);
    // Throws DomainError when an entry is not in F.
    static PhaseVector discrete(RVec thetas, const DiscretePhaseSet& set);
    // Quantizes every entry onto F.
    static PhaseVector quantized(const RVec& thetas, const DiscretePhaseSet& set);
    static PhaseVector zeros(std::size_t n, std::optional<DiscretePhaseSet> set = std::nullopt);

    std::size_t size() const { return static_cast<std::size_t>(thetas_.size()); }
    const RVec& thetas() const { return thetas_; }
    double operator[](std::size_t i) const { return thetas_(static_cast<Eigen::Index>(i)); }
    bool is_discrete() const { return set_.has_value(); }
    const std::optional<DiscretePhaseSet>& phase_set() const { return set_; }

    // Replaces theta_i (wrapped to [0, 2pi)); discrete vectors require theta in F.
    void set(std::size_t i, double theta);

    // theta-hat = [e^{j theta_1}, ..., e^{j theta_N}]^T
    CVec unit_vector() const;

private:
    RVec thetas_;
    std::optional<DiscretePhaseSet> set_;
};

struct NoisePowers
{
    double bob = 3.1622776601683795e-12; // -85 dBm
    double eve = 3.1622776601683795e-12;
};

// Per-element products conj(g_k,i) * (H_BI^H w)_i for k in {Bob, Eve}.
struct CascadeVectors
{
    CVec bob;
    CVec eve;
    Complex eve_direct{0.0, 0.0}; // h_dE^H w when Eve also hears the BS directly
    NoisePowers noise;

    std::size_t size() const { return static_cast<std::size_t>(bob.size()); }
};

CascadeVectors build_cascades(const ChannelSet& channels, const CVec& w, const NoisePowers& noise);

// sum_i e^{j theta_i} cascade_i
Complex effective_gain(const PhaseVector& phase, const CVec& cascade);
Complex effective_gain(const CVec& unit_vector, const CVec& cascade);

/// (1 + |g_D^H Theta H w|^2 / s_D) / (1 + |g_E^H Theta H w + h_dE^H w|^2 / s_E), the
/// fractional objective every phase optimizer maximizes.
double secrecy_ratio(const PhaseVector& phase, const CascadeVectors& cascades);
double secrecy_ratio(const CVec& unit_vector, const CascadeVectors& cascades);

// [log2(ratio)]^+
double rate_from_ratio(double ratio);

double secrecy_rate(const PhaseVector& phase, const CascadeVectors& cascades);
double secrecy_rate(const PhaseVector& phase, const CVec& cascade_bob, const CVec& cascade_eve,
                    double noise_bob, double noise_eve);

} // namespace irssec
