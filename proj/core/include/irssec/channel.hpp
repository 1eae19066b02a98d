// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "irssec/types.hpp"

namespace irssec {

// Every stochastic routine draws from an explicitly passed stream.
using Rng = std::mt19937_64;

enum class ArrayKind { Ula, Ura };

struct ArrayGeometry
{
    ArrayKind kind = ArrayKind::Ula;
    std::size_t num_elements = 1;
    std::size_t rows = 1; // URA only
    std::size_t cols = 1; // URA only
    double spacing = 0.5; // in wavelengths

    static ArrayGeometry ula(std::size_t elements, double spacing = 0.5);
    static ArrayGeometry ura(std::size_t rows, std::size_t cols, double spacing = 0.5);
    // Near-square factorization of n elements (rows <= cols).
    static ArrayGeometry ura_square(std::size_t n, double spacing = 0.5);

    void validate() const;
};

// Free-space spreading with molecular absorption; antenna gains in dBi.
struct PathGainModel
{
    double carrier_frequency_hz = 0.3e12;
    double absorption_per_m = 0.0033;
    double tx_gain_dbi = 12.0;
    double rx_gain_dbi = 12.0;

    void validate() const;
};

enum class BlockingTarget { None, IrsBeam, BsBeam };

struct ScenarioGeometry
{
    double d_sr = 5.0; // BS - IRS
    double d_rd = 5.0; // IRS - Bob
    double d_re = 5.0; // IRS - Eve
    double d_se = 5.0; // BS - Eve (direct link, BS interception only)

    // Line-of-sight angles of the BS-IRS link.
    double bs_departure = kPi / 6.0;
    double irs_arrival_azimuth = kPi / 4.0;
    double irs_arrival_elevation = kPi / 8.0;

    double blocking_fraction = 0.0; // rho
    BlockingTarget blocking_target = BlockingTarget::None;

    void validate() const;
};

// H_BI^H = gain * a * b^H, with unit-norm a (IRS, N) and b (BS, M).
struct RankOneChannel
{
    Complex gain{0.0, 0.0};
    CVec irs_steering;
    CVec bs_steering;

    // N x M matrix mapping the BS transmit vector onto the IRS elements.
    CMat matrix() const;
};

struct PathComponent
{
    Complex amplitude; // alpha_i
    CVec steering;     // unit norm
};

// vector = prefactor * sum_i amplitude_i * steering_i
struct MultipathChannel
{
    CVec vector;
    std::size_t num_paths = 0; // L used in the sqrt(N/L) prefactor
    double prefactor = 0.0;    // sqrt(N/L) * G_r * G_I
    std::vector<PathComponent> paths;

    // Re-sums the stored path list.
    CVec resum() const;
};

struct ChannelSet
{
    RankOneChannel bs_irs;
    MultipathChannel bob;                     // g_D
    MultipathChannel eve;                     // g_E
    std::optional<MultipathChannel> eve_direct; // BS -> Eve, M-vector

    std::size_t num_irs_elements() const { return static_cast<std::size_t>(bs_irs.irs_steering.size()); }
    std::size_t num_bs_antennas() const { return static_cast<std::size_t>(bs_irs.bs_steering.size()); }
};

CVec steering_ula(const ArrayGeometry& geometry, double angle);
CVec steering_ura(const ArrayGeometry& geometry, double azimuth, double elevation);

double path_gain_magnitude(const PathGainModel& model, double distance);
// Magnitude from path_gain_magnitude, phase uniform on [0, 2pi).
Complex path_gain(const PathGainModel& model, double distance, Rng& rng);

RankOneChannel build_bs_irs_channel(const PathGainModel& model, const ArrayGeometry& bs,
                                    const ArrayGeometry& irs, const ScenarioGeometry& scenario,
                                    Rng& rng);

// IRS -> user channel over `distance` with L paths at uniformly random angles.
MultipathChannel build_irs_user_channel(const PathGainModel& model, const ArrayGeometry& irs,
                                        double distance, std::size_t num_paths, Rng& rng);

MultipathChannel build_direct_bs_eve_channel(const PathGainModel& model, const ArrayGeometry& bs,
                                             const ScenarioGeometry& scenario,
                                             std::size_t num_paths, Rng& rng);

/// Power-splitting beam blockage by an in-beam eavesdropper.
///
/// IrsBeam: g_D <- sqrt(1-rho) g_D and g_E <- g_E + sqrt(rho) g_D (Eve keeps her own
/// multipath and additionally captures the blocked share of the reflected beam).
/// BsBeam: the BS-IRS gain is scaled by sqrt(1-rho) and the direct BS->Eve channel
/// gains the captured share sqrt(rho) * conj(gain) * b. A missing direct channel is
/// created empty first.
ChannelSet apply_blocking(ChannelSet channels, const ScenarioGeometry& scenario);

struct LinkOptions
{
    std::size_t num_paths = 3;
    bool direct_eve_link = false;
};

// Draws a full ChannelSet in a fixed order and applies the scenario's blocking.
ChannelSet synthesize_channels(const PathGainModel& model, const ArrayGeometry& bs,
                               const ArrayGeometry& irs, const ScenarioGeometry& scenario,
                               const LinkOptions& links, Rng& rng);

} // namespace irssec
