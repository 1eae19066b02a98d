// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/channel.hpp"

#include <cmath>
#include <string>

#include "irssec/errors.hpp"

namespace irssec {

ArrayGeometry ArrayGeometry::ula(std::size_t elements, double spacing)
{
    ArrayGeometry g;
    g.kind = ArrayKind::Ula;
    g.num_elements = elements;
    g.rows = 1;
    g.cols = elements;
    g.spacing = spacing;
    g.validate();
    return g;
}

ArrayGeometry ArrayGeometry::ura(std::size_t rows, std::size_t cols, double spacing)
{
    ArrayGeometry g;
    g.kind = ArrayKind::Ura;
    g.num_elements = rows * cols;
    g.rows = rows;
    g.cols = cols;
    g.spacing = spacing;
    g.validate();
    return g;
}

ArrayGeometry ArrayGeometry::ura_square(std::size_t n, double spacing)
{
    if (n == 0)
        throw DomainError("URA needs at least one element");
    std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (rows > 1 && n % rows != 0)
        --rows;
    return ura(rows, n / rows, spacing);
}

void ArrayGeometry::validate() const
{
    if (num_elements == 0)
        throw DomainError("array must have at least one element");
    if (!(spacing > 0.0))
        throw DomainError("element spacing must be positive");
    if (kind == ArrayKind::Ura && rows * cols != num_elements)
        throw DomainError("URA rows*cols (" + std::to_string(rows * cols) + ") != num_elements (" +
                          std::to_string(num_elements) + ")");
}

void PathGainModel::validate() const
{
    if (!(carrier_frequency_hz > 0.0))
        throw DomainError("carrier frequency must be positive");
    if (!(absorption_per_m >= 0.0))
        throw DomainError("absorption coefficient must be non-negative");
}

void ScenarioGeometry::validate() const
{
    if (!(d_sr > 0.0 && d_rd > 0.0 && d_re > 0.0 && d_se > 0.0))
        throw DomainError("all link distances must be positive");
    if (!(blocking_fraction >= 0.0 && blocking_fraction <= 1.0))
        throw DomainError("blocking fraction must lie in [0, 1]");
}

CMat RankOneChannel::matrix() const
{
    return gain * irs_steering * bs_steering.adjoint();
}

CVec MultipathChannel::resum() const
{
    CVec sum = CVec::Zero(vector.size());
    for (const auto& p : paths)
        sum += p.amplitude * p.steering;
    return prefactor * sum;
}

CVec steering_ula(const ArrayGeometry& geometry, double angle)
{
    if (geometry.kind != ArrayKind::Ula)
        throw GeometryMismatch("steering_ula called with a URA geometry");
    geometry.validate();
    const auto m = static_cast<Eigen::Index>(geometry.num_elements);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    const double step = kTwoPi * geometry.spacing * std::sin(angle);
    CVec a(m);
    for (Eigen::Index i = 0; i < m; ++i)
        a(i) = std::polar(scale, step * static_cast<double>(i));
    return a;
}

CVec steering_ura(const ArrayGeometry& geometry, double azimuth, double elevation)
{
    if (geometry.kind != ArrayKind::Ura)
        throw GeometryMismatch("steering_ura called with a ULA geometry");
    geometry.validate();
    // row index follows sin(el), column index follows cos(el) sin(az); a = a_row (x) a_col
    const double row_step = kTwoPi * geometry.spacing * std::sin(elevation);
    const double col_step = kTwoPi * geometry.spacing * std::cos(elevation) * std::sin(azimuth);
    const double scale = 1.0 / std::sqrt(static_cast<double>(geometry.num_elements));
    CVec a(static_cast<Eigen::Index>(geometry.num_elements));
    for (std::size_t r = 0; r < geometry.rows; ++r)
        for (std::size_t c = 0; c < geometry.cols; ++c)
            a(static_cast<Eigen::Index>(r * geometry.cols + c)) =
                std::polar(scale, row_step * static_cast<double>(r) + col_step * static_cast<double>(c));
    return a;
}

double path_gain_magnitude(const PathGainModel& model, double distance)
{
    model.validate();
    if (!(distance > 0.0))
        throw DomainError("path gain needs a positive distance");
    const double spreading = kSpeedOfLight / (4.0 * kPi * model.carrier_frequency_hz * distance);
    return spreading * std::exp(-0.5 * model.absorption_per_m * distance);
}

Complex path_gain(const PathGainModel& model, double distance, Rng& rng)
{
    const double magnitude = path_gain_magnitude(model, distance);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    return std::polar(magnitude, phase(rng));
}

namespace {

double linear_gain(double dbi) { return db_to_linear(dbi); }

CVec steering_for(const ArrayGeometry& geometry, double azimuth, double elevation)
{
    return geometry.kind == ArrayKind::Ula ? steering_ula(geometry, azimuth)
                                           : steering_ura(geometry, azimuth, elevation);
}

MultipathChannel build_multipath(const PathGainModel& model, const ArrayGeometry& array,
                                 double distance, std::size_t num_paths, Rng& rng)
{
    if (num_paths == 0)
        throw DomainError("multipath channel needs at least one path");
    array.validate();
    const double n = static_cast<double>(array.num_elements);
    MultipathChannel ch;
    ch.num_paths = num_paths;
    ch.prefactor = std::sqrt(n / static_cast<double>(num_paths)) * linear_gain(model.rx_gain_dbi) *
                   linear_gain(model.tx_gain_dbi);
    ch.paths.reserve(num_paths);
    std::uniform_real_distribution<double> angle(-kPi / 2.0, kPi / 2.0);
    for (std::size_t i = 0; i < num_paths; ++i) {
        // draw order: gain, azimuth, elevation
        const Complex alpha = path_gain(model, distance, rng);
        const double az = angle(rng);
        const double el = angle(rng);
        ch.paths.push_back({alpha, steering_for(array, az, el)});
    }
    ch.vector = CVec::Zero(static_cast<Eigen::Index>(array.num_elements));
    ch.vector = ch.resum();
    return ch;
}

} // namespace

RankOneChannel build_bs_irs_channel(const PathGainModel& model, const ArrayGeometry& bs,
                                    const ArrayGeometry& irs, const ScenarioGeometry& scenario,
                                    Rng& rng)
{
    scenario.validate();
    bs.validate();
    irs.validate();
    const double mn = static_cast<double>(bs.num_elements * irs.num_elements);
    const Complex alpha = path_gain(model, scenario.d_sr, rng);
    RankOneChannel ch;
    ch.gain = std::sqrt(mn) * alpha * linear_gain(model.rx_gain_dbi) * linear_gain(model.tx_gain_dbi);
    ch.bs_steering = steering_for(bs, scenario.bs_departure, 0.0);
    ch.irs_steering = steering_for(irs, scenario.irs_arrival_azimuth, scenario.irs_arrival_elevation);
    return ch;
}

MultipathChannel build_irs_user_channel(const PathGainModel& model, const ArrayGeometry& irs,
                                        double distance, std::size_t num_paths, Rng& rng)
{
    return build_multipath(model, irs, distance, num_paths, rng);
}

MultipathChannel build_direct_bs_eve_channel(const PathGainModel& model, const ArrayGeometry& bs,
                                             const ScenarioGeometry& scenario,
                                             std::size_t num_paths, Rng& rng)
{
    scenario.validate();
    return build_multipath(model, bs, scenario.d_se, num_paths, rng);
}

ChannelSet apply_blocking(ChannelSet channels, const ScenarioGeometry& scenario)
{
    const double rho = scenario.blocking_fraction;
    if (!(rho >= 0.0 && rho <= 1.0))
        throw DomainError("blocking fraction must lie in [0, 1]");
    if (scenario.blocking_target == BlockingTarget::None || rho == 0.0)
        return channels;

    const double kept = std::sqrt(1.0 - rho);
    const double captured = std::sqrt(rho);

    if (scenario.blocking_target == BlockingTarget::IrsBeam) {
        auto& bob = channels.bob;
        auto& eve = channels.eve;
        if (bob.vector.size() != eve.vector.size())
            throw DimensionError("Bob and Eve IRS channels differ in length");
        // Eve's path list absorbs Bob's (pre-blocking) paths rescaled to her prefactor.
        const double rescale = eve.prefactor > 0.0 ? captured * bob.prefactor / eve.prefactor : 0.0;
        if (eve.prefactor > 0.0) {
            for (const auto& p : bob.paths)
                eve.paths.push_back({p.amplitude * rescale, p.steering});
        }
        eve.vector = eve.vector + captured * bob.vector;
        for (auto& p : bob.paths)
            p.amplitude *= kept;
        bob.vector *= kept;
        return channels;
    }

    // BsBeam
    auto& link = channels.bs_irs;
    const Complex full_gain = link.gain;
    if (!channels.eve_direct) {
        MultipathChannel empty;
        empty.vector = CVec::Zero(link.bs_steering.size());
        empty.num_paths = 0;
        empty.prefactor = 1.0;
        channels.eve_direct = std::move(empty);
    }
    auto& direct = *channels.eve_direct;
    if (direct.vector.size() != link.bs_steering.size())
        throw DimensionError("direct BS-Eve channel length differs from the BS array");
    const Complex captured_amp = captured * std::conj(full_gain);
    direct.paths.push_back({captured_amp / direct.prefactor, link.bs_steering});
    direct.vector += captured_amp * link.bs_steering;
    link.gain *= kept;
    return channels;
}

ChannelSet synthesize_channels(const PathGainModel& model, const ArrayGeometry& bs,
                               const ArrayGeometry& irs, const ScenarioGeometry& scenario,
                               const LinkOptions& links, Rng& rng)
{
    ChannelSet set;
    set.bs_irs = build_bs_irs_channel(model, bs, irs, scenario, rng);
    set.bob = build_irs_user_channel(model, irs, scenario.d_rd, links.num_paths, rng);
    set.eve = build_irs_user_channel(model, irs, scenario.d_re, links.num_paths, rng);
    if (links.direct_eve_link)
        set.eve_direct = build_direct_bs_eve_channel(model, bs, scenario, links.num_paths, rng);
    return apply_blocking(std::move(set), scenario);
}

} // namespace irssec
