// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/secrecy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "irssec/errors.hpp"

namespace irssec {

DiscretePhaseSet::DiscretePhaseSet(std::size_t num_levels) : levels_(num_levels)
{
    if (num_levels < 1)
        throw DomainError("discrete phase set needs at least one level");
}

std::vector<double> DiscretePhaseSet::values() const
{
    std::vector<double> v(levels_);
    for (std::size_t k = 0; k < levels_; ++k)
        v[k] = value(k);
    return v;
}

std::optional<std::size_t> DiscretePhaseSet::level_of(double theta) const
{
    const double scaled = wrap_phase(theta) / step();
    const double nearest = std::round(scaled);
    if (std::abs(scaled - nearest) * step() > 1e-9)
        return std::nullopt;
    return static_cast<std::size_t>(nearest) % levels_;
}

double quantize_phase(double theta, const DiscretePhaseSet& set)
{
    const Complex target = std::polar(1.0, theta);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_level = 0;
    for (std::size_t k = 0; k < set.num_levels(); ++k) {
        const double dist = std::abs(target - std::polar(1.0, set.value(k)));
        if (dist < best - 1e-12) {
            best = dist;
            best_level = k;
        }
    }
    return set.value(best_level);
}

PhaseVector PhaseVector::continuous(RVec thetas)
{
    PhaseVector p;
    p.thetas_ = thetas.unaryExpr([](double t) { return wrap_phase(t); });
    return p;
}

PhaseVector PhaseVector::discrete(RVec thetas, const DiscretePhaseSet& set)
{
    PhaseVector p;
    p.thetas_.resize(thetas.size());
    for (Eigen::Index i = 0; i < thetas.size(); ++i) {
        const auto level = set.level_of(thetas(i));
        if (!level)
            throw DomainError("phase " + std::to_string(thetas(i)) + " is not a member of F");
        p.thetas_(i) = set.value(*level);
    }
    p.set_ = set;
    return p;
}

PhaseVector PhaseVector::quantized(const RVec& thetas, const DiscretePhaseSet& set)
{
    PhaseVector p;
    p.thetas_ = thetas.unaryExpr([&](double t) { return quantize_phase(t, set); });
    p.set_ = set;
    return p;
}

PhaseVector PhaseVector::zeros(std::size_t n, std::optional<DiscretePhaseSet> set)
{
    PhaseVector p;
    p.thetas_ = RVec::Zero(static_cast<Eigen::Index>(n));
    p.set_ = std::move(set);
    return p;
}

void PhaseVector::set(std::size_t i, double theta)
{
    if (i >= size())
        throw DimensionError("phase index out of range");
    if (set_) {
        const auto level = set_->level_of(theta);
        if (!level)
            throw DomainError("phase " + std::to_string(theta) + " is not a member of F");
        thetas_(static_cast<Eigen::Index>(i)) = set_->value(*level);
    } else {
        thetas_(static_cast<Eigen::Index>(i)) = wrap_phase(theta);
    }
}

CVec PhaseVector::unit_vector() const
{
    return thetas_.unaryExpr([](double t) { return std::polar(1.0, t); });
}

CascadeVectors build_cascades(const ChannelSet& channels, const CVec& w, const NoisePowers& noise)
{
    const auto& link = channels.bs_irs;
    const Eigen::Index n = link.irs_steering.size();
    if (w.size() != link.bs_steering.size())
        throw DimensionError("beamformer length " + std::to_string(w.size()) +
                             " != BS antennas " + std::to_string(link.bs_steering.size()));
    if (channels.bob.vector.size() != n || channels.eve.vector.size() != n)
        throw DimensionError("IRS-user channel length differs from the IRS size");
    if (!(noise.bob > 0.0 && noise.eve > 0.0))
        throw DomainError("noise powers must be positive");

    // H_BI^H w = gain * a * (b^H w)
    const Complex beam = link.gain * link.bs_steering.dot(w);
    const CVec incident = beam * link.irs_steering;

    CascadeVectors c;
    c.bob = channels.bob.vector.conjugate().cwiseProduct(incident);
    c.eve = channels.eve.vector.conjugate().cwiseProduct(incident);
    if (channels.eve_direct) {
        if (channels.eve_direct->vector.size() != w.size())
            throw DimensionError("direct BS-Eve channel length differs from the beamformer");
        c.eve_direct = channels.eve_direct->vector.dot(w);
    }
    c.noise = noise;
    return c;
}

Complex effective_gain(const CVec& unit_vector, const CVec& cascade)
{
    if (unit_vector.size() != cascade.size())
        throw DimensionError("phase vector and cascade lengths differ");
    return unit_vector.cwiseProduct(cascade).sum();
}

Complex effective_gain(const PhaseVector& phase, const CVec& cascade)
{
    return effective_gain(phase.unit_vector(), cascade);
}

double secrecy_ratio(const CVec& unit_vector, const CascadeVectors& cascades)
{
    const Complex bob = effective_gain(unit_vector, cascades.bob);
    const Complex eve = effective_gain(unit_vector, cascades.eve) + cascades.eve_direct;
    return (1.0 + std::norm(bob) / cascades.noise.bob) / (1.0 + std::norm(eve) / cascades.noise.eve);
}

double secrecy_ratio(const PhaseVector& phase, const CascadeVectors& cascades)
{
    return secrecy_ratio(phase.unit_vector(), cascades);
}

double rate_from_ratio(double ratio) { return std::max(0.0, std::log2(ratio)); }

double secrecy_rate(const PhaseVector& phase, const CascadeVectors& cascades)
{
    return rate_from_ratio(secrecy_ratio(phase, cascades));
}

double secrecy_rate(const PhaseVector& phase, const CVec& cascade_bob, const CVec& cascade_eve,
                    double noise_bob, double noise_eve)
{
    if (!(noise_bob > 0.0 && noise_eve > 0.0))
        throw DomainError("noise powers must be positive");
    CascadeVectors c;
    c.bob = cascade_bob;
    c.eve = cascade_eve;
    c.noise = {noise_bob, noise_eve};
    return secrecy_rate(phase, c);
}

} // namespace irssec
