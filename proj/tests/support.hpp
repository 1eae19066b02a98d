// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

// Independent reference computations shared by the test suites. Nothing here calls the
// library's own objective code; the oracles rebuild every quantity from raw matrices.

#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "irssec/channel.hpp"
#include "irssec/harness.hpp"
#include "irssec/secrecy.hpp"

namespace irssec::testing {

inline CVec random_cvec(Eigen::Index n, std::mt19937_64& rng, double scale = 1.0)
{
    std::normal_distribution<double> nd(0.0, scale);
    CVec v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = Complex(nd(rng), nd(rng));
    return v;
}

inline RVec random_phases(Eigen::Index n, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    RVec t(n);
    for (Eigen::Index i = 0; i < n; ++i)
        t(i) = u(rng);
    return t;
}

// Uniform direction, ||w||^2 uniform in [0, power].
inline CVec random_feasible_w(Eigen::Index m, double power, std::mt19937_64& rng)
{
    CVec w = random_cvec(m, rng);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return w.normalized() * std::sqrt(power * u(rng));
}

// g^H diag(e^{j theta}) H w, with H the N x M BS-IRS matrix.
inline Complex reflected_amplitude(const CVec& g, const RVec& thetas, const CMat& h, const CVec& w)
{
    CMat theta = CMat::Zero(thetas.size(), thetas.size());
    for (Eigen::Index i = 0; i < thetas.size(); ++i)
        theta(i, i) = std::polar(1.0, thetas(i));
    return (g.adjoint() * theta * h * w)(0, 0);
}

struct Amplitudes
{
    Complex bob;
    Complex eve;
};

inline Amplitudes received_amplitudes(const ChannelSet& ch, const RVec& thetas, const CVec& w)
{
    const CMat h = ch.bs_irs.matrix();
    Amplitudes a{reflected_amplitude(ch.bob.vector, thetas, h, w), reflected_amplitude(ch.eve.vector, thetas, h, w)};
    if (ch.eve_direct)
        a.eve += (ch.eve_direct->vector.adjoint() * w)(0, 0);
    return a;
}

inline double reference_ratio(const ChannelSet& ch, const RVec& thetas, const CVec& w, double nb, double ne)
{
    const auto a = received_amplitudes(ch, thetas, w);
    return (1.0 + std::norm(a.bob) / nb) / (1.0 + std::norm(a.eve) / ne);
}

inline double reference_rate(const ChannelSet& ch, const RVec& thetas, const CVec& w, double nb, double ne)
{
    return std::max(0.0, std::log2(1.0 + std::norm(received_amplitudes(ch, thetas, w).bob) / nb) -
                             std::log2(1.0 + std::norm(received_amplitudes(ch, thetas, w).eve) / ne));
}

// Ratio objective straight from cascade entries, summed in index order.
inline double cascade_ratio(const CascadeVectors& c, const RVec& thetas)
{
    Complex b{0.0, 0.0}, e = c.eve_direct;
    for (Eigen::Index i = 0; i < thetas.size(); ++i) {
        b += std::polar(1.0, thetas(i)) * c.bob(i);
        e += std::polar(1.0, thetas(i)) * c.eve(i);
    }
    return (1.0 + std::norm(b) / c.noise.bob) / (1.0 + std::norm(e) / c.noise.eve);
}

// A default-configuration trial (N=4, M=16, L_P=8 unless overridden) reduced to its cascades.
inline CascadeVectors trial_cascades(const ExperimentConfig& cfg, std::size_t trial)
{
    const auto setup = prepare_trial(cfg, trial);
    return build_cascades(setup.channels, setup.beamformer, setup.noise);
}

inline bool close_rel(double a, double b, double tol)
{
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace irssec::testing
