// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include <gtest/gtest.h>

#include "irssec/errors.hpp"
#include "irssec/secrecy.hpp"
#include "support.hpp"

using namespace irssec;
using namespace irssec::testing;

namespace {

ChannelSet channels(std::uint64_t seed, bool direct = false)
{
    Rng rng(seed);
    LinkOptions links;
    links.direct_eve_link = direct;
    return synthesize_channels(PathGainModel{}, ArrayGeometry::ula(16), ArrayGeometry::ura_square(8),
                               ScenarioGeometry{}, links, rng);
}

} // namespace

TEST(DiscretePhaseSet, Levels)
{
    const DiscretePhaseSet f(4);
    EXPECT_DOUBLE_EQ(f.step(), kPi / 2.0);
    EXPECT_EQ(f.values().size(), 4u);
    EXPECT_EQ(f.level_of(kPi), 2u);
    EXPECT_FALSE(f.level_of(1.0).has_value());
    EXPECT_THROW(DiscretePhaseSet(0), DomainError);
}

TEST(QuantizePhase, ZeroStaysZero) { EXPECT_EQ(quantize_phase(0.0, DiscretePhaseSet(8)), 0.0); }

TEST(QuantizePhase, OneRadianFourLevelsChordEnumeration)
{
    const DiscretePhaseSet f(4);
    double best = 0.0, best_dist = 1e9;
    for (double v : f.values()) {
        const double d = std::abs(std::polar(1.0, 1.0) - std::polar(1.0, v));
        if (d < best_dist) {
            best_dist = d;
            best = v;
        }
    }
    EXPECT_DOUBLE_EQ(best, kPi / 2.0);
    EXPECT_DOUBLE_EQ(quantize_phase(1.0, f), best);
}

TEST(QuantizePhase, MidpointTieGoesToSmallerPhase)
{
    for (std::size_t levels : {2u, 4u, 8u, 16u}) {
        const DiscretePhaseSet f(levels);
        EXPECT_DOUBLE_EQ(quantize_phase(f.step() / 2.0, f), 0.0);
        if (levels > 2)
            EXPECT_DOUBLE_EQ(quantize_phase(f.step() * 1.5, f), f.step());
        // between the top level and 2pi the smaller candidate is 0
        EXPECT_DOUBLE_EQ(quantize_phase(kTwoPi - f.step() / 2.0, f), 0.0);
    }
}

TEST(QuantizePhase, WrapsAroundTheCircle)
{
    const DiscretePhaseSet f(8);
    EXPECT_DOUBLE_EQ(quantize_phase(kTwoPi - 0.01, f), 0.0);
    EXPECT_DOUBLE_EQ(quantize_phase(-0.01, f), 0.0);
}

TEST(PhaseVector, DiscreteRejectsNonMembers)
{
    RVec t(2);
    t << 0.0, 0.3;
    EXPECT_THROW(PhaseVector::discrete(t, DiscretePhaseSet(4)), DomainError);
    auto p = PhaseVector::zeros(2, DiscretePhaseSet(4));
    EXPECT_THROW(p.set(0, 0.3), DomainError);
    p.set(1, -kPi / 2.0);
    EXPECT_NEAR(p[1], 1.5 * kPi, 1e-15);
}

TEST(EffectiveGain, ZeroPhasesSumEntries)
{
    std::mt19937_64 rng(1);
    const CVec c = random_cvec(6, rng);
    EXPECT_NEAR(std::abs(effective_gain(PhaseVector::zeros(6), c) - c.sum()), 0.0, 1e-14);
}

TEST(EffectiveGain, SingleElementAlignment)
{
    CVec c(1);
    c(0) = std::polar(2.5, 0.7);
    RVec t(1);
    t(0) = -0.7;
    const Complex g = effective_gain(PhaseVector::continuous(t), c);
    EXPECT_NEAR(g.real(), 2.5, 1e-14);
    EXPECT_NEAR(g.imag(), 0.0, 1e-14);
}

TEST(EffectiveGain, MatchesFullMatrixProduct)
{
    std::mt19937_64 rng(2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto ch = channels(seed);
        const CVec w = random_feasible_w(16, 0.3, rng);
        const RVec t = random_phases(8, rng);
        const auto c = build_cascades(ch, w, NoisePowers{});
        const Complex ref = reflected_amplitude(ch.bob.vector, t, ch.bs_irs.matrix(), w);
        EXPECT_LE(std::abs(effective_gain(PhaseVector::continuous(t), c.bob) - ref), 1e-10 * std::abs(ref));
    }
}

TEST(SecrecyRate, NoEavesdropper)
{
    std::mt19937_64 rng(3);
    const CVec b = random_cvec(4, rng, 1e-6);
    const RVec t = random_phases(4, rng);
    const double nb = 1e-12;
    const Complex eff = effective_gain(PhaseVector::continuous(t), b);
    EXPECT_NEAR(secrecy_rate(PhaseVector::continuous(t), b, CVec::Zero(4), nb, nb), std::log2(1.0 + std::norm(eff) / nb),
                1e-12);
}

TEST(SecrecyRate, SymmetricChannelsClipToZero)
{
    std::mt19937_64 rng(4);
    const CVec b = random_cvec(4, rng, 1e-6);
    EXPECT_EQ(secrecy_rate(PhaseVector::continuous(random_phases(4, rng)), b, b, 1e-12, 1e-12), 0.0);
}

TEST(SecrecyRate, MatchesRawMatrixEvaluation)
{
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (bool direct : {false, true}) {
            const auto ch = channels(100 + seed, direct);
            const CVec w = random_feasible_w(16, 0.3, rng);
            const RVec t = random_phases(8, rng);
            const NoisePowers noise{};
            const auto c = build_cascades(ch, w, noise);
            const double ref = reference_rate(ch, t, w, noise.bob, noise.eve);
            EXPECT_NEAR(secrecy_rate(PhaseVector::continuous(t), c), ref, 1e-9 * std::max(1.0, ref));
        }
    }
}

TEST(Cascades, ZeroBeamformer)
{
    const auto c = build_cascades(channels(7, true), CVec::Zero(16), NoisePowers{});
    EXPECT_EQ(c.bob.norm(), 0.0);
    EXPECT_EQ(c.eve.norm(), 0.0);
    EXPECT_EQ(std::abs(c.eve_direct), 0.0);
}

TEST(Cascades, TransposeProductMatchesMatrices)
{
    std::mt19937_64 rng(8);
    const auto ch = channels(8);
    const CVec w = random_feasible_w(16, 0.3, rng);
    const auto c = build_cascades(ch, w, NoisePowers{});
    for (int k = 0; k < 10; ++k) {
        const RVec t = random_phases(8, rng);
        CVec unit(8);
        for (Eigen::Index i = 0; i < 8; ++i)
            unit(i) = std::polar(1.0, t(i));
        const Complex via_cascade = (unit.transpose() * c.bob)(0, 0);
        const Complex ref = reflected_amplitude(ch.bob.vector, t, ch.bs_irs.matrix(), w);
        EXPECT_LE(std::abs(via_cascade - ref), 1e-10 * std::abs(ref));
    }
}

TEST(Cascades, RankOneSubstitution)
{
    std::mt19937_64 rng(9);
    const auto ch = channels(9);
    const CVec w = random_feasible_w(16, 0.3, rng);
    const auto c = build_cascades(ch, w, NoisePowers{});
    const Complex bw = (ch.bs_irs.bs_steering.adjoint() * w)(0, 0);
    for (Eigen::Index i = 0; i < 8; ++i) {
        const Complex expect = ch.bs_irs.gain * std::conj(ch.bob.vector(i)) * ch.bs_irs.irs_steering(i) * bw;
        EXPECT_LE(std::abs(c.bob(i) - expect), 1e-12 * std::abs(expect));
    }
}

TEST(Cascades, RejectsMismatchedBeamformer)
{
    EXPECT_THROW(build_cascades(channels(10), CVec::Zero(8), NoisePowers{}), DimensionError);
    EXPECT_THROW(build_cascades(channels(10), CVec::Zero(16), NoisePowers{0.0, 1.0}), DomainError);
}
