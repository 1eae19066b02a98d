// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include <gtest/gtest.h>

#include "irssec/beamforming.hpp"
#include "irssec/errors.hpp"
#include "support.hpp"

using namespace irssec;
using namespace irssec::testing;

TEST(Mrt, UnitVectorChannel)
{
    CVec b = CVec::Zero(4);
    b(0) = 1.0;
    const CVec w = mrt_beamformer(b, 4.0);
    EXPECT_NEAR(std::abs(w(0) - Complex(2.0, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(w.tail(3).norm(), 0.0, 1e-15);
}

TEST(Mrt, AchievesCauchySchwarzBound)
{
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        const CVec b = random_cvec(16, rng);
        const double p = 0.3;
        const CVec w = mrt_beamformer(b, p);
        EXPECT_NEAR(std::norm(b.dot(w)), p * b.squaredNorm(), 1e-12 * p * b.squaredNorm());
        EXPECT_NEAR(w.squaredNorm(), p, 1e-14);
    }
}

TEST(Mrt, NoFeasibleBeamformerDoesBetter)
{
    std::mt19937_64 rng(2);
    const CVec b = random_cvec(16, rng);
    const double p = 0.3;
    const double best = std::norm(b.dot(mrt_beamformer(b, p)));
    for (int k = 0; k < 1000; ++k)
        EXPECT_LE(std::norm(b.dot(random_feasible_w(16, p, rng))), best);
}

TEST(Mrt, RejectsZeroChannel) { EXPECT_THROW(mrt_beamformer(CVec::Zero(4), 1.0), DegenerateChannel); }

TEST(Gevd, NoEavesdropperReducesToMrt)
{
    std::mt19937_64 rng(3);
    const CVec h = random_cvec(16, rng, 1e-5);
    const CVec w = gevd_beamformer(h, CVec::Zero(16), 1e-12, 1e-12, 0.3);
    EXPECT_NEAR(std::abs(h.dot(w)) / (h.norm() * w.norm()), 1.0, 1e-12);
    EXPECT_NEAR(w.squaredNorm(), 0.3, 1e-12);
}

TEST(Gevd, BeatsMrtAndRandomSearch)
{
    std::mt19937_64 rng(4);
    const double nb = 1e-12, ne = 1e-12, p = 0.3;
    for (int inst = 0; inst < 5; ++inst) {
        const CVec hd = random_cvec(16, rng, 1e-5);
        const CVec he = random_cvec(16, rng, 1e-5);
        const CVec w = gevd_beamformer(hd, he, nb, ne, p);
        const double value = direct_link_ratio(w, hd, he, nb, ne);
        EXPECT_GE(value, direct_link_ratio(mrt_beamformer(hd, p), hd, he, nb, ne));
        double sampled = 0.0;
        for (int k = 0; k < 10000; ++k)
            sampled = std::max(sampled, direct_link_ratio(random_feasible_w(16, p, rng), hd, he, nb, ne));
        EXPECT_GE(value, sampled - 1e-8 * sampled);
    }
}

TEST(Gevd, DirectLinkRatioMatchesDefinition)
{
    std::mt19937_64 rng(5);
    const CVec hd = random_cvec(8, rng), he = random_cvec(8, rng), w = random_cvec(8, rng);
    const double ref = (1.0 + std::norm((hd.adjoint() * w)(0, 0)) / 2.0) / (1.0 + std::norm((he.adjoint() * w)(0, 0)) / 3.0);
    EXPECT_NEAR(direct_link_ratio(w, hd, he, 2.0, 3.0), ref, 1e-12 * ref);
}

TEST(Omp, SingleAtomRecovery)
{
    const auto bs = ArrayGeometry::ula(16);
    const SteeringDictionary dict(bs);
    const CVec w = Complex(0.4, -0.2) * dict.atoms().col(5);
    const auto sol = omp_hybrid_decompose(w, dict, 1, w.squaredNorm());
    EXPECT_LE((sol.hybrid() - w).norm(), 1e-10);
}

TEST(Omp, ResidualNonIncreasing)
{
    std::mt19937_64 rng(6);
    const SteeringDictionary dict(ArrayGeometry::ula(16));
    for (int k = 0; k < 20; ++k) {
        const CVec w = random_cvec(16, rng);
        const auto sol = omp_hybrid_decompose(w, dict, 10, w.squaredNorm());
        ASSERT_EQ(sol.residual_history.size(), 10u);
        for (std::size_t i = 1; i < sol.residual_history.size(); ++i)
            EXPECT_LE(sol.residual_history[i], sol.residual_history[i - 1] * (1.0 + 1e-12));
    }
}

TEST(Omp, OnGridMrtReconstruction)
{
    const auto bs = ArrayGeometry::ula(16);
    const SteeringDictionary dict(bs);
    for (std::size_t k = 0; k < dict.size(); k += 3) {
        const CVec b = steering_ula(bs, std::asin(dict.grid_point(k)));
        const CVec w = mrt_beamformer(b, 0.3);
        const auto sol = omp_hybrid_decompose(w, dict, 10, 0.3);
        EXPECT_LE((sol.hybrid() - w).norm(), 1e-6 * w.norm()) << "atom " << k;
    }
}

TEST(Omp, AnalogEntriesConstantModulus)
{
    std::mt19937_64 rng(7);
    const SteeringDictionary dict(ArrayGeometry::ula(16));
    const auto sol = omp_hybrid_decompose(random_cvec(16, rng), dict, 10, 1.0);
    EXPECT_EQ(sol.analog.cols(), 10);
    for (Eigen::Index i = 0; i < sol.analog.size(); ++i)
        EXPECT_NEAR(std::abs(sol.analog(i)), 0.25, 1e-12);
}

TEST(Omp, RejectsMoreChainsThanAtoms)
{
    const SteeringDictionary dict(ArrayGeometry::ula(4), 6);
    EXPECT_THROW(omp_hybrid_decompose(CVec::Ones(4), dict, 7, 1.0), ConfigError);
}
