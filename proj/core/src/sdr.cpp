// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/sdr.hpp"

#include <cmath>

#include "irssec/errors.hpp"

namespace irssec {

namespace {

CMat quadratic_form(const CVec& c, double noise)
{
    const auto n = c.size();
    return CMat::Identity(n, n) / static_cast<double>(n) + (c * c.adjoint()) / noise;
}

// Hermitian H -> [[Re H, -Im H], [Im H, Re H]]
RMat real_embedding(const CMat& h)
{
    const auto n = h.rows();
    RMat out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = h.real();
    out.topRightCorner(n, n) = -h.imag();
    out.bottomLeftCorner(n, n) = h.imag();
    out.bottomRightCorner(n, n) = h.real();
    return out;
}

CMat from_real_embedding(const RMat& x, Eigen::Index n)
{
    const RMat re = 0.5 * (x.topLeftCorner(n, n) + x.bottomRightCorner(n, n));
    const RMat im = 0.5 * (x.bottomLeftCorner(n, n) - x.topRightCorner(n, n));
    CMat out(n, n);
    out.real() = re;
    out.imag() = im;
    return 0.5 * (out + out.adjoint());
}

double quad(const CMat& r, const CVec& v) { return v.dot(r * v).real(); }

CVec sdr_vector(const PhaseVector& phase, bool augmented)
{
    const CVec conj_theta = phase.unit_vector().conjugate();
    if (!augmented)
        return conj_theta;
    CVec v(conj_theta.size() + 1);
    v.head(conj_theta.size()) = conj_theta;
    v(conj_theta.size()) = 1.0;
    return v;
}

// Unit-modulus projection of a sample of v back to IRS phases.
PhaseVector phases_from(const CVec& v, bool augmented)
{
    const Eigen::Index n = augmented ? v.size() - 1 : v.size();
    const double ref = augmented ? std::arg(v(n)) : 0.0;
    RVec thetas(n);
    for (Eigen::Index i = 0; i < n; ++i)
        thetas(i) = ref - std::arg(v(i));
    return PhaseVector::continuous(thetas);
}

} // namespace

SdrMatrices build_sdr_matrices(const CascadeVectors& cascades)
{
    if (cascades.bob.size() != cascades.eve.size())
        throw DimensionError("cascade vectors differ in length");
    if (!(cascades.noise.bob > 0.0 && cascades.noise.eve > 0.0))
        throw DomainError("noise powers must be positive");

    SdrMatrices m;
    m.augmented = cascades.eve_direct != Complex(0.0, 0.0);
    if (!m.augmented) {
        m.bob = quadratic_form(cascades.bob, cascades.noise.bob);
        m.eve = quadratic_form(cascades.eve, cascades.noise.eve);
        return m;
    }
    const auto n = cascades.bob.size();
    CVec bob = CVec::Zero(n + 1);
    CVec eve = CVec::Zero(n + 1);
    bob.head(n) = cascades.bob;
    eve.head(n) = cascades.eve;
    eve(n) = cascades.eve_direct;
    m.bob = quadratic_form(bob, cascades.noise.bob);
    m.eve = quadratic_form(eve, cascades.noise.eve);
    return m;
}

SdrMatrices build_sdr_matrices(const ChannelSet& channels, const CVec& w, const NoisePowers& noise)
{
    return build_sdr_matrices(build_cascades(channels, w, noise));
}

SdpSolution solve_sdp(const SdrMatrices& matrices, const SdpSettings& settings)
{
    const Eigen::Index n = matrices.order();
    if (n < 1 || matrices.eve.rows() != n)
        throw DimensionError("SDR matrices are empty or differ in order");

    // Solve in whitened coordinates X = T Y T^H with T = R_E^{-1/2}. The fractional constraint
    // becomes tr(Y) = 1 and the strong rank-one Eve term no longer squeezes the feasible set.
    const Eigen::SelfAdjointEigenSolver<CMat> eve_eig(matrices.eve);
    if (!(eve_eig.eigenvalues()(0) > 0.0))
        throw DegenerateChannel("Eve's quadratic form is not positive definite");
    const CMat t = eve_eig.eigenvectors() * eve_eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                   eve_eig.eigenvectors().adjoint();
    const CMat bob_white = t.adjoint() * matrices.bob * t;
    const double s_bob = bob_white.norm();

    SdpProblem p;
    p.objective = -0.5 * real_embedding(bob_white / s_bob);
    p.constraints.push_back(0.5 * real_embedding(CMat::Identity(n, n)));
    // (T Y T^H)_kk = t_k^H Y t_k with t_k the conjugated k-th row of T
    const CVec t0 = t.row(0).adjoint();
    for (Eigen::Index k = 1; k < n; ++k) {
        const CVec tk = t.row(k).adjoint();
        p.constraints.push_back(0.5 * real_embedding(t0 * t0.adjoint() - tk * tk.adjoint()));
    }
    p.rhs = RVec::Zero(n);
    p.rhs(0) = 1.0;

    const SdpResult r = solve_standard_sdp(p, settings);

    SdpSolution sol;
    const CMat y = from_real_embedding(r.x, n);
    sol.x = t * y * t.adjoint();
    sol.x = 0.5 * (sol.x + sol.x.adjoint()).eval();
    sol.mu = sol.x.diagonal().real().mean();
    sol.objective = (matrices.bob * sol.x).trace().real();
    sol.primal_residual = r.primal_residual;
    sol.dual_residual = r.dual_residual;
    sol.gap = r.gap;
    sol.iterations = r.iterations;
    return sol;
}

double sdr_ratio(const PhaseVector& phase, const SdrMatrices& matrices)
{
    const CVec v = sdr_vector(phase, matrices.augmented);
    if (v.size() != matrices.order())
        throw DimensionError("phase vector does not match the SDR order");
    return quad(matrices.bob, v) / quad(matrices.eve, v);
}

RandomizedPhases gaussian_randomize(const SdpSolution& solution, std::size_t num_samples,
                                    const SdrMatrices& matrices, Rng& rng)
{
    if (num_samples < 1)
        throw DomainError("Gaussian randomization needs at least one sample");
    if (!(solution.mu > 0.0))
        throw DomainError("SDP solution has a non-positive diagonal");

    const CMat phi = solution.x / solution.mu;
    const Eigen::SelfAdjointEigenSolver<CMat> eig(phi);
    const RVec lambda = eig.eigenvalues().cwiseMax(0.0);
    const Eigen::Index n = phi.rows();

    RandomizedPhases out;
    const double top = lambda(n - 1);
    const double second = n > 1 ? lambda(n - 2) : 0.0;
    if (n == 1 || second < 1e-6 * top) {
        out.phase = phases_from(eig.eigenvectors().col(n - 1), matrices.augmented);
        out.objective = sdr_ratio(out.phase, matrices);
        out.rank_one = true;
        return out;
    }

    const CMat factor = eig.eigenvectors() * lambda.cwiseSqrt().asDiagonal();
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    out.objective = -1.0;
    for (std::size_t s = 0; s < num_samples; ++s) {
        CVec z(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            z(i) = Complex(re, im);
        }
        const PhaseVector candidate = phases_from(factor * z, matrices.augmented);
        const double value = sdr_ratio(candidate, matrices);
        if (value > out.objective) {
            out.objective = value;
            out.phase = candidate;
        }
    }
    return out;
}

SdpPipelineResult sdp_pipeline(const CascadeVectors& cascades, const DiscretePhaseSet& set,
                               std::size_t num_samples, Rng& rng, const SdpSettings& settings)
{
    const SdrMatrices matrices = build_sdr_matrices(cascades);
    SdpPipelineResult out;
    out.sdp = solve_sdp(matrices, settings);
    const RandomizedPhases rnd = gaussian_randomize(out.sdp, num_samples, matrices, rng);
    out.continuous_phase = rnd.phase;
    out.continuous_objective = secrecy_ratio(rnd.phase, cascades);
    out.phase = PhaseVector::quantized(rnd.phase.thetas(), set);
    out.objective = secrecy_ratio(out.phase, cascades);
    return out;
}

} // namespace irssec
