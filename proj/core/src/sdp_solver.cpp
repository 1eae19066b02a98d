// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/sdp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "irssec/errors.hpp"

namespace irssec {

namespace {

double inner(const RMat& a, const RMat& b) { return a.cwiseProduct(b).sum(); }

RMat sym(const RMat& m) { return 0.5 * (m + m.transpose()); }

RVec apply_constraints(const std::vector<RMat>& a, const RMat& x)
{
    RVec out(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        out(static_cast<Eigen::Index>(i)) = inner(a[i], x);
    return out;
}

RMat adjoint_constraints(const std::vector<RMat>& a, const RVec& y, Eigen::Index n)
{
    RMat out = RMat::Zero(n, n);
    for (std::size_t i = 0; i < a.size(); ++i)
        out += y(static_cast<Eigen::Index>(i)) * a[i];
    return out;
}

// Largest alpha in (0, 1] keeping m + alpha*dm positive definite, damped by `fraction`.
double step_to_boundary(const Eigen::LLT<RMat>& chol, const RMat& dm, double fraction)
{
    const auto& l = chol.matrixL();
    RMat t = l.solve(dm);
    t = l.solve(t.transpose()).transpose(); // L^{-1} dM L^{-T}
    const Eigen::SelfAdjointEigenSolver<RMat> eig(sym(t), Eigen::EigenvaluesOnly);
    const double lmin = eig.eigenvalues()(0);
    if (lmin >= 0.0)
        return 1.0;
    return std::min(1.0, fraction * (-1.0 / lmin));
}

struct Direction
{
    RMat dx;
    RVec dy;
    RMat dz;
};

} // namespace

SdpResult solve_standard_sdp(const SdpProblem& problem, const SdpSettings& settings)
{
    const RMat& c = problem.objective;
    const auto& a = problem.constraints;
    const RVec& b = problem.rhs;
    const Eigen::Index n = c.rows();
    const auto m = static_cast<Eigen::Index>(a.size());
    if (c.cols() != n || b.size() != m)
        throw DimensionError("SDP data dimensions are inconsistent");
    for (const auto& ai : a)
        if (ai.rows() != n || ai.cols() != n)
            throw DimensionError("SDP constraint matrix has the wrong order");

    const double norm_b = b.norm();
    const double norm_c = c.norm();
    const double dn = static_cast<double>(n);

    // Standard infeasible starting point scaled to the data.
    double xi = std::max(10.0, std::sqrt(dn));
    double eta = std::max({10.0, std::sqrt(dn), norm_c});
    for (Eigen::Index i = 0; i < m; ++i) {
        const double an = a[static_cast<std::size_t>(i)].norm();
        xi = std::max(xi, dn * (1.0 + std::abs(b(i))) / (1.0 + an));
        eta = std::max(eta, an);
    }

    RMat x = xi * RMat::Identity(n, n);
    RMat z = eta * RMat::Identity(n, n);
    RVec y = RVec::Zero(m);

    SdpResult res;
    const RMat identity = RMat::Identity(n, n);

    for (std::size_t iter = 0;; ++iter) {
        const RVec rp = b - apply_constraints(a, x);
        const RMat rd = c - z - adjoint_constraints(a, y, n);
        const double pobj = inner(c, x);
        const double dobj = b.dot(y);
        res.primal_residual = rp.norm() / (1.0 + norm_b);
        res.dual_residual = rd.norm() / (1.0 + norm_c);
        res.gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
        res.iterations = iter;

        const auto within = [&](double tol) {
            return res.primal_residual <= tol && res.dual_residual <= tol && res.gap <= tol;
        };
        if (within(settings.tolerance)) {
            res.reached_tolerance = true;
            break;
        }
        if (iter >= settings.max_iterations && within(settings.acceptable_tolerance))
            break;
        if (iter >= settings.max_iterations)
            throw SolverFailure("SDP interior point did not converge in " + std::to_string(iter) +
                                    " iterations",
                                res.primal_residual, res.dual_residual, res.gap);

        const double mu = inner(x, z) / dn;

        // NT scaling point W = L (L^T Z L)^{-1/2} L^T with X = L L^T, so that W Z W = X.
        const Eigen::LLT<RMat> chol_x(x);
        const Eigen::LLT<RMat> chol_z(z);
        if (chol_x.info() != Eigen::Success || chol_z.info() != Eigen::Success) {
            if (within(settings.acceptable_tolerance))
                break;
            throw SolverFailure("SDP iterate left the PSD cone", res.primal_residual,
                                res.dual_residual, res.gap);
        }
        const RMat lx = chol_x.matrixL();
        const Eigen::SelfAdjointEigenSolver<RMat> eig(sym(lx.transpose() * z * lx));
        const RVec inv_sqrt = eig.eigenvalues().cwiseMax(std::numeric_limits<double>::min()).cwiseSqrt().cwiseInverse();
        const RMat q = eig.eigenvectors();
        const RMat w = sym(lx * q * inv_sqrt.asDiagonal() * q.transpose() * lx.transpose());
        const RMat z_inv = chol_z.solve(identity);

        // Schur complement M_ij = <A_i, W A_j W>
        std::vector<RMat> wa(a.size());
        for (std::size_t j = 0; j < a.size(); ++j)
            wa[j] = w * a[j] * w;
        RMat schur(m, m);
        for (Eigen::Index i = 0; i < m; ++i)
            for (Eigen::Index j = i; j < m; ++j)
                schur(i, j) = schur(j, i) = inner(a[static_cast<std::size_t>(i)], wa[static_cast<std::size_t>(j)]);
        const Eigen::LDLT<RMat> schur_fact(schur);
        const RMat w_rd_w = w * rd * w;
        const RVec a_wrdw = apply_constraints(a, w_rd_w);

        auto direction = [&](double target) {
            // dX + W dZ W = target Z^{-1} - X,  dZ = Rd - A^T dy,  A(dX) = rp
            const RMat rc = target * z_inv - x;
            const RVec rhs = rp - apply_constraints(a, rc) + a_wrdw;
            Direction d;
            d.dy = schur_fact.solve(rhs);
            d.dz = sym(rd - adjoint_constraints(a, d.dy, n));
            d.dx = sym(rc - w * d.dz * w);
            return d;
        };

        const Direction pred = direction(0.0);
        const double ap = step_to_boundary(chol_x, pred.dx, 1.0);
        const double ad = step_to_boundary(chol_z, pred.dz, 1.0);
        const double mu_aff = inner(x + ap * pred.dx, z + ad * pred.dz) / dn;
        const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

        const Direction corr = direction(sigma * mu);
        const double alpha_p = step_to_boundary(chol_x, corr.dx, settings.step_fraction);
        const double alpha_d = step_to_boundary(chol_z, corr.dz, settings.step_fraction);

        x = sym(x + alpha_p * corr.dx);
        y = y + alpha_d * corr.dy;
        z = sym(z + alpha_d * corr.dz);
    }

    res.x = std::move(x);
    res.y = std::move(y);
    res.z = std::move(z);
    res.primal_objective = inner(c, res.x);
    res.dual_objective = b.dot(res.y);
    return res;
}

} // namespace irssec
