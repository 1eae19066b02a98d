// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "irssec/errors.hpp"

namespace irssec {

SteeringDictionary::SteeringDictionary(const ArrayGeometry& geometry, std::size_t num_atoms)
{
    if (geometry.kind != ArrayKind::Ula)
        throw GeometryMismatch("steering dictionary is defined over a ULA");
    if (num_atoms == 0)
        throw DomainError("dictionary needs at least one atom");
    atoms_.resize(static_cast<Eigen::Index>(geometry.num_elements), static_cast<Eigen::Index>(num_atoms));
    for (std::size_t k = 0; k < num_atoms; ++k) {
        const double s = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(num_atoms);
        atoms_.col(static_cast<Eigen::Index>(k)) = steering_ula(geometry, std::asin(s));
    }
}

SteeringDictionary::SteeringDictionary(const ArrayGeometry& geometry)
    : SteeringDictionary(geometry, 2 * geometry.num_elements)
{
}

double SteeringDictionary::grid_point(std::size_t k) const
{
    return -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(size());
}

CVec mrt_beamformer(const CVec& b, double power)
{
    if (!(power > 0.0))
        throw DomainError("transmit power must be positive");
    const double norm = b.norm();
    if (!(norm > 0.0))
        throw DegenerateChannel("MRT beamformer undefined for a zero channel");
    return (std::sqrt(power) / norm) * b;
}

double direct_link_ratio(const CVec& w, const CVec& h_bob, const CVec& h_eve, double noise_bob,
                         double noise_eve)
{
    return (1.0 + std::norm(h_bob.dot(w)) / noise_bob) / (1.0 + std::norm(h_eve.dot(w)) / noise_eve);
}

CVec gevd_beamformer(const CVec& h_bob, const CVec& h_eve, double noise_bob, double noise_eve,
                     double power)
{
    if (!(power > 0.0))
        throw DomainError("transmit power must be positive");
    if (!(noise_bob > 0.0 && noise_eve > 0.0))
        throw DomainError("noise powers must be positive");
    if (h_bob.size() != h_eve.size())
        throw DimensionError("Bob and Eve direct channels differ in length");

    const Eigen::Index m = h_bob.size();
    const CMat identity = CMat::Identity(m, m);
    const CMat num = (noise_bob / power) * identity + h_bob * h_bob.adjoint();
    const CMat den = (noise_eve / power) * identity + h_eve * h_eve.adjoint();

    const Eigen::LLT<CMat> chol(den);
    const CMat l_inv = chol.matrixL().solve(identity);
    CMat whitened = l_inv * num * l_inv.adjoint();
    whitened = 0.5 * (whitened + whitened.adjoint()).eval();

    const Eigen::SelfAdjointEigenSolver<CMat> eig(whitened);
    const CVec principal = eig.eigenvectors().col(m - 1);
    CVec w = l_inv.adjoint() * principal;
    w *= std::sqrt(power) / w.norm();

    if (direct_link_ratio(w, h_bob, h_eve, noise_bob, noise_eve) < 1.0)
        return CVec::Zero(m);
    return w;
}

BeamformerSolution omp_hybrid_decompose(const CVec& w, const SteeringDictionary& dictionary,
                                        std::size_t rf_chains, double power_budget)
{
    const CMat& atoms = dictionary.atoms();
    if (rf_chains == 0)
        throw ConfigError("OMP needs at least one RF chain");
    if (dictionary.size() == 0)
        throw ConfigError("OMP dictionary is empty");
    if (rf_chains > dictionary.size())
        throw ConfigError("RF chains (" + std::to_string(rf_chains) + ") exceed dictionary size (" +
                          std::to_string(dictionary.size()) + ")");
    if (atoms.rows() != w.size())
        throw DimensionError("dictionary atom length differs from the beamformer");

    BeamformerSolution sol;
    sol.digital_full = w;
    sol.power_budget = power_budget;

    std::vector<Eigen::Index> selected;
    std::vector<bool> used(dictionary.size(), false);
    CVec residual = w;
    CMat analog(w.size(), 0);
    CVec baseband;

    for (std::size_t it = 0; it < rf_chains; ++it) {
        const RVec corr = (atoms.adjoint() * residual).cwiseAbs();
        Eigen::Index pick = -1;
        double best = -1.0;
        for (Eigen::Index k = 0; k < corr.size(); ++k) {
            if (!used[static_cast<std::size_t>(k)] && corr(k) > best) {
                best = corr(k);
                pick = k;
            }
        }
        used[static_cast<std::size_t>(pick)] = true;
        selected.push_back(pick);
        analog.conservativeResize(Eigen::NoChange, analog.cols() + 1);
        analog.col(analog.cols() - 1) = atoms.col(pick);

        baseband = analog.colPivHouseholderQr().solve(w);
        residual = w - analog * baseband;
        sol.residual_history.push_back(residual.norm());
    }

    const double achieved = (analog * baseband).norm();
    if (achieved > 0.0)
        baseband *= w.norm() / achieved;
    sol.analog = std::move(analog);
    sol.baseband = std::move(baseband);
    return sol;
}

} // namespace irssec
