// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/bcd.hpp"

#include <algorithm>
#include <cmath>

#include "irssec/errors.hpp"

namespace irssec {

namespace {

ElementCoefficients coefficients_from(Complex own_bob, Complex rest_bob, Complex own_eve,
                                      Complex rest_eve, const NoisePowers& noise)
{
    ElementCoefficients k;
    const Complex cross_bob = own_bob * std::conj(rest_bob);
    const Complex cross_eve = own_eve * std::conj(rest_eve);
    k.c_bob = 1.0 + (std::norm(own_bob) + std::norm(rest_bob)) / noise.bob;
    k.c_eve = 1.0 + (std::norm(own_eve) + std::norm(rest_eve)) / noise.eve;
    k.d_bob = 2.0 * std::abs(cross_bob) / noise.bob;
    k.d_eve = 2.0 * std::abs(cross_eve) / noise.eve;
    k.p_bob = std::arg(cross_bob);
    k.p_eve = std::arg(cross_eve);
    return k;
}

// |e^{j theta}|-weighted sums of both cascades, Eve's direct term included.
struct Totals
{
    Complex bob;
    Complex eve;
};

Totals totals_of(const CVec& unit, const CascadeVectors& c)
{
    return {unit.cwiseProduct(c.bob).sum(), unit.cwiseProduct(c.eve).sum() + c.eve_direct};
}

double ratio_of(const Totals& t, const NoisePowers& noise)
{
    return (1.0 + std::norm(t.bob) / noise.bob) / (1.0 + std::norm(t.eve) / noise.eve);
}

} // namespace

double ElementCoefficients::evaluate(double theta) const
{
    return (c_bob + d_bob * std::cos(theta + p_bob)) / (c_eve + d_eve * std::cos(theta + p_eve));
}

ElementCoefficients element_coefficients(std::size_t index, const PhaseVector& phase,
                                         const CascadeVectors& cascades)
{
    const std::size_t n = cascades.size();
    if (phase.size() != n || static_cast<std::size_t>(cascades.eve.size()) != n)
        throw DimensionError("phase vector and cascades differ in length");
    if (index >= n)
        throw DimensionError("element index out of range");

    const auto i = static_cast<Eigen::Index>(index);
    Complex rest_bob{0.0, 0.0};
    Complex rest_eve = cascades.eve_direct;
    for (Eigen::Index m = 0; m < static_cast<Eigen::Index>(n); ++m) {
        if (m == i)
            continue;
        const Complex e = std::polar(1.0, phase.thetas()(m));
        rest_bob += e * cascades.bob(m);
        rest_eve += e * cascades.eve(m);
    }
    return coefficients_from(cascades.bob(i), rest_bob, cascades.eve(i), rest_eve, cascades.noise);
}

std::optional<double> bcd_phase_update(const ElementCoefficients& k)
{
    // sign(f'(theta)) = sign(A sin(theta) + B cos(theta) + C)
    const double a = k.c_bob * k.d_eve * std::cos(k.p_eve) - k.c_eve * k.d_bob * std::cos(k.p_bob);
    const double b = k.c_bob * k.d_eve * std::sin(k.p_eve) - k.c_eve * k.d_bob * std::sin(k.p_bob);
    const double c = k.d_bob * k.d_eve * std::sin(k.p_eve - k.p_bob);
    const double r = std::hypot(a, b);

    const double scale = k.c_bob * k.d_eve + k.c_eve * k.d_bob;
    if (!(scale > 0.0) || r <= 1e-14 * scale)
        return std::nullopt;

    const double s = std::clamp(-c / r, -1.0, 1.0);
    // A = 0 gives atan(+-inf) = +-pi/2, which is the correct limit.
    const double tilde = -std::atan(b / a) - std::asin(s);
    return wrap_phase(a < 0.0 ? tilde : tilde + kPi);
}

PhaseVector bob_aligned_phases(const CascadeVectors& cascades,
                               const std::optional<DiscretePhaseSet>& set)
{
    const RVec thetas = cascades.bob.unaryExpr([](const Complex& z) { return -std::arg(z); }).real();
    return set ? PhaseVector::quantized(thetas, *set) : PhaseVector::continuous(thetas);
}

BcdState run_algorithm1(const CascadeVectors& cascades, const PhaseVector& init,
                        const BcdOptions& options)
{
    const std::size_t n = cascades.size();
    if (init.size() != n)
        throw DimensionError("initial phase vector length differs from the IRS size");
    if (!(options.epsilon > 0.0))
        throw DomainError("BCD tolerance must be positive");

    BcdState state;
    state.phase = init;
    CVec unit = init.unit_vector();
    state.initial_objective = secrecy_ratio(unit, cascades);
    const auto& set = init.phase_set();

    for (std::size_t sweep = 0; sweep < options.max_iters; ++sweep) {
        const CVec previous = unit;
        Totals totals = totals_of(unit, cascades); // refreshed each sweep to shed drift

        for (std::size_t idx = 0; idx < n; ++idx) {
            const auto i = static_cast<Eigen::Index>(idx);
            const Complex own_bob = cascades.bob(i);
            const Complex own_eve = cascades.eve(i);
            const Complex rest_bob = totals.bob - unit(i) * own_bob;
            const Complex rest_eve = totals.eve - unit(i) * own_eve;
            const auto k = coefficients_from(own_bob, rest_bob, own_eve, rest_eve, cascades.noise);

            const double current = state.phase[idx];
            if (auto best = bcd_phase_update(k)) {
                const double candidate = set ? quantize_phase(*best, *set) : *best;
                if (k.evaluate(candidate) > k.evaluate(current)) {
                    state.phase.set(idx, candidate);
                    unit(i) = std::polar(1.0, state.phase[idx]);
                    totals.bob = rest_bob + unit(i) * own_bob;
                    totals.eve = rest_eve + unit(i) * own_eve;
                }
            }
            if (options.on_update)
                options.on_update(idx, state.phase);
        }

        state.iterations = sweep + 1;
        state.objective_history.push_back(ratio_of(totals_of(unit, cascades), cascades.noise));
        if ((unit - previous).norm() <= options.epsilon) {
            state.converged = true;
            break;
        }
    }
    return state;
}

BcdState run_algorithm1(const ChannelSet& channels, const CVec& w, const NoisePowers& noise,
                        const PhaseVector& init, const BcdOptions& options)
{
    return run_algorithm1(build_cascades(channels, w, noise), init, options);
}

} // namespace irssec
