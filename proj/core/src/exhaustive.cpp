// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/exhaustive.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "irssec/errors.hpp"

namespace irssec {

namespace {

struct Best
{
    double objective = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> levels;
    std::uint64_t visited = 0;
};

// Relative slack under which two incremental objective values count as a tie.
constexpr double kTieSlack = 1e-12;

void offer(Best& best, double value, const std::vector<std::size_t>& levels)
{
    if (best.levels.empty()) {
        best.objective = value;
        best.levels = levels;
        return;
    }
    const double slack = kTieSlack * std::max(1.0, std::abs(best.objective));
    if (value > best.objective + slack ||
        (value >= best.objective - slack && levels < best.levels)) {
        best.objective = value;
        best.levels = levels;
    }
}

/// Enumerates every level assignment of elements [first, n) with elements before `first`
/// held at `prefix`, using Knuth's loopless reflected mixed-radix Gray code.
Best enumerate(const CascadeVectors& c, const DiscretePhaseSet& set,
               const std::vector<std::size_t>& prefix)
{
    const std::size_t n = c.size();
    const std::size_t first = prefix.size();
    const std::size_t levels = set.num_levels();
    const std::size_t free = n - first;

    std::vector<Complex> phasor(levels);
    for (std::size_t k = 0; k < levels; ++k)
        phasor[k] = std::polar(1.0, set.value(k));

    std::vector<std::size_t> digits(n, 0);
    std::copy(prefix.begin(), prefix.end(), digits.begin());

    Complex acc_bob{0.0, 0.0};
    Complex acc_eve = c.eve_direct;
    for (std::size_t i = 0; i < n; ++i) {
        acc_bob += phasor[digits[i]] * c.bob(static_cast<Eigen::Index>(i));
        acc_eve += phasor[digits[i]] * c.eve(static_cast<Eigen::Index>(i));
    }
    auto ratio = [&] {
        return (1.0 + std::norm(acc_bob) / c.noise.bob) / (1.0 + std::norm(acc_eve) / c.noise.eve);
    };

    Best best;
    best.levels = digits;
    best.objective = ratio();
    best.visited = 1;
    if (free == 0 || levels < 2)
        return best;

    // focus pointers and directions over the free digits
    std::vector<std::size_t> focus(free + 1);
    std::vector<int> dir(free, 1);
    for (std::size_t j = 0; j <= free; ++j)
        focus[j] = j;

    while (true) {
        const std::size_t j = focus[0];
        focus[0] = 0;
        if (j == free)
            break;
        const std::size_t elem = first + j;
        const std::size_t old_level = digits[elem];
        const std::size_t new_level = static_cast<std::size_t>(static_cast<long>(old_level) + dir[j]);
        digits[elem] = new_level;
        const Complex delta = phasor[new_level] - phasor[old_level];
        acc_bob += delta * c.bob(static_cast<Eigen::Index>(elem));
        acc_eve += delta * c.eve(static_cast<Eigen::Index>(elem));
        if (new_level == 0 || new_level == levels - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        ++best.visited;
        offer(best, ratio(), digits);
    }
    return best;
}

} // namespace

std::uint64_t enumeration_size(std::size_t levels, std::size_t elements)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < elements; ++i) {
        if (levels != 0 && total > std::numeric_limits<std::uint64_t>::max() / levels)
            return std::numeric_limits<std::uint64_t>::max();
        total *= levels;
    }
    return total;
}

ExhaustiveResult exhaustive_search(const CascadeVectors& cascades, const DiscretePhaseSet& set,
                                   const ExhaustiveOptions& options)
{
    const std::size_t n = cascades.size();
    if (static_cast<std::size_t>(cascades.eve.size()) != n)
        throw DimensionError("cascade vectors differ in length");
    if (n == 0)
        throw DimensionError("exhaustive search needs at least one element");
    const std::uint64_t total = enumeration_size(set.num_levels(), n);
    if (total > options.enumeration_cap)
        throw EnumerationCapExceeded("exhaustive search over " + std::to_string(set.num_levels()) +
                                     "^" + std::to_string(n) + " candidates exceeds the cap of " +
                                     std::to_string(options.enumeration_cap) +
                                     "; reduce N or L_P");

    Best best;
    const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, set.num_levels());
    if (workers <= 1) {
        best = enumerate(cascades, set, {});
    } else {
        // One partition per level of element 0, merged in level order.
        std::vector<Best> parts(set.num_levels());
        std::vector<std::thread> pool;
        std::size_t next = 0;
        while (next < parts.size()) {
            pool.clear();
            for (std::size_t w = 0; w < workers && next < parts.size(); ++w, ++next)
                pool.emplace_back([&, level = next] { parts[level] = enumerate(cascades, set, {level}); });
            for (auto& t : pool)
                t.join();
        }
        for (auto& part : parts) {
            best.visited += part.visited;
            offer(best, part.objective, part.levels);
        }
    }

    RVec thetas(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        thetas(static_cast<Eigen::Index>(i)) = set.value(best.levels[i]);

    ExhaustiveResult out;
    out.phase = PhaseVector::discrete(thetas, set);
    out.objective = secrecy_ratio(out.phase, cascades);
    out.candidates = best.visited;
    return out;
}

} // namespace irssec
