#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ctam/core/assembly.hpp"
#include "ctam/core/frontier.hpp"
#include "ctam/stochastic/concentration.hpp"
#include "ctam/stochastic/rng.hpp"
#include "ctam/stochastic/sim.hpp"

namespace ctam {

// Probability of each frontier attachment: P[(p, t)] = c(t) / sum over the
// frontier of c(t'). Concentrations never change which attachments are
// possible, only how likely each is to happen next.
inline std::vector<std::pair<attachment, double>> attachment_distribution(
    const tile_system& sys, const concentration_map& conc, const assembly& a) {
    std::vector<double> w = conc.pair_with(sys);
    std::vector<attachment> f = frontier(sys, a);
    if (f.empty()) throw empty_frontier("attachment_distribution: assembly is terminal");
    double total = 0.0;
    for (const attachment& at : f) total += w[static_cast<std::size_t>(at.tile)];
    std::vector<std::pair<attachment, double>> out;
    out.reserve(f.size());
    for (const attachment& at : f)
        out.emplace_back(at, w[static_cast<std::size_t>(at.tile)] / total);
    return out;
}

// Exact-rational version used by the enumeration oracle.
inline std::vector<std::pair<attachment, rational>> attachment_distribution_exact(
    const tile_system& sys, const std::vector<rational>& w, const assembly& a) {
    std::vector<attachment> f = frontier(sys, a);
    if (f.empty()) throw empty_frontier("attachment_distribution: assembly is terminal");
    rational total = 0;
    for (const attachment& at : f) total += w[static_cast<std::size_t>(at.tile)];
    std::vector<std::pair<attachment, rational>> out;
    out.reserve(f.size());
    for (const attachment& at : f)
        out.emplace_back(at, w[static_cast<std::size_t>(at.tile)] / total);
    return out;
}

enum class trial_outcome { terminal, cap_exceeded };

// Result of one stochastic trajectory.
struct trial_report {
    trial_outcome outcome = trial_outcome::terminal;
    std::uint64_t steps = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    assembly result;

    bool is_terminal() const { return outcome == trial_outcome::terminal; }
};

// Run one trajectory: repeatedly draw from the attachment distribution and
// attach, until the frontier empties or step_cap attachments have been made.
// Reproducible from (seed, stream).
inline trial_report sample_trajectory(const tile_system& sys, const concentration_map& conc,
                                      random_source rng, std::uint64_t step_cap) {
    sim_state st(sys, conc.pair_with(sys));
    std::uint64_t steps = 0;
    while (!st.frontier_empty() && steps < step_cap) {
        st.step(rng);
        ++steps;
    }
    trial_report r;
    r.outcome = st.frontier_empty() ? trial_outcome::terminal : trial_outcome::cap_exceeded;
    r.steps = steps;
    r.seed = rng.seed();
    r.stream = rng.stream();
    r.result = st.to_assembly();
    return r;
}

} // namespace ctam
