#pragma once

#include <cstdint>
#include <optional>

#include "ctam/core/assembly.hpp"
#include "ctam/stochastic/rng.hpp"
#include "ctam/stochastic/sim.hpp"

namespace ctam {

struct confluence_report {
    bool confluent = false;
    std::uint64_t trials = 0;
    assembly terminal;           // terminal of the first trajectory
    std::optional<assembly> divergent; // a differing terminal, when found
};

// Sampling-based directedness check: run `trials` trajectories under
// independent uniformly random frontier choices and compare terminals. Says
// "confluent" when all runs agree; that is evidence, not proof. Throws
// cap_exceeded if any trajectory runs past step_cap.
inline confluence_report check_confluence(const tile_system& sys, std::uint64_t trials,
                                          random_source rng, std::uint64_t step_cap) {
    confluence_report rep;
    rep.confluent = true;
    std::vector<double> ones(sys.size(), 1.0);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        random_source trial_rng = rng.split(trial);
        sim_state st(sys, ones);
        std::uint64_t steps = 0;
        while (!st.frontier_empty()) {
            if (steps >= step_cap)
                throw cap_exceeded("check_confluence: trajectory exceeded step cap");
            st.step_uniform(trial_rng);
            ++steps;
        }
        assembly term = st.to_assembly();
        if (trial == 0) {
            rep.terminal = term;
        } else if (!(term == rep.terminal)) {
            rep.confluent = false;
            if (!rep.divergent) rep.divergent = term;
        }
        ++rep.trials;
    }
    return rep;
}

} // namespace ctam
