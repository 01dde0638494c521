#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ctam/core/frontier.hpp"
#include "ctam/stochastic/concentration.hpp"
#include "ctam/stochastic/dynamics.hpp"

namespace ctam {

// Exact distribution over terminal assemblies, keyed by canonical assembly.
struct terminal_distribution {
    std::unordered_map<assembly, rational, assembly_hash> probabilities;

    rational total() const {
        rational s = 0;
        for (const auto& [a, p] : probabilities) s += p;
        return s;
    }

    // Probability mass of terminals satisfying a predicate.
    template <typename Pred>
    rational mass_where(Pred&& pred) const {
        rational s = 0;
        for (const auto& [a, p] : probabilities) {
            if (pred(a)) s += p;
        }
        return s;
    }
};

// Brute-force oracle: exhaustive weighted traversal of the assembly tree in
// exact rational arithmetic, merging identical assemblies level by level
// (all assemblies at one level have the same tile count, growth being
// monotone). This is the independent reference the Monte Carlo estimator is
// checked against; it shares no code path with the sampler.
//
// Throws oracle_cap_exceeded if any growth path is still live at size_cap
// tiles, intractable_state_space if more than state_bound distinct
// assemblies get explored.
inline terminal_distribution exact_terminal_distribution(const tile_system& sys,
                                                         const concentration_map& conc,
                                                         std::uint64_t size_cap,
                                                         std::uint64_t state_bound = 1000000) {
    std::vector<rational> w = conc.pair_with_exact(sys);
    using layer = std::unordered_map<assembly, rational, assembly_hash>;

    terminal_distribution out;
    layer current;
    current.emplace(assembly::from_seed(sys), rational(1));
    std::uint64_t states_seen = 1;

    while (!current.empty()) {
        layer next;
        for (const auto& [a, p] : current) {
            std::vector<attachment> f = frontier(sys, a);
            if (f.empty()) {
                out.probabilities[a] += p;
                continue;
            }
            if (a.size() >= size_cap)
                throw oracle_cap_exceeded(
                    "exact_terminal_distribution: live path at size cap");
            rational total = 0;
            for (const attachment& at : f) total += w[static_cast<std::size_t>(at.tile)];
            for (const attachment& at : f) {
                rational q = p * w[static_cast<std::size_t>(at.tile)] / total;
                assembly b = a.with(at);
                auto [it, fresh] = next.emplace(std::move(b), q);
                if (!fresh)
                    it->second += q;
                else if (++states_seen > state_bound)
                    throw intractable_state_space(
                        "exact_terminal_distribution: state bound exceeded");
            }
        }
        current = std::move(next);
    }
    return out;
}

} // namespace ctam
