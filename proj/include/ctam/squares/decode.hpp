#pragma once

#include <cstdint>
#include <string>

#include "ctam/core/assembly.hpp"
#include "ctam/core/system.hpp"

namespace ctam::squares {

// true iff the occupied positions are exactly {0..n-1} x {0..n-1}.
inline bool is_exact_square(const assembly& a, std::int64_t n) {
    if (n < 1) return false;
    if (a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) return false;
    for (const auto& [p, t] : a.placements()) {
        (void)t;
        if (p.x < 0 || p.x >= n || p.y < 0 || p.y >= n) return false;
    }
    return true;
}

} // namespace ctam::squares
