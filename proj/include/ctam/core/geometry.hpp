#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>

namespace ctam {

// Lattice position. Signed 64-bit so generators can place structures
// anywhere; generated squares use the first quadrant with the seed at the
// origin.
struct pos {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const pos&, const pos&) = default;
};

// Canonical order used for serialization and canonical assembly form:
// row-major from the south-west, i.e. by (y, x).
struct pos_yx_less {
    bool operator()(const pos& a, const pos& b) const {
        if (a.y != b.y) return a.y < b.y;
        return a.x < b.x;
    }
};

enum class side : int { north = 0, east = 1, south = 2, west = 3 };

constexpr std::array<side, 4> all_sides{side::north, side::east, side::south, side::west};

constexpr side opposite(side s) {
    switch (s) {
        case side::north: return side::south;
        case side::east: return side::west;
        case side::south: return side::north;
        case side::west: return side::east;
    }
    return side::north;
}

constexpr pos neighbor(const pos& p, side s) {
    switch (s) {
        case side::north: return {p.x, p.y + 1};
        case side::east: return {p.x + 1, p.y};
        case side::south: return {p.x, p.y - 1};
        case side::west: return {p.x - 1, p.y};
    }
    return p;
}

constexpr const char* side_name(side s) {
    switch (s) {
        case side::north: return "north";
        case side::east: return "east";
        case side::south: return "south";
        case side::west: return "west";
    }
    return "?";
}

struct pos_hash {
    std::size_t operator()(const pos& p) const noexcept {
        // splitmix-style mix of the two coordinates
        std::uint64_t z = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
        z ^= static_cast<std::uint64_t>(p.y) + 0xD1B54A32D192ED03ULL + (z << 6) + (z >> 2);
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        return static_cast<std::size_t>(z);
    }
};

} // namespace ctam
