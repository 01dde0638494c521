#pragma once

#include <compare>
#include <string>

#include "ctam/core/geometry.hpp"

namespace ctam {

// A glue: label plus nonnegative integer strength. Two abutting glues
// interact only when both label and strength are equal. The null glue has
// an empty label and strength 0 and never bonds.
struct glue {
    std::string label;
    int strength = 0;

    bool is_null() const { return strength == 0 && label.empty(); }

    friend auto operator<=>(const glue&, const glue&) = default;
};

inline glue null_glue() { return {}; }

// An un-rotatable, translatable unit square tile type. Sides are fixed;
// there is no rotation or reflection anywhere in the model.
struct tile_type {
    std::string id;
    glue north;
    glue east;
    glue south;
    glue west;

    const glue& side_glue(side s) const {
        switch (s) {
            case side::north: return north;
            case side::east: return east;
            case side::south: return south;
            case side::west: return west;
        }
        return north;
    }

    glue& side_glue(side s) {
        switch (s) {
            case side::north: return north;
            case side::east: return east;
            case side::south: return south;
            case side::west: return west;
        }
        return north;
    }

    friend bool operator==(const tile_type&, const tile_type&) = default;
};

// Index of a tile type within its system's ordered tile_types vector.
using tile_index = std::int32_t;
constexpr tile_index no_tile = -1;

struct placement {
    pos position;
    tile_index tile = no_tile;

    friend auto operator<=>(const placement&, const placement&) = default;
};

// A proposed attachment: an empty position plus the tile type to put there.
struct attachment {
    pos position;
    tile_index tile = no_tile;

    friend auto operator<=>(const attachment&, const attachment&) = default;
};

} // namespace ctam
