#pragma once

#include <algorithm>
#include <vector>

#include "ctam/core/assembly.hpp"
#include "ctam/core/system.hpp"

namespace ctam {

// Total bond strength tile `t` would form at empty position `p`: the sum,
// over occupied neighbors, of the abutting glue strength where and only
// where both label and strength match. Mismatched or one-sided glues
// contribute nothing.
inline int binding_strength(const tile_system& sys, const assembly& a, const pos& p,
                            tile_index t) {
    if (t < 0 || static_cast<std::size_t>(t) >= sys.size())
        throw unknown_tile("binding_strength: tile index out of range");
    if (a.occupied(p)) throw occupied_position("binding_strength: position occupied");
    int total = 0;
    for (side s : all_sides) {
        tile_index nb = a.tile_at(neighbor(p, s));
        if (nb == no_tile) continue;
        glue_key mine = sys.side_key(t, s);
        if (!mine.bonds()) continue;
        glue_key theirs = sys.side_key(nb, opposite(s));
        if (mine == theirs) total += mine.strength;
    }
    return total;
}

namespace detail {

// Candidate tile types at empty position p, discovered through the glue
// buckets of the occupied neighbors. Sound and complete: any tile binding
// with strength >= 1 shares at least one glue with a neighbor, so it shows
// up in some bucket.
inline void candidates_at(const tile_system& sys, const assembly& a, const pos& p,
                          std::vector<tile_index>& out) {
    out.clear();
    for (side s : all_sides) {
        tile_index nb = a.tile_at(neighbor(p, s));
        if (nb == no_tile) continue;
        glue_key facing = sys.side_key(nb, opposite(s));
        if (!facing.bonds()) continue;
        const auto& bucket = sys.types_with(s, facing);
        out.insert(out.end(), bucket.begin(), bucket.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
}

} // namespace detail

// The set of attachments currently possible: all (empty position, tile type)
// pairs with binding strength >= temperature. Sorted canonically
// ((y, x), then tile index). Empty iff the assembly is terminal.
inline std::vector<attachment> frontier(const tile_system& sys, const assembly& a) {
    std::vector<attachment> out;
    std::vector<tile_index> cand;
    // collect empty neighbors of occupied cells, dedup via sort below
    std::vector<pos> sites;
    for (const auto& [p, t] : a.placements()) {
        (void)t;
        for (side s : all_sides) {
            pos q = neighbor(p, s);
            if (!a.occupied(q)) sites.push_back(q);
        }
    }
    std::sort(sites.begin(), sites.end(), pos_yx_less{});
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    for (const pos& q : sites) {
        detail::candidates_at(sys, a, q, cand);
        for (tile_index t : cand) {
            if (binding_strength(sys, a, q, t) >= sys.temperature()) out.push_back({q, t});
        }
    }
    return out;
}

inline bool is_terminal(const tile_system& sys, const assembly& a) {
    std::vector<tile_index> cand;
    for (const auto& [p, t] : a.placements()) {
        (void)t;
        for (side s : all_sides) {
            pos q = neighbor(p, s);
            if (a.occupied(q)) continue;
            detail::candidates_at(sys, a, q, cand);
            for (tile_index c : cand) {
                if (binding_strength(sys, a, q, c) >= sys.temperature()) return false;
            }
        }
    }
    return true;
}

// Monotone growth step. The input assembly is unchanged; the result has
// exactly one more placement. Throws not_attachable unless the attachment is
// in the frontier (position empty and strength >= temperature).
inline assembly attach(const assembly& a, const attachment& at, const tile_system& sys) {
    if (a.occupied(at.position)) throw not_attachable("attach: position already occupied");
    if (binding_strength(sys, a, at.position, at.tile) < sys.temperature())
        throw not_attachable("attach: binding strength below temperature");
    return a.with(at);
}

} // namespace ctam
