#pragma once

// Deterministic counter-square baseline: O(log n) tile types whose unique
// terminal assembly is an exact n x n square. A hard-coded ruler row and a
// hard-coded digit column seed the shared zig-zag counter; the diagonal and
// fillers close the square. Also the completion stage the
// concentration-programmed generator builds on.

#include <cstdint>
#include <string>
#include <vector>

#include "ctam/core/errors.hpp"
#include "ctam/core/system.hpp"
#include "ctam/squares/completion.hpp"

namespace ctam::squares {

struct counter_square_spec {
    std::int64_t n = 2;
};

struct counter_square_layout {
    std::int64_t n = 0;
    bool hard_grid = false; // n <= 4: fully hard-coded grid
    int digits = 0;         // counter digits (0 when hard_grid)
    std::int64_t column_x = 0;
    std::int64_t v0 = 0;
};

inline counter_square_layout counter_square_plan(std::int64_t n) {
    if (n < 2) throw invalid_spec("counter square requires n >= 2");
    counter_square_layout lay;
    lay.n = n;
    if (n <= 4) {
        lay.hard_grid = true;
        return lay;
    }
    for (int l = 1; l <= 62; ++l) {
        std::int64_t lo = l + 4;
        std::int64_t hi = l + 3 + (std::int64_t(1) << l);
        if (n >= lo && n <= hi) {
            lay.digits = l;
            lay.column_x = l + 2;
            lay.v0 = lay.column_x + (std::int64_t(1) << l) + 1 - n;
            return lay;
        }
    }
    throw invalid_spec("counter square: n out of supported range");
}

inline tile_system build_counter_square_system(const counter_square_spec& spec) {
    counter_square_layout lay = counter_square_plan(spec.n);
    std::vector<tile_type> types;
    auto add = [&types](std::string id, glue n_, glue e, glue s, glue w) {
        types.push_back({std::move(id), std::move(n_), std::move(e), std::move(s), std::move(w)});
    };

    if (lay.hard_grid) {
        // fully hard-coded grid: west column chains north, rows chain east
        std::int64_t n = lay.n;
        auto v = [](std::int64_t y) { return "gv" + std::to_string(y); };
        auto h = [](std::int64_t x, std::int64_t y) {
            return "gh" + std::to_string(x) + "_" + std::to_string(y);
        };
        for (std::int64_t y = 0; y < n; ++y) {
            for (std::int64_t x = 0; x < n; ++x) {
                glue north = (x == 0 && y + 1 < n) ? s2(v(y + 1)) : glue{};
                glue east = (x + 1 < n) ? s2(h(x + 1, y)) : glue{};
                glue south = (x == 0 && y > 0) ? s2(v(y)) : glue{};
                glue west = (x > 0) ? s2(h(x, y)) : glue{};
                add("HG" + std::to_string(x) + "_" + std::to_string(y), north, east, south,
                    west);
            }
        }
        return tile_system(std::move(types), {{{0, 0}, 0}});
    }

    using namespace glues;
    const std::int64_t c = lay.column_x;
    const int l = lay.digits;
    auto hr = [](std::int64_t j) { return "hr" + std::to_string(j); };
    auto hq = [](int b, int p) { return "hq" + std::to_string(b) + "p" + std::to_string(p); };

    // ruler row y = 0
    for (std::int64_t j = 0; j <= c; ++j) {
        glue west = (j > 0) ? s2(hr(j)) : glue{};
        if (j < c) {
            add("HR" + std::to_string(j), s1(fill_s), s2(hr(j + 1)), {}, west);
        } else {
            add("HR" + std::to_string(j), s2(hq(1, 1)), s1(rul_end), {}, west);
        }
    }

    // hard digit column at x = c, digits of v0 LSB-first at rows 1..l
    seed_column_layout col = seed_column_digits(lay.v0, l);
    for (int b = 1; b <= l; ++b) {
        int d = col.digit[b - 1], pin = col.prefix[b - 1];
        int pout = (b < l) ? col.prefix[b] : col.prefix_top;
        add("HD" + std::to_string(b), s2(hq(b + 1, pout)), s1(xd(d, pin)), s2(hq(b, pin)),
            s1(diag_w));
    }
    add("HT", s2(diag_up), s2(dn_start(col.prefix_top)), s2(hq(l + 1, col.prefix_top)),
        s1(diag_w));

    emit_completion_tiles(types);
    return tile_system(std::move(types), {{{0, 0}, 0}});
}

} // namespace ctam::squares
