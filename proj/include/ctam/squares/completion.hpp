#pragma once

// Shared deterministic machinery for square assembly: the zig-zag binary
// counter that fixes the square's width, the diagonal that reflects width
// into height, and the filler tiles. Both square generators (the hard-coded
// counter baseline and the concentration-programmed one) emit these same
// families; they differ only in how the counter's seed column gets its
// digits.
//
// Geometry contract shared by all users:
//   - a "seed column" stands at x = XC with cells in rows 0..XC-1 exposing,
//     on its east face, digit glues `xd{d}p{p}` at digit rows, `xsp` at
//     spacer rows, and at the top (row XC-1) a strength-2 spawn glue
//     `dn-start-p{p}` plus a strength-2 `diag-up` north glue;
//   - counter columns march east, alternating a top-down "copy+increment"
//     leg and a bottom-up "increment" leg, one increment per column; the
//     column whose value reaches 2^digits is inert and becomes the east
//     edge, at x = XC + 2^digits - v0, so the square side is
//         n = XC + 2^digits - v0 + 1;
//   - the diagonal grows from (XC, XC) and filler tiles close the region
//     between the bottom strip, the diagonal and the edges into an exact
//     n x n square.

#include <string>
#include <vector>

#include "ctam/core/system.hpp"

namespace ctam::squares {

inline glue s1(const std::string& l) { return {l, 1}; }
inline glue s2(const std::string& l) { return {l, 2}; }

namespace glues {

// counter east-face protocol
inline std::string xd(int d, int p) { return "xd" + std::to_string(d) + "p" + std::to_string(p); }
inline const char* xsp = "xsp";
inline std::string dn_start(int p) { return "dn-start-p" + std::to_string(p); }
inline std::string dd(int d) { return "d" + std::to_string(d); }
inline const char* dsp = "dsp";
inline const char* top_sp = "top-sp";
inline const char* up_start = "up-start";
inline const char* up_base_e = "up-base-e";
inline const char* rul_end = "rul-end";
// up-leg south->north chain carrying (carry, prefix)
inline std::string uc(int c, int p) { return "uc" + std::to_string(c) + "p" + std::to_string(p); }
// down-leg chains
inline const char* dn = "dn";
inline const char* dnz = "dnz";
// diagonal and fill
inline const char* diag_up = "diag-up";
inline const char* diag_w = "diag-w";
inline const char* diag_e = "diag-e";
inline const char* fe_run = "fe-run";
inline const char* fw_run = "fw-run";
inline const char* fill_s = "fill-s";

} // namespace glues

// Counter, diagonal and filler tile types. Position-agnostic: digit rows vs
// spacer rows are recognized through the west faces, so the same family
// serves any seed-column layout.
inline void emit_completion_tiles(std::vector<tile_type>& out) {
    using namespace glues;
    auto add = [&out](std::string id, glue n, glue e, glue s, glue w) {
        out.push_back({std::move(id), std::move(n), std::move(e), std::move(s), std::move(w)});
    };

    // --- down legs: spawned at the top by `dn-start-p0`, descend reading
    // the west column, write d XOR p, spawn the next up leg at the base.
    add("DT", s1(fill_s), s1(top_sp), s1(dn), s2(dn_start(0)));
    for (int d = 0; d <= 1; ++d) {
        for (int p = 0; p <= 1; ++p) {
            add("DD_d" + std::to_string(d) + "p" + std::to_string(p), s1(dn),
                s1(dd(d ^ p)), s1(dn), s1(xd(d, p)));
        }
    }
    add("DSp", s1(dn), s1(dsp), s1(dn), s1(xsp));
    add("DB_r", s1(dn), s2(up_start), {}, s1(rul_end));
    add("DB_u", s1(dn), s2(up_start), {}, s1(up_base_e));

    // --- terminal down leg (east edge, case "seed/up column was all-ones"):
    // spawned by `dn-start-p1`, descends inert.
    add("DTZ", s1(fill_s), {}, s1(dnz), s2(dn_start(1)));
    for (int d = 0; d <= 1; ++d) {
        for (int p = 0; p <= 1; ++p) {
            add("DZ_d" + std::to_string(d) + "p" + std::to_string(p), s1(dnz), {}, s1(dnz),
                s1(xd(d, p)));
        }
    }
    add("DZs", s1(dnz), {}, s1(dnz), s1(xsp));
    add("DZB_r", s1(dnz), {}, {}, s1(rul_end));
    add("DZB_u", s1(dnz), {}, {}, s1(up_base_e));

    // --- up legs: spawned at the base, climb computing value+1 with a
    // carry, and accumulate the all-ones prefix exposed to the next leg.
    add("UB", s1(uc(1, 1)), s1(up_base_e), {}, s2(up_start));
    for (int c = 0; c <= 1; ++c) {
        for (int p = 0; p <= 1; ++p) {
            add("US_c" + std::to_string(c) + "p" + std::to_string(p), s1(uc(c, p)), s1(xsp),
                s1(uc(c, p)), s1(dsp));
        }
    }
    for (int d = 0; d <= 1; ++d) {
        for (int c = 0; c <= 1; ++c) {
            for (int p = 0; p <= 1; ++p) {
                int dd_ = d ^ c, c_ = d & c, p_ = p & dd_;
                add("UD_d" + std::to_string(d) + "c" + std::to_string(c) + "p" +
                        std::to_string(p),
                    s1(uc(c_, p_)), s1(xd(dd_, p)), s1(uc(c, p)), s1(dd(d)));
            }
        }
    }
    for (int p = 0; p <= 1; ++p) {
        // no carry out: spawn the next down leg; carry out: overflow, this
        // column is the east edge
        add("UT_p" + std::to_string(p), s1(fill_s), s2(dn_start(p)), s1(uc(0, p)), s1(top_sp));
        add("UTO_p" + std::to_string(p), s1(fill_s), {}, s1(uc(1, p)), s1(top_sp));
    }

    // --- diagonal and fill
    add("D", s1(fill_s), s1(diag_e), s2(diag_up), s1(diag_w));
    add("DSh", s2(diag_up), s1(fe_run), s1(fill_s), s1(diag_e));
    add("FE", s1(fill_s), s1(fe_run), s1(fill_s), s1(fe_run));
    add("FWD", s1(fill_s), s1(diag_w), s1(fill_s), s1(fw_run));
    add("FW", s1(fill_s), s1(fw_run), s1(fill_s), s1(fw_run));
}

// Number of tile types emit_completion_tiles adds.
inline std::size_t completion_tile_count() {
    std::vector<tile_type> tmp;
    emit_completion_tiles(tmp);
    return tmp.size();
}

// Digits of v0 (LSB first, `digits` of them) plus the running all-ones
// prefix: prefix[b] = AND of digits below b (prefix[0] = 1).
struct seed_column_layout {
    std::vector<int> digit;  // digit[b], b in [0, digits)
    std::vector<int> prefix; // prefix[b] = all lower digits are 1
    int prefix_top;          // AND over all digits
};

inline seed_column_layout seed_column_digits(long long v0, int digits) {
    seed_column_layout lay;
    lay.digit.resize(digits);
    lay.prefix.resize(digits);
    int p = 1;
    for (int b = 0; b < digits; ++b) {
        lay.digit[b] = static_cast<int>((v0 >> b) & 1);
        lay.prefix[b] = p;
        p &= lay.digit[b];
    }
    lay.prefix_top = p;
    return lay;
}

} // namespace ctam::squares
