#pragma once

#include <stdexcept>
#include <string>

namespace ctam {

// Error taxonomy used across the library. Each condition a caller can
// meaningfully react to gets its own type; everything derives from
// ctam::error so a CLI can catch one thing.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct occupied_position : error { using error::error; };
struct unknown_tile : error { using error::error; };
struct not_attachable : error { using error::error; };
struct cap_exceeded : error { using error::error; };
struct empty_frontier : error { using error::error; };
struct concentration_mismatch : error { using error::error; };
struct zero_trials : error { using error::error; };
struct oracle_cap_exceeded : error { using error::error; };
struct intractable_state_space : error { using error::error; };
struct nonpositive_weight : error { using error::error; };
struct invalid_spec : error { using error::error; };
struct structure_incomplete : error { using error::error; };
struct parse_error : error { using error::error; };

// n below the generator's validity threshold; carries the threshold so
// callers can report it.
struct n_too_small : error {
    long long n_min;
    n_too_small(const std::string& msg, long long n_min_) : error(msg), n_min(n_min_) {}
};

} // namespace ctam
