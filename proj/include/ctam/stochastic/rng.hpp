#pragma once

#include <cstdint>

namespace ctam {

// Counter-based splittable pseudo-random source. A draw sequence is a pure
// function of (seed, stream, counter), so trials can run in parallel, one
// stream per trial, and reproduce bit-identically in any execution order and
// on any platform (64-bit integer ops only). Not cryptographic.
class random_source {
public:
    random_source(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64() {
        std::uint64_t z = counter_++;
        z *= 0x9E3779B97F4A7C15ULL;
        z += seed_;
        z = mix(z);
        z ^= stream_ * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL;
        return mix(z);
    }

    // uniform in [0, 1), 53 random bits
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound) without modulo bias worth caring about for
    // simulation purposes (bound is tiny against 2^64)
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(next_double() * static_cast<double>(bound)) % bound;
    }

    random_source split(std::uint64_t substream) const {
        return random_source(mix(seed_ ^ mix(substream)), stream_ ^ (substream * 0xA24BAED4963EE407ULL));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

} // namespace ctam
