#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "ctam/core/errors.hpp"
#include "ctam/core/system.hpp"

namespace ctam {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

// Parse a nonnegative decimal string ("3", "0.25", "1e-3") or a fraction
// string ("1/3") into an exact rational.
inline rational parse_weight(const std::string& s) {
    if (s.empty()) throw parse_error("empty weight string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        rational num = parse_weight(s.substr(0, slash));
        rational den = parse_weight(s.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator in weight: " + s);
        return num / den;
    }
    std::string digits;
    long long exp10 = 0;
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = (s[i] == '-'), ++i;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_dot) --exp10;
            seen_digit = true;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            exp10 += std::stoll(s.substr(i + 1));
            break;
        } else {
            throw parse_error("bad weight string: " + s);
        }
    }
    if (!seen_digit) throw parse_error("bad weight string: " + s);
    bigint acc = 0;
    for (char c : digits) acc = acc * 10 + (c - '0');
    rational r{acc};
    for (long long k = 0; k < exp10; ++k) r *= 10;
    for (long long k = 0; k > exp10; --k) r /= 10;
    if (neg) r = -r;
    return r;
}

// Render a rational as an exact decimal string when the denominator divides
// a power of ten, otherwise as "num/den". parse_weight accepts both.
inline std::string format_weight(const rational& r) {
    bigint num = boost::multiprecision::numerator(r);
    bigint den = boost::multiprecision::denominator(r);
    bigint d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) d /= 2, ++twos;
    while (d % 5 == 0) d /= 5, ++fives;
    if (d == 1 && twos <= 64 && fives <= 64) {
        int shift = std::max(twos, fives);
        bigint scaled = num;
        for (int i = 0; i < shift - twos; ++i) scaled *= 2;
        for (int i = 0; i < shift - fives; ++i) scaled *= 5;
        std::string s = scaled.str();
        bool negative = false;
        if (!s.empty() && s[0] == '-') negative = true, s = s.substr(1);
        if (shift == 0) return (negative ? "-" : "") + s;
        while (s.size() <= static_cast<std::size_t>(shift)) s.insert(s.begin(), '0');
        s.insert(s.size() - static_cast<std::size_t>(shift), ".");
        return (negative ? "-" : "") + s;
    }
    return num.str() + "/" + den.str();
}

// Probability weights over tile types, keyed by tile id. The "input" to a
// concentration-programmed system. Weights are exact rationals; the
// simulator projects them to doubles, the oracle keeps them exact.
class concentration_map {
public:
    concentration_map() = default;

    explicit concentration_map(std::map<std::string, rational> w) : weights_(std::move(w)) {
        for (const auto& [id, v] : weights_) {
            if (v <= 0) throw nonpositive_weight("nonpositive weight for tile " + id);
        }
    }

    const std::map<std::string, rational>& weights() const { return weights_; }

    const rational& at(const std::string& id) const {
        auto it = weights_.find(id);
        if (it == weights_.end()) throw concentration_mismatch("no weight for tile " + id);
        return it->second;
    }

    void set(const std::string& id, rational v) {
        if (v <= 0) throw nonpositive_weight("nonpositive weight for tile " + id);
        weights_[id] = std::move(v);
    }

    std::size_t size() const { return weights_.size(); }

    rational total() const {
        rational s = 0;
        for (const auto& [id, v] : weights_) s += v;
        return s;
    }

    bool is_normalized() const { return total() == 1; }

    // Scale so weights sum to exactly 1. Ratios are preserved exactly;
    // idempotent.
    concentration_map normalized() const {
        rational s = total();
        if (s == 0) throw nonpositive_weight("cannot normalize empty map");
        if (s == 1) return *this;
        std::map<std::string, rational> out;
        for (const auto& [id, v] : weights_) out.emplace(id, v / s);
        return concentration_map(std::move(out));
    }

    // Check the map's domain equals the system's tile-type set and project
    // to per-tile-index doubles for the simulator.
    std::vector<double> pair_with(const tile_system& sys) const {
        if (weights_.size() != sys.size())
            throw concentration_mismatch("concentration map domain does not match tile set");
        std::vector<double> w(sys.size());
        for (std::size_t i = 0; i < sys.size(); ++i) {
            const std::string& id = sys.type(static_cast<tile_index>(i)).id;
            auto it = weights_.find(id);
            if (it == weights_.end())
                throw concentration_mismatch("no concentration for tile " + id);
            w[i] = it->second.convert_to<double>();
        }
        return w;
    }

    // Exact per-index weights for the oracle.
    std::vector<rational> pair_with_exact(const tile_system& sys) const {
        if (weights_.size() != sys.size())
            throw concentration_mismatch("concentration map domain does not match tile set");
        std::vector<rational> w(sys.size());
        for (std::size_t i = 0; i < sys.size(); ++i) {
            const std::string& id = sys.type(static_cast<tile_index>(i)).id;
            auto it = weights_.find(id);
            if (it == weights_.end())
                throw concentration_mismatch("no concentration for tile " + id);
            w[i] = it->second;
        }
        return w;
    }

    friend bool operator==(const concentration_map&, const concentration_map&) = default;

private:
    std::map<std::string, rational> weights_;
};

inline concentration_map normalize(const concentration_map& c) { return c.normalized(); }

// Uniform map over a system's tile types.
inline concentration_map uniform_concentrations(const tile_system& sys) {
    std::map<std::string, rational> w;
    for (const auto& t : sys.tile_types()) w.emplace(t.id, 1);
    return concentration_map(std::move(w));
}

} // namespace ctam
