#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ctam/core/assembly.hpp"
#include "ctam/core/frontier.hpp"
#include "ctam/core/system.hpp"
#include "ctam/stochastic/rng.hpp"

namespace ctam {

namespace detail {

// Fenwick tree over doubles for O(log n) weighted sampling with dynamic
// append and weight zeroing.
class fenwick {
public:
    std::size_t size() const { return n_; }

    void push_back(double w) {
        values_.push_back(w);
        tree_.push_back(w);
        ++n_;
        std::size_t i = n_; // 1-based index of the new element
        std::size_t lsb = i & (~i + 1);
        for (std::size_t j = 1; j < lsb; j <<= 1) tree_[i - 1] += tree_[i - 1 - j];
    }

    void zero(std::size_t i) {
        add(i, -values_[i]);
        values_[i] = 0.0;
    }

    double value(std::size_t i) const { return values_[i]; }

    double total() const {
        double s = 0.0;
        for (std::size_t i = n_; i > 0; i -= i & (~i + 1)) s += tree_[i - 1];
        return s;
    }

    // 0-based index of the element whose inclusive prefix sum first exceeds
    // r. Caller guarantees 0 <= r < total().
    std::size_t find(double r) const {
        std::size_t idx = 0;
        std::size_t mask = 1;
        while ((mask << 1) <= n_) mask <<= 1;
        for (; mask > 0; mask >>= 1) {
            std::size_t next = idx + mask;
            if (next <= n_ && tree_[next - 1] <= r) {
                r -= tree_[next - 1];
                idx = next;
            }
        }
        return idx;
    }

private:
    void add(std::size_t i, double delta) {
        for (std::size_t j = i + 1; j <= n_; j += j & (~j + 1)) tree_[j - 1] += delta;
    }

    std::size_t n_ = 0;
    std::vector<double> values_;
    std::vector<double> tree_;
};

} // namespace detail

// Mutable growth state used by the trajectory sampler and the confluence
// checker. Maintains the frontier incrementally: bond strength at a site
// only grows as neighbors fill, so candidate entries only accumulate and are
// retired when their site gets filled. Entry insertion order is
// deterministic, which makes draws reproducible from the random source
// alone.
class sim_state {
public:
    sim_state(const tile_system& sys, std::vector<double> weights)
        : sys_(&sys), weights_(std::move(weights)) {
        for (const placement& p : sys.seed()) placed_.emplace(p.position, p.tile);
        for (const placement& p : sys.seed()) discover_around(p.position);
    }

    const tile_system& system() const { return *sys_; }
    std::size_t tiles_placed() const { return placed_.size(); }

    bool frontier_empty() const { return live_.empty(); }
    std::size_t frontier_size() const { return live_.size(); }

    // Live frontier entries (position, tile) in canonical order.
    std::vector<attachment> frontier_entries() const {
        std::vector<attachment> out;
        out.reserve(live_.size());
        for (std::size_t i : live_) out.push_back({entries_[i].p, entries_[i].t});
        std::sort(out.begin(), out.end(), [](const attachment& a, const attachment& b) {
            if (a.position != b.position) return pos_yx_less{}(a.position, b.position);
            return a.tile < b.tile;
        });
        return out;
    }

    // Number of live candidate tiles at a frontier position.
    std::size_t candidates_at(const pos& q) const {
        auto it = by_pos_.find(q);
        if (it == by_pos_.end()) return 0;
        std::size_t c = 0;
        for (std::size_t i : it->second)
            if (entries_[i].alive) ++c;
        return c;
    }

    // Draw the next attachment with probability proportional to its tile's
    // weight and perform it.
    attachment step(random_source& rng) {
        double total = tree_.total();
        std::size_t idx;
        do {
            double r = rng.next_double() * total;
            if (r >= total) r = 0.0;
            idx = tree_.find(r);
        } while (idx >= entries_.size() || !entries_[idx].alive);
        attachment a{entries_[idx].p, entries_[idx].t};
        apply(a);
        return a;
    }

    // Uniform draw over live frontier entries (confluence checking).
    attachment step_uniform(random_source& rng) {
        std::size_t idx = live_[static_cast<std::size_t>(rng.next_below(live_.size()))];
        attachment a{entries_[idx].p, entries_[idx].t};
        apply(a);
        return a;
    }

    void apply(const attachment& a) {
        placed_.emplace(a.position, a.tile);
        auto it = by_pos_.find(a.position);
        if (it != by_pos_.end()) {
            for (std::size_t i : it->second) kill(i);
            by_pos_.erase(it);
        }
        discover_around(a.position);
    }

    tile_index tile_at(const pos& p) const {
        auto it = placed_.find(p);
        return it == placed_.end() ? no_tile : it->second;
    }

    const std::unordered_map<pos, tile_index, pos_hash>& placements() const { return placed_; }

    assembly to_assembly() const {
        std::vector<placement> ps;
        ps.reserve(placed_.size());
        for (const auto& [p, t] : placed_) ps.push_back({p, t});
        return assembly::from_placements(ps);
    }

private:
    struct entry {
        pos p;
        tile_index t;
        bool alive;
        std::size_t live_slot;
    };

    void kill(std::size_t i) {
        if (!entries_[i].alive) return;
        entries_[i].alive = false;
        tree_.zero(i);
        std::size_t slot = entries_[i].live_slot;
        std::size_t moved = live_.back();
        live_[slot] = moved;
        entries_[moved].live_slot = slot;
        live_.pop_back();
    }

    int strength_at(const pos& p, tile_index t) const {
        int total = 0;
        for (side s : all_sides) {
            auto it = placed_.find(neighbor(p, s));
            if (it == placed_.end()) continue;
            glue_key mine = sys_->side_key(t, s);
            if (!mine.bonds()) continue;
            if (mine == sys_->side_key(it->second, opposite(s))) total += mine.strength;
        }
        return total;
    }

    void discover_around(const pos& p) {
        for (side s : all_sides) {
            pos q = neighbor(p, s);
            if (placed_.count(q)) continue;
            refresh_site(q);
        }
    }

    void refresh_site(const pos& q) {
        scratch_.clear();
        for (side s : all_sides) {
            auto it = placed_.find(neighbor(q, s));
            if (it == placed_.end()) continue;
            glue_key facing = sys_->side_key(it->second, opposite(s));
            if (!facing.bonds()) continue;
            const auto& bucket = sys_->types_with(s, facing);
            scratch_.insert(scratch_.end(), bucket.begin(), bucket.end());
        }
        std::sort(scratch_.begin(), scratch_.end());
        scratch_.erase(std::unique(scratch_.begin(), scratch_.end()), scratch_.end());
        auto& present = by_pos_[q];
        for (tile_index t : scratch_) {
            if (strength_at(q, t) < sys_->temperature()) continue;
            bool already = false;
            for (std::size_t i : present) {
                if (entries_[i].t == t) {
                    already = true;
                    break;
                }
            }
            if (already) continue;
            entries_.push_back({q, t, true, live_.size()});
            tree_.push_back(weights_[static_cast<std::size_t>(t)]);
            live_.push_back(entries_.size() - 1);
            present.push_back(entries_.size() - 1);
        }
        if (present.empty()) by_pos_.erase(q);
    }

    const tile_system* sys_;
    std::vector<double> weights_;
    std::unordered_map<pos, tile_index, pos_hash> placed_;
    std::unordered_map<pos, std::vector<std::size_t>, pos_hash> by_pos_;
    std::vector<entry> entries_;
    detail::fenwick tree_;
    std::vector<std::size_t> live_;
    std::vector<tile_index> scratch_;
};

} // namespace ctam
