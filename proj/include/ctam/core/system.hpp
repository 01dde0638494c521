#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctam/core/errors.hpp"
#include "ctam/core/tile.hpp"

namespace ctam {

// Interned glue: (label id, strength). label id 0 is reserved for the null
// label so a null glue is always {0, 0}.
struct glue_key {
    std::int32_t label = 0;
    int strength = 0;

    bool bonds() const { return strength > 0; }
    friend auto operator<=>(const glue_key&, const glue_key&) = default;
};

struct glue_key_hash {
    std::size_t operator()(const glue_key& g) const noexcept {
        return std::hash<std::int64_t>{}((static_cast<std::int64_t>(g.label) << 8) ^ g.strength);
    }
};

// A tile system: finite ordered set of tile types, a seed assembly
// (a single tile at the origin unless a generator says otherwise), and the
// temperature. Immutable after construction; construction builds lookup
// tables used by frontier computation and the simulator.
class tile_system {
public:
    tile_system(std::vector<tile_type> types, std::vector<placement> seed_placements,
                int temperature = 2)
        : types_(std::move(types)), seed_(std::move(seed_placements)), temperature_(temperature) {
        if (temperature_ <= 0) throw invalid_spec("temperature must be positive");
        label_ids_[""] = 0;
        labels_.push_back("");
        keys_.reserve(types_.size());
        for (std::size_t i = 0; i < types_.size(); ++i) {
            const tile_type& t = types_[i];
            if (t.id.empty()) throw invalid_spec("tile type with empty id");
            auto [it, inserted] = index_by_id_.emplace(t.id, static_cast<tile_index>(i));
            if (!inserted) throw invalid_spec("duplicate tile id: " + t.id);
            side_keys sk;
            for (side s : all_sides) {
                const glue& g = t.side_glue(s);
                if (g.strength < 0) throw invalid_spec("negative glue strength on tile " + t.id);
                sk.k[static_cast<int>(s)] = intern(g);
            }
            keys_.push_back(sk);
        }
        // bucket tile types by (side, glue) for fast candidate discovery
        for (std::size_t i = 0; i < types_.size(); ++i) {
            for (side s : all_sides) {
                glue_key k = keys_[i].k[static_cast<int>(s)];
                if (k.bonds()) buckets_[static_cast<int>(s)][k].push_back(static_cast<tile_index>(i));
            }
        }
        if (seed_.empty()) throw invalid_spec("seed assembly must be nonempty");
        for (const placement& p : seed_) {
            if (p.tile < 0 || static_cast<std::size_t>(p.tile) >= types_.size())
                throw invalid_spec("seed references unknown tile index");
        }
        std::sort(seed_.begin(), seed_.end(), [](const placement& a, const placement& b) {
            return pos_yx_less{}(a.position, b.position);
        });
    }

    const std::vector<tile_type>& tile_types() const { return types_; }
    const std::vector<placement>& seed() const { return seed_; }
    int temperature() const { return temperature_; }

    std::size_t size() const { return types_.size(); }

    const tile_type& type(tile_index i) const { return types_[static_cast<std::size_t>(i)]; }

    tile_index index_of(const std::string& id) const {
        auto it = index_by_id_.find(id);
        if (it == index_by_id_.end()) throw unknown_tile("unknown tile id: " + id);
        return it->second;
    }

    bool has_id(const std::string& id) const { return index_by_id_.count(id) != 0; }

    glue_key side_key(tile_index t, side s) const {
        return keys_[static_cast<std::size_t>(t)].k[static_cast<int>(s)];
    }

    // Tile types whose `s` side carries glue `k` (only bonding glues are
    // bucketed). Returns an empty list when none do.
    const std::vector<tile_index>& types_with(side s, glue_key k) const {
        static const std::vector<tile_index> empty;
        const auto& m = buckets_[static_cast<int>(s)];
        auto it = m.find(k);
        return it == m.end() ? empty : it->second;
    }

private:
    struct side_keys {
        glue_key k[4];
    };

    glue_key intern(const glue& g) {
        if (g.strength == 0) return {0, 0};
        auto it = label_ids_.find(g.label);
        std::int32_t id;
        if (it == label_ids_.end()) {
            id = static_cast<std::int32_t>(labels_.size());
            label_ids_.emplace(g.label, id);
            labels_.push_back(g.label);
        } else {
            id = it->second;
        }
        return {id, g.strength};
    }

    std::vector<tile_type> types_;
    std::vector<placement> seed_;
    int temperature_;
    std::vector<side_keys> keys_;
    std::unordered_map<std::string, tile_index> index_by_id_;
    std::unordered_map<std::string, std::int32_t> label_ids_;
    std::vector<std::string> labels_;
    std::unordered_map<glue_key, std::vector<tile_index>, glue_key_hash> buckets_[4];
};

} // namespace ctam
