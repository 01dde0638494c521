#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ctam/core/errors.hpp"
#include "ctam/core/system.hpp"

namespace ctam {

// A finite, nonempty, edge-connected placement of tiles on the lattice.
//
// Assemblies are immutable values: attach() returns a new assembly and the
// old one stays valid, which is what the exact-enumeration oracle needs when
// it branches a trajectory. Data is shared between copies; an attach makes a
// fresh (small) copy of the placement map, so this type is meant for the
// oracle and for test-sized assemblies. The Monte Carlo simulator keeps its
// own mutable state and only materializes an assembly at the end.
class assembly {
public:
    using map_type = std::unordered_map<pos, tile_index, pos_hash>;

    // Empty placeholder; every assembly produced by from_seed/attach is
    // nonempty.
    assembly() : data_(std::make_shared<map_type>()) {}

    bool empty() const { return data_->empty(); }

    static assembly from_seed(const tile_system& sys) {
        auto data = std::make_shared<map_type>();
        for (const placement& p : sys.seed()) {
            auto [it, fresh] = data->emplace(p.position, p.tile);
            if (!fresh) throw invalid_spec("seed places two tiles at one position");
        }
        return assembly(std::move(data));
    }

    static assembly from_placements(const std::vector<placement>& ps) {
        auto data = std::make_shared<map_type>();
        for (const placement& p : ps) {
            auto [it, fresh] = data->emplace(p.position, p.tile);
            if (!fresh) throw invalid_spec("two tiles at one position");
        }
        return assembly(std::move(data));
    }

    std::size_t size() const { return data_->size(); }

    bool occupied(const pos& p) const { return data_->count(p) != 0; }

    tile_index tile_at(const pos& p) const {
        auto it = data_->find(p);
        return it == data_->end() ? no_tile : it->second;
    }

    const map_type& placements() const { return *data_; }

    // New assembly with one more tile. Validity (frontier membership) is the
    // caller's job; see core/frontier.hpp attach().
    assembly with(const attachment& a) const {
        auto data = std::make_shared<map_type>(*data_);
        data->emplace(a.position, a.tile);
        return assembly(std::move(data));
    }

    // Canonical form: placements sorted by (y, x). Used for serialization,
    // hashing and oracle state identity.
    std::vector<placement> canonical() const {
        std::vector<placement> out;
        out.reserve(data_->size());
        for (const auto& [p, t] : *data_) out.push_back({p, t});
        std::sort(out.begin(), out.end(), [](const placement& a, const placement& b) {
            return pos_yx_less{}(a.position, b.position);
        });
        return out;
    }

    friend bool operator==(const assembly& a, const assembly& b) {
        if (a.data_ == b.data_) return true;
        if (a.data_->size() != b.data_->size()) return false;
        for (const auto& [p, t] : *a.data_) {
            auto it = b.data_->find(p);
            if (it == b.data_->end() || it->second != t) return false;
        }
        return true;
    }

private:
    explicit assembly(std::shared_ptr<map_type> data) : data_(std::move(data)) {}

    std::shared_ptr<const map_type> data_;
};

struct assembly_hash {
    std::size_t operator()(const assembly& a) const {
        // order-independent: combine per-placement hashes by addition
        std::uint64_t h = 0x9E3779B97F4A7C15ULL * a.size();
        for (const auto& [p, t] : a.placements()) {
            std::uint64_t z = pos_hash{}(p) ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(t + 1));
            z ^= z >> 29;
            z *= 0xBF58476D1CE4E5B9ULL;
            h += z;
        }
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

} // namespace ctam
