#include <catch2/catch_amalgamated.hpp>

#include "ctam/core/confluence.hpp"
#include "ctam/core/frontier.hpp"
#include "ctam/stochastic/rng.hpp"
#include "toy_systems.hpp"

#include <algorithm>
#include <set>

using namespace ctam;

namespace {

// Independent brute-force frontier: scan every empty neighbor of every
// placed tile against every tile type using binding_strength directly.
std::vector<attachment> brute_frontier(const tile_system& sys, const assembly& a) {
    std::set<pos, pos_yx_less> sites;
    for (const auto& [p, t] : a.placements()) {
        (void)t;
        for (side s : all_sides) {
            pos q = neighbor(p, s);
            if (!a.occupied(q)) sites.insert(q);
        }
    }
    std::vector<attachment> out;
    for (const pos& q : sites) {
        for (std::size_t t = 0; t < sys.size(); ++t) {
            if (binding_strength(sys, a, q, static_cast<tile_index>(t)) >= sys.temperature())
                out.push_back({q, static_cast<tile_index>(t)});
        }
    }
    return out;
}

// Random tile system: a handful of types over a small glue pool.
tile_system random_system(random_source& rng) {
    int ntypes = 2 + static_cast<int>(rng.next_below(7));
    int nlabels = 1 + static_cast<int>(rng.next_below(5));
    auto rand_glue = [&]() -> glue {
        int strength = static_cast<int>(rng.next_below(3)); // 0, 1, 2
        if (strength == 0) return {};
        return {std::string(1, static_cast<char>('a' + rng.next_below(nlabels))), strength};
    };
    std::vector<tile_type> types;
    for (int i = 0; i < ntypes; ++i) {
        types.push_back({"t" + std::to_string(i), rand_glue(), rand_glue(), rand_glue(),
                         rand_glue()});
    }
    return tile_system(types, {{{0, 0}, 0}});
}

// Grow a random assembly by uniformly random frontier choices.
assembly random_assembly(const tile_system& sys, random_source& rng, std::size_t max_tiles) {
    assembly a = assembly::from_seed(sys);
    while (a.size() < max_tiles) {
        std::vector<attachment> f = frontier(sys, a);
        if (f.empty()) break;
        a = attach(a, f[rng.next_below(f.size())], sys);
    }
    return a;
}

bool connected(const assembly& a) {
    if (a.size() == 0) return false;
    std::set<pos, pos_yx_less> seen;
    std::vector<pos> stack{a.placements().begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
        pos p = stack.back();
        stack.pop_back();
        for (side s : all_sides) {
            pos q = neighbor(p, s);
            if (a.occupied(q) && seen.insert(q).second) stack.push_back(q);
        }
    }
    return seen.size() == a.size();
}

} // namespace

TEST_CASE("binding_strength matches glues on label and strength") {
    // strength-2 match across one side
    {
        tile_type seed{"seed", {}, toys::g2("a"), {}, {}};
        tile_type t{"t", {}, {}, {}, toys::g2("a")};
        tile_system sys({seed, t}, {{{0, 0}, 0}});
        assembly a = assembly::from_seed(sys);
        CHECK(binding_strength(sys, a, {1, 0}, 1) == 2);
    }
    // mismatched labels interact not at all
    {
        tile_type seed{"seed", {}, toys::g2("b"), {}, {}};
        tile_type t{"t", {}, {}, {}, toys::g2("a")};
        tile_system sys({seed, t}, {{{0, 0}, 0}});
        assembly a = assembly::from_seed(sys);
        CHECK(binding_strength(sys, a, {1, 0}, 1) == 0);
    }
    // mismatched strengths interact not at all
    {
        tile_type seed{"seed", {}, {"a", 1}, {}, {}};
        tile_type t{"t", {}, {}, {}, toys::g2("a")};
        tile_system sys({seed, t}, {{{0, 0}, 0}});
        assembly a = assembly::from_seed(sys);
        CHECK(binding_strength(sys, a, {1, 0}, 1) == 0);
    }
    // two cooperative strength-1 bonds sum to 2
    {
        tile_system sys = toys::cooperative_corner();
        assembly a = assembly::from_seed(sys);
        a = attach(a, {{1, 0}, sys.index_of("arm_e")}, sys);
        a = attach(a, {{0, 1}, sys.index_of("arm_n")}, sys);
        CHECK(binding_strength(sys, a, {1, 1}, sys.index_of("corner0")) == 2);
    }
}

TEST_CASE("binding_strength error conditions") {
    tile_system sys = toys::one_step_east();
    assembly a = assembly::from_seed(sys);
    CHECK_THROWS_AS(binding_strength(sys, a, {0, 0}, 1), occupied_position);
    CHECK_THROWS_AS(binding_strength(sys, a, {1, 0}, 99), unknown_tile);
}

TEST_CASE("frontier basic shapes") {
    // all-null seed: empty frontier
    {
        tile_system sys = toys::inert_seed();
        assembly a = assembly::from_seed(sys);
        CHECK(frontier(sys, a).empty());
        CHECK(is_terminal(sys, a));
    }
    // one matching tile east of the seed
    {
        tile_system sys = toys::one_step_east();
        assembly a = assembly::from_seed(sys);
        auto f = frontier(sys, a);
        REQUIRE(f.size() == 1);
        CHECK(f[0].position == pos{1, 0});
        CHECK(f[0].tile == 1);
        CHECK_FALSE(is_terminal(sys, a));
    }
    // cooperative corner: every matching type appears at the corner site
    {
        tile_system sys = toys::cooperative_corner(3);
        assembly a = assembly::from_seed(sys);
        a = attach(a, {{1, 0}, sys.index_of("arm_e")}, sys);
        a = attach(a, {{0, 1}, sys.index_of("arm_n")}, sys);
        auto f = frontier(sys, a);
        auto bf = brute_frontier(sys, a);
        CHECK(f == bf);
        std::size_t corner_entries = 0;
        for (const auto& at : f)
            if (at.position == pos{1, 1}) ++corner_entries;
        CHECK(corner_entries == 3);
    }
}

TEST_CASE("attach grows monotonically and validates") {
    tile_system sys = toys::one_step_east();
    assembly a = assembly::from_seed(sys);
    auto f = frontier(sys, a);
    REQUIRE(f.size() == 1);
    assembly b = attach(a, f[0], sys);
    CHECK(b.size() == a.size() + 1);
    CHECK(a.size() == 1); // input unchanged
    CHECK(is_terminal(sys, b));
    CHECK_THROWS_AS(attach(b, {{1, 0}, 1}, sys), not_attachable); // occupied
    CHECK_THROWS_AS(attach(b, {{2, 0}, 1}, sys), not_attachable); // strength 0
    // strength 1 at tau=2 is not attachable
    tile_system coop = toys::cooperative_corner();
    assembly c = assembly::from_seed(coop);
    c = attach(c, {{1, 0}, coop.index_of("arm_e")}, coop);
    CHECK_THROWS_AS(attach(c, {{1, 1}, coop.index_of("corner0")}, coop), not_attachable);
}

TEST_CASE("check_confluence") {
    random_source rng(7, 0);
    // single-path linear growth: confluent
    {
        tile_system sys = toys::line_of(6);
        auto rep = check_confluence(sys, 20, rng.split(1), 1000);
        CHECK(rep.confluent);
        CHECK(rep.terminal.size() == 6);
    }
    // two tiles fitting the same site: non-confluent within a few trials
    {
        tile_system sys = toys::ab_competition();
        auto rep = check_confluence(sys, 50, rng.split(2), 1000);
        CHECK_FALSE(rep.confluent);
        REQUIRE(rep.divergent.has_value());
        CHECK_FALSE(*rep.divergent == rep.terminal);
    }
    // unbounded growth trips the cap
    {
        tile_system sys = toys::unbounded_line();
        CHECK_THROWS_AS(check_confluence(sys, 3, rng.split(3), 50), cap_exceeded);
    }
}

TEST_CASE("property: frontier equals brute force on random assemblies") {
    random_source rng(2024, 0);
    for (int iter = 0; iter < 1000; ++iter) {
        random_source case_rng = rng.split(iter);
        tile_system sys = random_system(case_rng);
        std::size_t max_tiles = 2 + case_rng.next_below(200);
        assembly a = random_assembly(sys, case_rng, max_tiles);
        auto f = frontier(sys, a);
        auto bf = brute_frontier(sys, a);
        REQUIRE(f == bf);
    }
}

TEST_CASE("property: monotone growth, connectivity, seed immutability") {
    random_source rng(99, 1);
    for (int iter = 0; iter < 300; ++iter) {
        random_source case_rng = rng.split(iter);
        tile_system sys = random_system(case_rng);
        assembly a = assembly::from_seed(sys);
        for (int step = 0; step < 40; ++step) {
            auto f = frontier(sys, a);
            if (f.empty()) break;
            attachment at = f[case_rng.next_below(f.size())];
            assembly b = attach(a, at, sys);
            REQUIRE(b.size() == a.size() + 1);
            for (const auto& [p, t] : a.placements()) REQUIRE(b.tile_at(p) == t);
            REQUIRE(connected(b));
            a = b;
        }
        // seed placements untouched
        for (const placement& p : sys.seed()) REQUIRE(a.tile_at(p.position) == p.tile);
    }
}

TEST_CASE("property: binding_strength invariant under translation and type permutation") {
    random_source rng(512, 3);
    for (int iter = 0; iter < 300; ++iter) {
        random_source case_rng = rng.split(iter);
        tile_system sys = random_system(case_rng);
        assembly a = random_assembly(sys, case_rng, 2 + case_rng.next_below(30));
        auto f = frontier(sys, a);
        if (f.empty()) continue;
        attachment probe = f[case_rng.next_below(f.size())];
        int s0 = binding_strength(sys, a, probe.position, probe.tile);

        // translate assembly and probe
        std::int64_t dx = static_cast<std::int64_t>(case_rng.next_below(2001)) - 1000;
        std::int64_t dy = static_cast<std::int64_t>(case_rng.next_below(2001)) - 1000;
        std::vector<placement> moved;
        for (const auto& [p, t] : a.placements()) moved.push_back({{p.x + dx, p.y + dy}, t});
        assembly b = assembly::from_placements(moved);
        REQUIRE(binding_strength(sys, b, {probe.position.x + dx, probe.position.y + dy},
                                 probe.tile) == s0);

        // permute (reverse) the tile type order
        std::vector<tile_type> rev(sys.tile_types().rbegin(), sys.tile_types().rend());
        std::vector<placement> seed2;
        for (const placement& p : sys.seed())
            seed2.push_back({p.position,
                             static_cast<tile_index>(sys.size() - 1 - p.tile)});
        tile_system sys2(rev, seed2);
        std::vector<placement> remapped;
        for (const auto& [p, t] : a.placements())
            remapped.push_back({p, static_cast<tile_index>(sys.size() - 1 - t)});
        assembly c = assembly::from_placements(remapped);
        REQUIRE(binding_strength(sys2, c, probe.position,
                                 static_cast<tile_index>(sys.size() - 1 - probe.tile)) == s0);
    }
}
