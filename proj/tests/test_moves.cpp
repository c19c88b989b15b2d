#include <doctest.h>

#include <random>

#include "vcn/invariants.hpp"
#include "vcn/moves.hpp"

using namespace vcn;

namespace {

DiagramCode manual(std::vector<std::vector<Passage>> comps) {
    DiagramCode code{std::move(comps)};
    code.validate();
    return code;
}

int count_kind(const DiagramCode& code, MoveKind kind) {
    return static_cast<int>(find_sites(code, kind).size());
}

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("site scanning") {
    DiagramCode e1 = parse_code("O1+ V1+ U1+ V1-");
    CHECK(count_kind(e1, MoveKind::R1Remove) == 0);
    CHECK(count_kind(e1, MoveKind::V1Remove) == 0);
    CHECK(count_kind(e1, MoveKind::V2Remove) == 0);

    DiagramCode curl_pair = manual({{Passage::virt(1, +1), Passage::virt(1, -1),
                                     Passage::over(2, +1), Passage::under(2, +1)}});
    CHECK(count_kind(curl_pair, MoveKind::V1Remove) == 1);
    CHECK(count_kind(curl_pair, MoveKind::R1Remove) == 1);

    DiagramCode v2 = parse_code("O1+ V1+ V2- U1+ V2+ V1-");
    auto sites = find_sites(v2, MoveKind::V2Remove);
    REQUIRE(sites.size() == 1);
    CHECK(sites[0].at == std::vector<std::pair<int, int>>{{0, 1}, {0, 4}});

    // a lone curl is not removable: the component would vanish
    CHECK(count_kind(parse_code("O1+ U1+"), MoveKind::R1Remove) == 0);

    // addition sites cover every gap
    CHECK(count_kind(e1, MoveKind::R1Add) == 4 * 4);
    CHECK(count_kind(e1, MoveKind::V1Add) == 4 * 2);
    CHECK(count_kind(e1, MoveKind::V2Add) == 4 * 4 * 2);
}

TEST_CASE("virtual curl removal keeps zeta exactly") {
    DiagramCode before = manual({{Passage::virt(1, +1), Passage::virt(1, -1),
                                  Passage::over(2, +1), Passage::under(2, +1)}});
    auto sites = find_sites(before, MoveKind::V1Remove);
    REQUIRE(sites.size() == 1);
    DiagramCode after = apply(before, sites[0]);
    CHECK(serialize(after) == "O2+ U2+\n");
    CHECK(zeta(before).zeta == zeta(after).zeta);
    CHECK(after.virtual_count() == before.virtual_count() - 1);
}

TEST_CASE("virtual second move removal keeps zeta exactly") {
    DiagramCode before = parse_code("O1+ V1+ V2- U1+ V2+ V1-");
    auto sites = find_sites(before, MoveKind::V2Remove);
    REQUIRE(sites.size() == 1);
    DiagramCode after = apply(before, sites[0]);
    CHECK(after.virtual_count() == before.virtual_count() - 2);
    CHECK(serialize(after) == "O1+ U1+\n");
    CHECK(zeta(before).zeta == zeta(after).zeta);
}

TEST_CASE("curl addition then removal is the identity") {
    DiagramCode e1 = parse_code("O1+ V1+ U1+ V1-");
    for (bool under_first : {false, true})
        for (int sign : {+1, -1})
            for (int gap = 0; gap < 4; ++gap) {
                MoveSite add{MoveKind::R1Add, {{0, gap}}};
                add.sign = sign;
                add.under_first = under_first;
                DiagramCode bigger = apply(e1, add);
                CHECK(bigger.classical_count() == 2);

                MoveSite remove{MoveKind::R1Remove, {{0, gap}}};
                CHECK(apply(bigger, remove) == e1);

                auto l = equal_up_to_t_power(zeta(e1).zeta, zeta(bigger).zeta);
                REQUIRE(l.has_value());
                CHECK(zeta(bigger).lower_bound == zeta(e1).lower_bound);
            }
}

TEST_CASE("virtual additions keep zeta exactly") {
    DiagramCode e1 = parse_code("O1+ V1+ U1+ V1-");
    LaurentPoly z = zeta(e1).zeta;

    MoveSite v1{MoveKind::V1Add, {{0, 2}}};
    v1.lead_sense = -1;
    DiagramCode with_v1 = apply(e1, v1);
    CHECK(with_v1.virtual_count() == 2);
    CHECK(zeta(with_v1).zeta == z);

    MoveSite v2{MoveKind::V2Add, {{0, 1}, {0, 3}}};
    DiagramCode with_v2 = apply(e1, v2);
    CHECK(with_v2.virtual_count() == 3);
    CHECK(zeta(with_v2).zeta == z);

    // the inserted quadruple is recognized and removable
    auto sites = find_sites(with_v2, MoveKind::V2Remove);
    REQUIRE_FALSE(sites.empty());
}

TEST_CASE("invalid sites are rejected") {
    DiagramCode e1 = parse_code("O1+ V1+ U1+ V1-");
    CHECK_THROWS_AS(apply(e1, MoveSite{MoveKind::R1Remove, {{0, 0}}}), InvalidSite);
    CHECK_THROWS_AS(apply(e1, MoveSite{MoveKind::V1Remove, {{0, 1}}}), InvalidSite);
    CHECK_THROWS_AS(apply(e1, MoveSite{MoveKind::R1Add, {{0, 99}}}), InvalidSite);
    CHECK_THROWS_AS(apply(e1, MoveSite{MoveKind::R1Add, {{7, 0}}}), InvalidSite);
    CHECK_THROWS_AS(apply(parse_code("O1+ U1+"), MoveSite{MoveKind::R1Remove, {{0, 0}}}),
                    InvalidSite);
}

TEST_CASE("walks preserve the invariants") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 3);
        int k = static_cast<int>(rng() % 3);
        DiagramCode start = random_diagram(n, k, 1, rng());
        ZetaReport before = zeta(start);

        WalkResult walk = random_walk(start, 12, rng());
        walk.code.validate();
        CHECK(walk.log.size() == 12);

        ZetaReport after = zeta(walk.code);
        CHECK(equal_up_to_t_power(before.zeta, after.zeta).has_value());
        CHECK(after.deg_s == before.deg_s);
        CHECK(after.mdeg_s == before.mdeg_s);
        CHECK(after.lower_bound == before.lower_bound);

        // k moved exactly as the logged moves dictate
        int k_delta = 0;
        for (const auto& site : walk.log) {
            if (site.kind == MoveKind::V1Add) k_delta += 1;
            if (site.kind == MoveKind::V1Remove) k_delta -= 1;
            if (site.kind == MoveKind::V2Add) k_delta += 2;
            if (site.kind == MoveKind::V2Remove) k_delta -= 2;
        }
        CHECK(walk.code.virtual_count() == start.virtual_count() + k_delta);
    }
}

TEST_CASE("zero-step walks and determinism") {
    DiagramCode e1 = parse_code("O1+ V1+ U1+ V1-");
    WalkResult none = random_walk(e1, 0, 5);
    CHECK(none.code == e1);
    CHECK(none.log.empty());

    WalkResult a = random_walk(e1, 15, 42);
    WalkResult b = random_walk(e1, 15, 42);
    CHECK(a.code == b.code);
    CHECK(a.log == b.log);
    CHECK(random_walk(e1, 15, 43).code != a.code);
}

}  // TEST_SUITE
