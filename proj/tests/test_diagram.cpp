#include <doctest.h>

#include <random>

#include "vcn/diagram.hpp"

using namespace vcn;

namespace {

std::vector<int> degrees(const LongArc& la) {
    std::vector<int> out;
    for (const auto& a : la.arcs) out.push_back(a.degree);
    return out;
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("parse basics") {
    DiagramCode code = parse_code("O1+ V1+ U1+ V1-");
    CHECK(code.components.size() == 1);
    CHECK(code.classical_count() == 1);
    CHECK(code.virtual_count() == 1);

    CHECK_THROWS_AS(parse_code("O1+ U1+ O1+"), ValidationError);
    CHECK_THROWS_WITH(parse_code("O1+ U1+ O1+"), "classical id 1 appears 3 times");
    CHECK_THROWS_AS(parse_code("O1+ V1+ U1+ V1+"), ValidationError);
    CHECK_THROWS_WITH(parse_code("O1+ V1+ U1+ V1+"), "virtual id 1 lacks a Decreasing passage");
    CHECK_THROWS_AS(parse_code("O1+ X2- U1+"), SyntaxError);
    CHECK_THROWS_AS(parse_code("O1+ U1"), SyntaxError);
    CHECK_THROWS_AS(parse_code("O1+ U1-"), ValidationError);  // sign mismatch
    CHECK_THROWS_AS(parse_code(""), ValidationError);
    CHECK_THROWS_AS(parse_code("# only a comment\n"), ValidationError);
}

TEST_CASE("parse renumbers ids by first appearance") {
    DiagramCode code = parse_code("O7- U9+ O9+ U7-");
    CHECK(serialize(code) == "O1- U2+ O2+ U1-\n");
    DiagramCode two = parse_code("O3+ U3+\nV5+ V5-");
    CHECK(serialize(two) == "O1+ U1+\nV1+ V1-\n");
}

TEST_CASE("comments and blank lines") {
    DiagramCode code = parse_code("# a diagram\n\nO1+ V1+ U1+ V1-  # trailing\n\n");
    CHECK(code.components.size() == 1);
    CHECK(serialize(code) == "O1+ V1+ U1+ V1-\n");
}

TEST_CASE("properness") {
    auto [p1, o1] = is_proper(parse_code("V1+ V1-"));
    CHECK_FALSE(p1);
    CHECK(o1 == std::vector<int>{0});

    auto [p2, o2] = is_proper(parse_code("O1+ V1+ U1+ V1-"));
    CHECK(p2);
    CHECK(o2.empty());

    auto [p3, o3] = is_proper(parse_code("O1+ U2+ O2+ U1+\nV1+ V1-"));
    CHECK_FALSE(p3);
    CHECK(o3 == std::vector<int>{1});
}

TEST_CASE("properize") {
    DiagramCode curl = properize(parse_code("V1+ V1-"));
    CHECK(serialize(curl) == "V1+ V1- O2+ U2+\n");
    CHECK(properize(curl) == curl);

    DiagramCode e1 = parse_code("O1+ V1+ U1+ V1-");
    CHECK(properize(e1) == e1);

    DiagramCode two = properize(parse_code("V1+ V1-\nV2- V2+"));
    CHECK(serialize(two) == "V1+ V1- O3+ U3+\nV2- V2+ O4+ U4+\n");
    CHECK(is_proper(two).first);

    // properize never changes the virtual ids
    CHECK(two.virtual_ids() == std::vector<int>{1, 2});
}

TEST_CASE("long arcs of the one-crossing example") {
    LongArcDecomposition d = long_arcs(parse_code("O1+ V1+ U1+ V1-"));
    CHECK(d.n == 1);
    CHECK(d.k == 1);
    REQUIRE(d.long_arcs.size() == 1);
    const LongArc& la = d.long_arcs[0];
    CHECK(degrees(la) == std::vector<int>{0, -1, 0});
    CHECK(la.p == 1);
    CHECK(la.q == 1);
    CHECK(la.emanates_from == 0);
    CHECK(la.ends_at == 0);
    CHECK(la.arcs[1].over_crossings == std::vector<int>{0});
}

TEST_CASE("long arcs of the two-crossing example") {
    LongArcDecomposition d = long_arcs(parse_code("O1+ V1+ U2+ O2+ V1- U1+"));
    REQUIRE(d.n == 2);
    CHECK(degrees(d.long_arcs[0]) == std::vector<int>{0, 1});
    CHECK(d.long_arcs[0].p == 1);
    CHECK(d.long_arcs[0].q == 0);
    CHECK(d.long_arcs[0].ends_at == 1);
    CHECK(degrees(d.long_arcs[1]) == std::vector<int>{0, -1});
    CHECK(d.long_arcs[1].p == 0);
    CHECK(d.long_arcs[1].q == 1);
    CHECK(d.long_arcs[1].ends_at == 0);
}

TEST_CASE("long arcs of classical codes") {
    LongArcDecomposition d = long_arcs(parse_code("O1+ U2+ O3+ U1+ O2+ U3+"));
    CHECK(d.n == 3);
    CHECK(d.k == 0);
    for (const auto& la : d.long_arcs) {
        CHECK(la.p == 0);
        CHECK(la.q == 0);
        CHECK(la.arcs.size() == 1);
        CHECK(la.arcs[0].degree == 0);
    }
    CHECK_THROWS_AS(long_arcs(parse_code("V1+ V1-")), NotProper);
}

TEST_CASE("mirror") {
    DiagramCode e1 = parse_code("O1+ V1+ U1+ V1-");
    CHECK(serialize(mirror_virtual(e1)) == "O1+ V1- U1+ V1+\n");
    CHECK(mirror_virtual(mirror_virtual(e1)) == e1);

    DiagramCode classical = parse_code("O1+ U1+");
    CHECK(mirror_virtual(classical) == classical);
}

TEST_CASE("mirror swaps p and q and negates degrees") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        DiagramCode code = random_diagram(1 + static_cast<int>(rng() % 4),
                                          static_cast<int>(rng() % 4), 1, rng());
        LongArcDecomposition d = long_arcs(code);
        LongArcDecomposition md = long_arcs(mirror_virtual(code));
        REQUIRE(d.n == md.n);
        for (int j = 0; j < d.n; ++j) {
            CHECK(d.long_arcs[j].p == md.long_arcs[j].q);
            CHECK(d.long_arcs[j].q == md.long_arcs[j].p);
            REQUIRE(d.long_arcs[j].arcs.size() == md.long_arcs[j].arcs.size());
            for (std::size_t mu = 0; mu < d.long_arcs[j].arcs.size(); ++mu)
                CHECK(d.long_arcs[j].arcs[mu].degree == -md.long_arcs[j].arcs[mu].degree);
        }
    }
}

TEST_CASE("decomposition invariants on random diagrams") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        int n = static_cast<int>(rng() % 5);
        int k = static_cast<int>(rng() % 5);
        if (n == 0 && k == 0) n = 1;
        int components = 1 + static_cast<int>(rng() % 2);
        components = std::min(components, 2 * (n + k));
        DiagramCode code = random_diagram(n, k, components, rng());
        code.validate();

        LongArcDecomposition d = long_arcs(code);
        CHECK(static_cast<int>(d.long_arcs.size()) == d.n);
        int sum_p = 0, sum_q = 0;
        for (const auto& la : d.long_arcs) {
            sum_p += la.p;
            sum_q += la.q;
            CHECK(la.arcs.front().degree == 0);
            CHECK(la.max_degree() <= la.p);
            CHECK(la.min_degree() >= -la.q);
        }
        CHECK(sum_p == d.k);
        CHECK(sum_q == d.k);
    }
}

TEST_CASE("random diagram determinism and shape") {
    DiagramCode a = random_diagram(2, 1, 1, 7);
    DiagramCode b = random_diagram(2, 1, 1, 7);
    CHECK(a == b);
    CHECK(random_diagram(2, 1, 1, 8) != a);

    DiagramCode c = random_diagram(0, 1, 1, 3);
    CHECK(c.classical_count() >= 1);  // properization added a curl
    CHECK(c.virtual_count() == 1);

    DiagramCode d = random_diagram(3, 2, 2, 5);
    d.validate();
    CHECK(d.components.size() == 2);
    CHECK(is_proper(d).first);

    CHECK_THROWS_AS(random_diagram(0, 0, 1, 1), InfeasibleShape);
    CHECK_THROWS_AS(random_diagram(1, 0, 3, 1), InfeasibleShape);
}

TEST_CASE("serialization round-trips") {
    for (const char* text : {"O1+ V1+ U1+ V1-\n", "O1- U2+ O2+ U1-\nV1+ V1- O3+ U3+\n"}) {
        DiagramCode code = parse_code(text);
        CHECK(serialize(code) == text);
        CHECK(parse_code(serialize(code)) == code);
    }
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        DiagramCode code = random_diagram(1 + static_cast<int>(rng() % 5),
                                          static_cast<int>(rng() % 5), 1, rng());
        DiagramCode reparsed = parse_code(serialize(code));
        CHECK(long_arcs(reparsed).n == long_arcs(code).n);
    }
}

TEST_CASE("disjoint union keeps groups disjoint") {
    DiagramCode a = parse_code("O1+ V1+ U1+ V1-");
    DiagramCode b = parse_code("O1- U1-");
    std::vector<DiagramCode> pieces = {a, b};
    DiagramCode u = disjoint_union(pieces);
    u.validate();
    CHECK(u.components.size() == 2);
    CHECK(u.classical_count() == 2);
    CHECK(u.virtual_count() == 1);
    CHECK(serialize(u) == "O1+ V1+ U1+ V1-\nO2- U2-\n");
}

}  // TEST_SUITE
