#include <doctest.h>

#include "crn/linalg.hpp"
#include "crn/network.hpp"
#include "crn/parse.hpp"

using namespace crn;

TEST_CASE("complex stores positive coefficients only") {
    Complex c;
    CHECK(c.empty());
    c.set(2, 3);
    CHECK(c.coeff(2) == 3);
    CHECK(c.coeff(0) == 0);
    c.set(2, 0);
    CHECK(c.empty());
    CHECK_THROWS_AS(c.set(1, -1), std::invalid_argument);

    c.set(0, 1);
    CHECK(c.is_unit());
    c.set(0, 2);
    CHECK_FALSE(c.is_unit());
    c.set(1, 1);
    CHECK_FALSE(c.is_unit());
}

TEST_CASE("complex renumbering and species removal") {
    Complex c;
    c.set(0, 2);
    c.set(2, 1);
    Complex r = c.renumbered({5, 1, 0});
    CHECK(r.coeff(5) == 2);
    CHECK(r.coeff(0) == 1);

    Complex w = c.without({true, false, false});
    CHECK(w.coeff(0) == 0);
    CHECK(w.coeff(2) == 1);
}

TEST_CASE("network construction canonicalizes") {
    // Species reordered to first appearance, unreferenced dropped.
    Reaction r1;
    r1.source.set(2, 1);  // C
    r1.target.set(0, 2);  // A
    Reaction r2;
    r2.source.set(0, 1);
    ReactionNetwork net({"A", "B", "C", "D"}, {r1, r2});
    CHECK(net.species() == std::vector<std::string>{"C", "A"});
    CHECK(net.species_index("A") == 1);
    CHECK(net.species_index("B") == -1);
    CHECK(net.reaction_count() == 2);
    CHECK(net.reactions()[0].source.coeff(0) == 1);  // C got index 0
    CHECK(net.reactions()[0].target.coeff(1) == 2);

    // Duplicate reactions collapse to the first occurrence.
    ReactionNetwork dup({"A", "B", "C", "D"}, {r1, r2, r1});
    CHECK(dup.reaction_count() == 2);

    // Trivial reactions are rejected outright.
    Reaction trivial;
    trivial.source.set(0, 1);
    trivial.target.set(0, 1);
    CHECK_THROWS_AS(ReactionNetwork({"A"}, {trivial}), std::invalid_argument);
}

TEST_CASE("reaction flow predicates") {
    ReactionNetwork net = parse_network("A -> 0\n0 -> A\nA -> B\nA + B -> 0\n");
    CHECK(net.reactions()[0].is_outflow());
    CHECK(net.reactions()[1].is_inflow());
    CHECK(net.reactions()[1].is_flow());
    CHECK_FALSE(net.reactions()[2].is_flow());
    CHECK_FALSE(net.reactions()[3].is_flow());
}

TEST_CASE("stoichiometric and source matrices of the bistable example") {
    ReactionNetwork net = parse_network("2 X1 + X2 -> 3 X1 ; k=1\nX1 -> X2 ; k=1\n");
    auto [gamma, source] = build_matrices(net);
    REQUIRE(gamma.rows() == 2);
    REQUIRE(gamma.cols() == 2);
    CHECK(gamma(0, 0) == 1);
    CHECK(gamma(1, 0) == -1);
    CHECK(gamma(0, 1) == -1);
    CHECK(gamma(1, 1) == 1);
    CHECK(source(0, 0) == 2);
    CHECK(source(1, 0) == 1);
    CHECK(source(0, 1) == 1);
    CHECK(source(1, 1) == 0);
    CHECK(stoichiometric_matrix(net) == gamma);
    CHECK(source_matrix(net) == source);
}

TEST_CASE("openness classification") {
    auto tag = [](const char* text) { return classify_openness(parse_network(text)).tag; };
    CHECK(tag("A -> B\n") == OpennessTag::Closed);
    CHECK(tag("A -> B\n0 -> A\n") == OpennessTag::OpenNoOutflows);
    CHECK(tag("A -> B\nA -> 0\n") == OpennessTag::OpenWithOutflows);
    CHECK(tag("A -> B\nA -> 0\n0 -> A\nB -> 0\n0 -> B\n") == OpennessTag::FullyOpen);
    // Fully open needs both directions for every species.
    CHECK(tag("A -> B\nA -> 0\n0 -> A\nB -> 0\n") == OpennessTag::OpenWithOutflows);

    Openness o = classify_openness(parse_network("A -> B\nA -> 0\n0 -> B\n"));
    CHECK(o.outflow_species == std::vector<int>{0});
    CHECK(o.inflow_species == std::vector<int>{1});
}

TEST_CASE("conservation laws") {
    ReactionNetwork cycle = parse_network("X1 -> X2\nX2 -> X3\nX3 -> X1\n");
    RationalMatrix laws = conservation_laws(cycle);
    REQUIRE(laws.rows() == 1);
    CHECK(laws(0, 0) == 1);
    CHECK(laws(0, 1) == 1);
    CHECK(laws(0, 2) == 1);

    ReactionNetwork open = parse_network("A -> 0\n0 -> A\n");
    CHECK(conservation_laws(open).rows() == 0);
}

TEST_CASE("deficiency of classic examples") {
    // A <-> B: 2 complexes, 1 linkage class, rank 1.
    CHECK(deficiency(parse_network("A <-> B\n")) == 0);
    // Bistable example: 4 complexes, 2 linkage classes, rank 1.
    CHECK(deficiency(parse_network("2 X1 + X2 -> 3 X1\nX1 -> X2\n")) == 1);
    // Shared complexes merge linkage classes: A -> B, B -> C, C -> A.
    CHECK(deficiency(parse_network("A -> B\nB -> C\nC -> A\n")) == 0);
    // A + B -> 0 and 0 -> A share the zero complex: 4 complexes, 2 classes, rank 2.
    CHECK(deficiency(parse_network("A + B -> 0\n0 -> A\nA -> 2 A\n")) == 1);
}

TEST_CASE("compatibility classes follow the stoichiometric span") {
    ReactionNetwork net = parse_network("2 X1 + X2 -> 3 X1\nX1 -> X2\n");
    RationalVector x(2), y(2), z(2);
    x << 1, 2;
    y << 2, 1;
    z << 2, 2;
    CHECK(same_compatibility_class(net, x, y));
    CHECK_FALSE(same_compatibility_class(net, x, z));
    CHECK(same_compatibility_class(net, x, x));
}
