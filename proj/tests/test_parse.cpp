#include <doctest.h>

#include <filesystem>
#include <random>

#include "crn/parse.hpp"
#include "support.hpp"

using namespace crn;

TEST_CASE("basic reaction parsing") {
    ReactionNetwork net = parse_network("2 X1 + X2 -> 3 X1 ; k=1\nX1 -> X2 ; k=1/2\n");
    REQUIRE(net.reaction_count() == 2);
    REQUIRE(net.species_count() == 2);
    CHECK(net.species() == std::vector<std::string>{"X1", "X2"});
    CHECK(net.reactions()[0].source.coeff(0) == 2);
    CHECK(net.reactions()[0].source.coeff(1) == 1);
    CHECK(net.reactions()[0].target.coeff(0) == 3);
    CHECK(net.reactions()[0].rate == Rational(1));
    CHECK(net.reactions()[1].rate == Rational(1, 2));
}

TEST_CASE("reversible reactions expand forward rate first") {
    ReactionNetwork net = parse_network("A <-> 0 ; k=2, k=3\n");
    REQUIRE(net.reaction_count() == 2);
    CHECK(net.reactions()[0].is_outflow());
    CHECK(net.reactions()[0].rate == Rational(2));
    CHECK(net.reactions()[1].is_inflow());
    CHECK(net.reactions()[1].rate == Rational(3));

    ReactionNetwork bare = parse_network("A <-> B\n");
    CHECK(bare.reaction_count() == 2);
    CHECK_FALSE(bare.reactions()[0].rate.has_value());
}

TEST_CASE("comments, blank lines and whitespace are ignored") {
    ReactionNetwork net = parse_network(
        "# leading comment\n"
        "\n"
        "  A + B -> 0   # trailing comment\n"
        "\t0 -> A\n");
    CHECK(net.reaction_count() == 2);
}

TEST_CASE("decimal rates equal their fraction form") {
    ReactionNetwork a = parse_network("A -> B ; k=1.5\n");
    ReactionNetwork b = parse_network("A -> B ; k=3/2\n");
    CHECK(a.reactions()[0].rate == b.reactions()[0].rate);
    CHECK(parse_rational("0.25") == Rational(1, 4));
}

TEST_CASE("species names may use digits, underscore, star, caret and UTF-8") {
    ReactionNetwork net = parse_network("R*VR*Δ -> R*VR*\n_x9 + αβ -> 0\nZ^2 -> 0\n");
    CHECK(net.species_index("R*VR*Δ") == 0);
    CHECK(net.species_index("R*VR*") == 1);
    CHECK(net.species_index("_x9") == 2);
    CHECK(net.species_index("αβ") == 3);
    CHECK(net.species_index("Z^2") == 4);
}

TEST_CASE("parse errors carry line and column") {
    auto expect_error = [](const char* text, int line) {
        try {
            parse_network(text);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() >= 1);
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    };
    expect_error("A -> B\nA + -> C\n", 2);          // missing term
    expect_error("A => B\n", 1);                    // bad arrow
    expect_error("A -> B ; k=0\n", 1);              // zero rate
    expect_error("A -> B ; k=-2\n", 1);             // negative rate
    expect_error("A -> A\n", 1);                    // trivial
    expect_error("A -> B\nA -> B\n", 2);            // duplicate
    expect_error("0 A -> B\n", 1);                  // zero coefficient
    expect_error("A -> B extra\n", 1);              // trailing junk
    expect_error("A -> B ; k=1, k=2\n", 1);         // reverse rate without <->
    expect_error("-> B\n", 1);                      // empty source side
}

TEST_CASE("coefficient may abut the species name") {
    ReactionNetwork net = parse_network("9A -> B\n");
    CHECK(net.reactions()[0].source.coeff(0) == 9);
}

TEST_CASE("format produces canonical text that reparses to the same network") {
    ReactionNetwork net = parse_network("2 X1 + X2 -> 3 X1 ; k=1\nX1 -> X2\n");
    std::string text = format_network(net);
    CHECK(text == "2 X1 + X2 -> 3 X1 ; k=1\nX1 -> X2\n");
    CHECK(parse_network(text) == net);

    // Unit coefficients are omitted, the empty complex prints as 0.
    ReactionNetwork flows = parse_network("1 A -> 0\n0 -> A ; k=2/3\n");
    CHECK(format_network(flows) == "A -> 0\n0 -> A ; k=2/3\n");
}

TEST_CASE("format_reaction renders a single reaction") {
    ReactionNetwork net = parse_network("2 X1 + X2 -> 3 X1\n");
    CHECK(format_reaction(net, net.reactions()[0]) == "2 X1 + X2 -> 3 X1");
}

TEST_CASE("round trip is a fixpoint on random networks") {
    std::mt19937 rng(31);
    for (int rep = 0; rep < 50; ++rep) {
        ReactionNetwork net = testing::random_network(rng);
        std::string text = format_network(net);
        ReactionNetwork back = parse_network(text);
        CHECK(back == net);
        CHECK(format_network(back) == text);
    }
}

TEST_CASE("shipped network files load") {
    namespace fs = std::filesystem;
    int seen = 0;
    for (const auto& entry : fs::recursive_directory_iterator(CRN_TEST_DATA_DIR)) {
        if (entry.path().extension() != ".crn") continue;
        ++seen;
        ReactionNetwork net = load_network(entry.path().string());
        CHECK(net.reaction_count() > 0);
        CHECK(parse_network(format_network(net)) == net);
    }
    CHECK(seen >= 11);
    CHECK_THROWS_AS(load_network("/nonexistent/file.crn"), std::runtime_error);
}

TEST_CASE("receptor seed file has the expected shape") {
    ReactionNetwork net = load_network(std::string(CRN_TEST_DATA_DIR) + "/vegfr/net1.crn");
    CHECK(net.species() == std::vector<std::string>{"RR", "R", "V"});
    CHECK(net.reaction_count() == 9);
}
