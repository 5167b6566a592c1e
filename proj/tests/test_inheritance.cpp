#include <doctest.h>

#include <string>

#include "crn/inheritance.hpp"
#include "crn/parse.hpp"

using namespace crn;

namespace {

const std::string kDataDir = CRN_TEST_DATA_DIR;

}  // namespace

TEST_CASE("add_all_flows appends missing flow pairs and is idempotent") {
    ReactionNetwork net = parse_network("A -> B\nA -> 0\n");
    ReactionNetwork open = add_all_flows(net);
    CHECK(classify_openness(open).tag == OpennessTag::FullyOpen);
    CHECK(open.reaction_count() == 5);  // A -> 0 not duplicated
    CHECK(add_all_flows(open) == open);
    // Existing reactions keep their positions.
    CHECK(open.reactions()[0] == net.reactions()[0]);
}

TEST_CASE("add_species_with_flow inserts a fresh species") {
    ReactionNetwork net1 = load_network(kDataDir + "/vegfr/net1.crn");
    ReactionNetwork step1 = add_species_with_flow(net1, "VR", {{1, 0, 1}});
    ReactionNetwork step2 = add_species_with_flow(step1, "VRR", {{2, 0, 1}});
    CHECK(step2 == load_network(kDataDir + "/vegfr/net2.crn"));

    // A species may also enter with no insertions, carried by its flows alone.
    ReactionNetwork lonely = add_species_with_flow(net1, "W", {});
    CHECK(lonely.species_count() == 4);
    CHECK(lonely.reaction_count() == 11);
    CHECK(classify_openness(lonely).tag == OpennessTag::FullyOpen);

    // Insertion on both sides with distinct coefficients.
    ReactionNetwork both = add_species_with_flow(net1, "E", {{0, 1, 2}});
    const int e = both.species_index("E");
    REQUIRE(e >= 0);
    CHECK(both.reactions()[0].source.coeff(e) == 1);
    CHECK(both.reactions()[0].target.coeff(e) == 2);
}

TEST_CASE("add_species_with_flow validates its input") {
    ReactionNetwork net = parse_network("A -> B\n");
    CHECK_THROWS_AS(add_species_with_flow(net, "A", {}), std::invalid_argument);
    CHECK_THROWS_AS(add_species_with_flow(net, "C", {{5, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(add_species_with_flow(net, "C", {{0, -1, 0}}), std::invalid_argument);
}

TEST_CASE("add_dependent_reaction enforces span membership") {
    ReactionNetwork closed = parse_network("X1 + X2 -> 0\n");
    Reaction transmute;
    transmute.source.set(0, 1);
    transmute.target.set(1, 1);
    CHECK_THROWS_AS(add_dependent_reaction(closed, transmute), MembershipFailed);

    // The reverse direction lies in the span.
    Reaction inflow_pair;
    inflow_pair.target.set(0, 1);
    inflow_pair.target.set(1, 1);
    ReactionNetwork grown = add_dependent_reaction(closed, inflow_pair);
    CHECK(grown.reaction_count() == 2);

    // After adding all flows the span is everything.
    ReactionNetwork open = add_all_flows(closed);
    ReactionNetwork with_new = add_dependent_reaction(open, transmute);
    CHECK(with_new.reaction_count() == open.reaction_count() + 1);

    CHECK_THROWS_AS(add_dependent_reaction(open, Reaction{}), std::invalid_argument);
}

TEST_CASE("embedding removes species and reactions") {
    ReactionNetwork seq1 = load_network(kDataDir + "/cycles/embed_seq4.crn");
    ReactionNetwork seq2 = load_network(kDataDir + "/cycles/embed_seq3.crn");
    ReactionNetwork embedded = embed_network(seq1, {{"X4"}, {1}});
    CHECK(canonically_equal(embedded, seq2));
    CHECK(classify_openness(embedded).tag == OpennessTag::FullyOpen);

    // Composition matches a single combined removal when indices permit.
    ReactionNetwork two_step = embed_network(embed_network(seq1, {{"X4"}, {}}), {{"X3"}, {}});
    ReactionNetwork one_step = embed_network(seq1, {{"X3", "X4"}, {}});
    CHECK(canonically_equal(two_step, one_step));

    CHECK_THROWS_AS(embed_network(seq1, {{"nope"}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(embed_network(seq1, {{}, {99}}), std::invalid_argument);
}

TEST_CASE("canonical form ignores order and rates") {
    ReactionNetwork a = parse_network("B -> A ; k=2\nA + B -> 0\n");
    ReactionNetwork b = parse_network("A + B -> 0\nB -> A ; k=7\n");
    CHECK(canonically_equal(a, b));
    CHECK_FALSE(canonically_equal(a, parse_network("B -> A\n")));
    CHECK_FALSE(canonically_equal(a, parse_network("B -> 2 A\nA + B -> 0\n")));

    ReactionNetwork c = canonical_form(a);
    CHECK(c.species() == std::vector<std::string>{"A", "B"});
    for (const auto& r : c.reactions()) CHECK_FALSE(r.rate.has_value());
}

TEST_CASE("plan parsing") {
    LiftingPlan plan = load_lifting_plan(kDataDir + "/vegfr/vegfr.plan");
    CHECK(plan.seed == load_network(kDataDir + "/vegfr/net1.crn"));
    CHECK(plan.target == load_network(kDataDir + "/vegfr/net4.crn"));
    REQUIRE(plan.steps.size() == 16);
    CHECK(plan.steps[0].kind == LiftKind::AddSpeciesWithFlow);
    CHECK(plan.steps[0].species == "VR");
    REQUIRE(plan.steps[0].insertions.size() == 1);
    CHECK(plan.steps[0].insertions[0].reaction == 1);  // written as 2 in the file
    CHECK(plan.steps[0].insertions[0].target_coeff == 1);
    CHECK(plan.steps[0].insertions[0].source_coeff == 0);
    CHECK(plan.steps[4].kind == LiftKind::AddAllFlows);
    CHECK(plan.steps[5].kind == LiftKind::AddDependentReaction);
    CHECK(plan.steps[5].reaction_text == "2 R -> RR");
    CHECK(describe(plan.steps[0]) == "add-species VR into 2 as-product 1");
}

TEST_CASE("plan parsing rejects malformed directives") {
    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(parse_lifting_plan(text, kDataDir + "/vegfr"), ParseError);
    };
    bad("target net1.crn\nadd-flows\n");                      // no seed
    bad("seed net1.crn\nadd-flows\n");                        // no target
    bad("seed net1.crn\ntarget net1.crn\nfrobnicate\n");      // unknown directive
    bad("seed net1.crn\ntarget net1.crn\nadd-species\n");     // missing name
    bad("seed net1.crn\ntarget net1.crn\nadd-species Q into 0\n");
    bad("seed net1.crn\ntarget net1.crn\nadd-species Q into x\n");
    bad("seed net1.crn\ntarget net1.crn\nadd-species Q banana 3\n");
    bad("seed net1.crn\ntarget net1.crn\nadd-reaction\n");    // missing reaction
}

TEST_CASE("verified lift from the receptor seed to the full binding model") {
    LiftingPlan plan = load_lifting_plan(kDataDir + "/vegfr/vegfr.plan");
    PlanReport report = verify_lifting_plan(plan);
    CHECK(report.passed());
    CHECK(report.target_matched);
    REQUIRE(report.steps.size() == 16);
    for (const auto& s : report.steps) CHECK(s.passed);
    CHECK(report.steps[0].detail.find("4 species") != std::string::npos);
    CHECK(canonically_equal(report.final_network, plan.target));
    CHECK(report.conclusion.find("nondegenerate") != std::string::npos);
    CHECK(report.conclusion.find("16 moves") != std::string::npos);
}

TEST_CASE("plan verification reports a mismatched target") {
    LiftingPlan plan = load_lifting_plan(kDataDir + "/vegfr/vegfr.plan");
    plan.target = load_network(kDataDir + "/vegfr/net3.crn");
    PlanReport report = verify_lifting_plan(plan);
    CHECK_FALSE(report.passed());
    CHECK_FALSE(report.target_matched);
    for (const auto& s : report.steps) CHECK(s.passed);  // the moves themselves are fine
}

TEST_CASE("plan verification reports a failing step") {
    // Rank-one seed: the span misses the transmutation vector (-1, 1).
    LiftingPlan plan;
    plan.seed = parse_network("X1 + X2 -> 0\n");
    plan.target = plan.seed;
    LiftStep step;
    step.kind = LiftKind::AddDependentReaction;
    step.reaction_text = "X1 -> X2";
    plan.steps.push_back(step);
    PlanReport report = verify_lifting_plan(plan);
    CHECK_FALSE(report.passed());
    REQUIRE(report.steps.size() == 1);
    CHECK_FALSE(report.steps[0].passed);
    CHECK(report.steps[0].detail.find("stoichiometric span") != std::string::npos);
    CHECK(report.conclusion.find("fails at step 1") != std::string::npos);
}

TEST_CASE("apply_step resolves reaction text against the current species") {
    ReactionNetwork net = parse_network("A + B -> 0\nA <-> 0\nB <-> 0\n");
    LiftStep step;
    step.kind = LiftKind::AddDependentReaction;
    step.reaction_text = "0 -> A + B";
    ReactionNetwork grown = apply_step(net, step);
    CHECK(grown.reaction_count() == 6);

    step.reaction_text = "C -> A";
    CHECK_THROWS_AS(apply_step(net, step), std::invalid_argument);

    step.reaction_text = "A -> B\nB -> A";
    CHECK_THROWS_AS(apply_step(net, step), std::invalid_argument);
}
