#include <doctest.h>

#include <string>

#include "crn/parse.hpp"
#include "crn/report.hpp"

using namespace crn;

namespace {

const std::string kDataDir = CRN_TEST_DATA_DIR;

}  // namespace

TEST_CASE("analysis of a transmutation cycle carries a verified witness") {
    AnalysisReport r = analyze(load_network(kDataDir + "/cycles/transmutation_witness.crn"));
    REQUIRE(r.cst.has_value());
    REQUIRE(r.verdict.has_value());
    CHECK(r.verdict->multistationary == Multistationarity::Yes);
    REQUIRE(r.verdict->nondegenerate.has_value());
    CHECK(*r.verdict->nondegenerate);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.witness_report.has_value());
    CHECK(r.witness_report->passed());
    CHECK_FALSE(r.certificate.has_value());
    CHECK(r.construction_note.empty());

    nlohmann::json j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "analysis");
    CHECK(j["cst"]["recognized"] == true);
    CHECK(j["cst"]["kinds"] == "TT");
    CHECK(j["cst"]["prod_a"] == "2");
    CHECK(j["cst"]["prod_b"] == "3");
    CHECK(j["verdict"]["multistationary"] == "yes");
    CHECK(j["verdict"]["nondegenerate"] == true);
    CHECK(j["witness"]["exact"] == true);
    CHECK(j["witness"]["rates"]["l1"] == "3");
    CHECK(j["witness"]["state_b"][1] == "12");
    CHECK(j["witness_verification"]["passed"] == true);
}

TEST_CASE("analysis of a sequestration cycle carries the certificate") {
    AnalysisReport r = analyze(load_network(kDataDir + "/cycles/seq_n3_m2.crn"));
    REQUIRE(r.verdict.has_value());
    CHECK(r.verdict->multistationary == Multistationarity::Yes);
    CHECK_FALSE(r.verdict->nondegenerate.has_value());
    REQUIRE(r.certificate.has_value());
    CHECK_FALSE(r.witness.has_value());

    nlohmann::json j = to_json(r);
    CHECK(j["certificate"]["epsilon"] == "1/8");
    CHECK(j["certificate"]["halvings"] == 3);
    CHECK(j["certificate"]["determinant"] == "823/512");
    CHECK(j["certificate"]["d1"][1] == "2");
    CHECK_FALSE(j["verdict"].contains("nondegenerate"));
    CHECK(j["injectivity"]["mass_action"]["injective"] == false);
}

TEST_CASE("analysis of an unrecognized network records the reason") {
    AnalysisReport r = analyze(load_network(kDataDir + "/cycles/bistable.crn"));
    CHECK_FALSE(r.cst.has_value());
    CHECK_FALSE(r.not_cst_reason.empty());
    CHECK_FALSE(r.verdict.has_value());

    nlohmann::json j = to_json(r);
    CHECK(j["cst"]["recognized"] == false);
    CHECK(j["cst"]["reason"].get<std::string>() == r.not_cst_reason);
    CHECK_FALSE(j.contains("verdict"));
    CHECK(j["injectivity"]["mass_action"]["injective"] == false);
    CHECK(j["injectivity"]["mass_action"]["evidence"].size() >= 2);
}

TEST_CASE("closed cycles report not-applicable multistationarity") {
    AnalysisReport r = analyze(load_network(kDataDir + "/cycles/closed_even_seq.crn"));
    REQUIRE(r.verdict.has_value());
    CHECK(r.verdict->multistationary == Multistationarity::NotApplicable);
    CHECK(to_json(r)["verdict"]["multistationary"] == "not-applicable");
    CHECK(to_json(r)["openness"]["tag"] == "closed");
}

TEST_CASE("json emission is a serialization fixpoint") {
    for (const char* file : {"/cycles/transmutation_witness.crn", "/cycles/seq_n3_m2.crn",
                             "/cycles/bistable.crn", "/vegfr/net1.crn"}) {
        nlohmann::json j = to_json(analyze(load_network(kDataDir + file)));
        const std::string text = j.dump(2);
        CHECK(nlohmann::json::parse(text).dump(2) == text);
    }
}

TEST_CASE("human text honors the color switch") {
    AnalysisReport r = analyze(load_network(kDataDir + "/cycles/transmutation_witness.crn"));
    const std::string plain = human_text(r, false);
    const std::string colored = human_text(r, true);
    CHECK(plain.find("\033[") == std::string::npos);
    CHECK(colored.find("\033[") != std::string::npos);
    CHECK(plain.find("multistationary: yes (nondegenerate)") != std::string::npos);
    CHECK(plain.find("kinds TT") != std::string::npos);
}

TEST_CASE("lift reports serialize with their own kind") {
    LiftingPlan plan = load_lifting_plan(kDataDir + "/vegfr/vegfr.plan");
    PlanReport r = verify_lifting_plan(plan);
    CHECK(r.passed());

    nlohmann::json j = to_json(r);
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "lift");
    CHECK(j["target_matched"] == true);
    CHECK(j["steps"].size() == 16);
    CHECK(j["steps"][0]["passed"] == true);

    const std::string plain = human_text(r, false);
    CHECK(plain.find("conclusion:") != std::string::npos);
    CHECK(plain.find("\033[") == std::string::npos);
}
