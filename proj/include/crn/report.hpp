#ifndef CRN_REPORT_HPP
#define CRN_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "crn/cst.hpp"
#include "crn/dynamics.hpp"
#include "crn/inheritance.hpp"
#include "crn/injectivity.hpp"
#include "crn/network.hpp"
#include "crn/witness.hpp"

namespace crn {

/// Everything the analyze command derives from one network: openness, both
/// minor-test injectivity verdicts, cycle recognition, the classified verdict,
/// and, for a multistationary verdict, the constructed evidence.
struct AnalysisReport {
    ReactionNetwork network;
    Openness openness;
    InjectivityVerdict mass_action;
    InjectivityVerdict general;
    std::optional<CstStructure> cst;
    std::string not_cst_reason;
    std::optional<CstVerdict> verdict;
    std::optional<TwoStateWitness> witness;
    std::optional<WitnessReport> witness_report;
    std::optional<DeterminantCertificate> certificate;
    std::string construction_note;  // set when evidence construction failed
};

AnalysisReport analyze(const ReactionNetwork& net);

/// JSON records all carry {"schema": 1, "kind": ...}; rationals are exact
/// decimal-free strings, so emit -> parse -> emit is a fixpoint.
nlohmann::json to_json(const ReactionNetwork& net);
nlohmann::json to_json(const Openness& o, const ReactionNetwork& net);
nlohmann::json to_json(const InjectivityVerdict& v);
nlohmann::json to_json(const CstStructure& st);
nlohmann::json to_json(const CstVerdict& v);
nlohmann::json to_json(const TwoStateWitness& w);
nlohmann::json to_json(const WitnessReport& r);
nlohmann::json to_json(const DeterminantCertificate& c);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const PlanReport& r);

std::string human_text(const AnalysisReport& r, bool color);
std::string human_text(const PlanReport& r, bool color);
std::string human_text(const WitnessReport& r, bool color);

}  // namespace crn

#endif
