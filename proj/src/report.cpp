#include "crn/report.hpp"

#include <sstream>

#include "crn/parse.hpp"

namespace crn {

AnalysisReport analyze(const ReactionNetwork& net) {
    AnalysisReport report;
    report.network = net;
    report.openness = classify_openness(net);
    report.mass_action = injective_mass_action(net);
    report.general = injective_general(net);
    std::string reason;
    report.cst = recognize_cst(net, &reason);
    report.not_cst_reason = reason;
    if (!report.cst) return report;
    report.verdict = classify_cst(*report.cst);
    if (report.verdict->multistationary != Multistationarity::Yes) return report;
    try {
        if (report.cst->s_count() == 0) {
            report.witness = construct_transmutation_witness(*report.cst);
            report.witness_report = verify_two_state_witness(*report.witness);
        } else {
            report.certificate = construct_sequestration_certificate(*report.cst);
        }
    } catch (const std::exception& e) {
        report.construction_note = e.what();
    }
    return report;
}

namespace {

nlohmann::json rational_array(const RationalVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(format_rational(v(i)));
    return out;
}

nlohmann::json name_array(const ReactionNetwork& net, const std::vector<int>& indices) {
    nlohmann::json out = nlohmann::json::array();
    for (int i : indices) out.push_back(net.species_name(i));
    return out;
}

}  // namespace

nlohmann::json to_json(const ReactionNetwork& net) {
    nlohmann::json reactions = nlohmann::json::array();
    for (const Reaction& r : net.reactions()) reactions.push_back(format_reaction(net, r));
    return {{"species", net.species()}, {"reactions", reactions}};
}

nlohmann::json to_json(const Openness& o, const ReactionNetwork& net) {
    return {{"tag", to_string(o.tag)},
            {"inflow_species", name_array(net, o.inflow_species)},
            {"outflow_species", name_array(net, o.outflow_species)}};
}

nlohmann::json to_json(const InjectivityVerdict& v) {
    nlohmann::json evidence = nlohmann::json::array();
    for (const MinorEvidence& e : v.evidence)
        evidence.push_back({{"rows", e.rows}, {"cols", e.cols}, {"sign", e.sign}});
    return {{"kinetics", v.kinetics == Kinetics::MassAction ? "mass-action" : "general"},
            {"injective", v.injective},
            {"exact", v.exact},
            {"reason", v.reason},
            {"evidence", evidence}};
}

nlohmann::json to_json(const CstStructure& st) {
    return {{"species", st.species},
            {"kinds", st.kinds_string()},
            {"a", st.a},
            {"b", st.b},
            {"s", st.s_count()},
            {"t", st.t_count()},
            {"prod_a", st.prod_a().str()},
            {"prod_b", st.prod_b().str()},
            {"openness", to_string(st.openness.tag)}};
}

nlohmann::json to_json(const CstVerdict& v) {
    nlohmann::json out = {{"injective_mass_action", v.injective_mass_action},
                          {"injective_general", v.injective_general},
                          {"multistationary", to_string(v.multistationary)},
                          {"rule", v.rule}};
    if (v.nondegenerate) out["nondegenerate"] = *v.nondegenerate;
    return out;
}

nlohmann::json to_json(const TwoStateWitness& w) {
    const int n = w.structure.n();
    nlohmann::json k = nlohmann::json::array();
    for (int i = 0; i < n; ++i) k.push_back(format_rational(w.rates(i)));
    nlohmann::json out = {{"network", to_json(w.network)},
                          {"rates",
                           {{"k", k},
                            {"l1", format_rational(w.rates(n))},
                            {"f1", format_rational(w.rates(n + 1))}}},
                          {"state_a", rational_array(w.state_a)},
                          {"state_b", rational_array(w.state_b)},
                          {"exact", w.exact}};
    if (!w.exact) out["residual_bound"] = format_rational(numeric_residual_bound());
    return out;
}

nlohmann::json to_json(const WitnessReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const WitnessCheck& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"passed", r.passed()}, {"checks", checks}};
}

nlohmann::json to_json(const DeterminantCertificate& c) {
    return {{"network", to_json(c.network)},
            {"d1", rational_array(c.d1)},
            {"epsilon", format_rational(c.epsilon)},
            {"halvings", c.halvings},
            {"determinant", format_rational(c.det_value)},
            {"row_sums", rational_array(c.row_sums)}};
}

nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json out = {{"schema", 1},
                          {"kind", "analysis"},
                          {"network", to_json(r.network)},
                          {"openness", to_json(r.openness, r.network)},
                          {"injectivity",
                           {{"mass_action", to_json(r.mass_action)},
                            {"general", to_json(r.general)}}}};
    if (r.cst) {
        out["cst"] = to_json(*r.cst);
        out["cst"]["recognized"] = true;
    } else {
        out["cst"] = {{"recognized", false}, {"reason", r.not_cst_reason}};
    }
    if (r.verdict) out["verdict"] = to_json(*r.verdict);
    if (r.witness) out["witness"] = to_json(*r.witness);
    if (r.witness_report) out["witness_verification"] = to_json(*r.witness_report);
    if (r.certificate) out["certificate"] = to_json(*r.certificate);
    if (!r.construction_note.empty()) out["construction_note"] = r.construction_note;
    return out;
}

nlohmann::json to_json(const PlanReport& r) {
    nlohmann::json steps = nlohmann::json::array();
    for (const PlanStepResult& s : r.steps)
        steps.push_back({{"description", s.description}, {"passed", s.passed}, {"detail", s.detail}});
    return {{"schema", 1},
            {"kind", "lift"},
            {"steps", steps},
            {"target_matched", r.target_matched},
            {"passed", r.passed()},
            {"final_network", to_json(r.final_network)},
            {"conclusion", r.conclusion}};
}

namespace {

std::string paint(const std::string& text, const char* code, bool color) {
    if (!color) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string yes_no(bool value, bool color) {
    return paint(value ? "yes" : "no", value ? "32" : "31", color);
}

std::string mark(bool passed, bool color) {
    return passed ? paint("[ok]", "32", color) : paint("[FAIL]", "31", color);
}

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (const std::string& name : names) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

std::string join_rationals(const RationalVector& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v(i));
    }
    return out;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

void append_witness_text(std::ostringstream& out, const TwoStateWitness& w, bool color) {
    const int n = w.structure.n();
    RationalVector k = w.rates.head(n);
    out << "witness: two " << (w.exact ? "exact" : "numeric") << " steady states\n"
        << "  rates: k = " << join_rationals(k) << "; l1 = " << format_rational(w.rates(n))
        << "; f1 = " << format_rational(w.rates(n + 1)) << "\n"
        << "  state_a = (" << join_rationals(w.state_a) << ")\n"
        << "  state_b = (" << join_rationals(w.state_b) << ")\n";
    if (!w.exact)
        out << "  residuals bounded by 10^-30 in absolute value\n";
    (void)color;
}

}  // namespace

std::string human_text(const AnalysisReport& r, bool color) {
    std::ostringstream out;
    out << "network: " << r.network.species_count() << " species, "
        << r.network.reaction_count() << " reactions, " << to_string(r.openness.tag) << "\n";
    out << "species: " << join_names(r.network.species()) << "\n";
    if (r.cst) {
        out << "cycle: " << join_names(r.cst->species) << " (kinds " << r.cst->kinds_string()
            << ", a = " << join_ints(r.cst->a) << ", b = " << join_ints(r.cst->b)
            << ", s = " << r.cst->s_count() << ", t = " << r.cst->t_count() << ")\n";
    } else {
        out << "cycle: not recognized (" << r.not_cst_reason << ")\n";
    }
    out << "injective, minor test (mass action): " << yes_no(r.mass_action.injective, color)
        << "\n";
    out << "injective, minor test (general kinetics): " << yes_no(r.general.injective, color)
        << (r.general.exact ? "" : " (conservative)") << "\n";
    if (r.verdict) {
        out << "classification: injective (mass action) "
            << yes_no(r.verdict->injective_mass_action, color) << ", injective (general) "
            << yes_no(r.verdict->injective_general, color) << "\n";
        out << "multistationary: " << paint(to_string(r.verdict->multistationary), "1", color);
        if (r.verdict->nondegenerate)
            out << (*r.verdict->nondegenerate ? " (nondegenerate)" : " (degenerate)");
        out << "\n";
        out << "rule: " << r.verdict->rule << "\n";
    }
    if (r.witness) append_witness_text(out, *r.witness, color);
    if (r.witness_report)
        out << "witness verification: " << mark(r.witness_report->passed(), color) << " ("
            << r.witness_report->checks.size() << " checks)\n";
    if (r.certificate) {
        const DeterminantCertificate& c = *r.certificate;
        out << "certificate: D1 = diag(" << join_rationals(c.d1)
            << "), epsilon = " << format_rational(c.epsilon) << " (" << c.halvings
            << " halvings)\n";
        out << "  determinant = " << format_rational(c.det_value) << ", row sums = ("
            << join_rationals(c.row_sums) << ")\n";
    }
    if (!r.construction_note.empty())
        out << "evidence construction failed: " << r.construction_note << "\n";
    return out.str();
}

std::string human_text(const PlanReport& r, bool color) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const PlanStepResult& s = r.steps[i];
        out << "step " << (i + 1) << ": " << s.description << "  " << mark(s.passed, color);
        if (!s.detail.empty()) out << " " << s.detail;
        out << "\n";
    }
    if (r.steps.empty() || r.steps.back().passed)
        out << "target: " << (r.target_matched ? "matched" : paint("not matched", "31", color))
            << "\n";
    out << "conclusion: " << r.conclusion << "\n";
    return out.str();
}

std::string human_text(const WitnessReport& r, bool color) {
    std::ostringstream out;
    for (const WitnessCheck& c : r.checks) {
        out << mark(c.passed, color) << " " << c.name;
        if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
        out << "\n";
    }
    out << (r.passed() ? "all checks passed" : "verification failed") << "\n";
    return out.str();
}

}  // namespace crn
