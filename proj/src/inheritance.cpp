#include "crn/inheritance.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "crn/cst.hpp"
#include "crn/linalg.hpp"
#include "crn/parse.hpp"
#include "crn/rational.hpp"

namespace crn {

ReactionNetwork add_all_flows(const ReactionNetwork& net) {
    std::vector<Reaction> reactions = net.reactions();
    for (int i = 0; i < net.species_count(); ++i) {
        Reaction outflow;
        outflow.source.set(i, 1);
        Reaction inflow;
        inflow.target.set(i, 1);
        reactions.push_back(outflow);
        reactions.push_back(inflow);
    }
    return ReactionNetwork(net.species(), std::move(reactions));
}

ReactionNetwork add_species_with_flow(const ReactionNetwork& net, const std::string& name,
                                      const std::vector<SpeciesInsertion>& insertions) {
    if (net.species_index(name) >= 0)
        throw std::invalid_argument("species already present: " + name);
    std::vector<std::string> species = net.species();
    species.push_back(name);
    const int fresh = net.species_count();
    std::vector<Reaction> reactions = net.reactions();
    std::set<int> touched;
    for (const SpeciesInsertion& ins : insertions) {
        if (ins.reaction < 0 || ins.reaction >= net.reaction_count())
            throw std::invalid_argument("insertion reaction index out of range");
        if (ins.source_coeff < 0 || ins.target_coeff < 0)
            throw std::invalid_argument("insertion coefficients must be nonnegative");
        Reaction& r = reactions[static_cast<std::size_t>(ins.reaction)];
        if (ins.source_coeff > 0) r.source.set(fresh, r.source.coeff(fresh) + ins.source_coeff);
        if (ins.target_coeff > 0) r.target.set(fresh, r.target.coeff(fresh) + ins.target_coeff);
        touched.insert(ins.reaction);
    }
    for (int idx : touched)
        if (reactions[static_cast<std::size_t>(idx)].is_trivial())
            throw std::invalid_argument("inserting " + name + " makes reaction " +
                                        std::to_string(idx + 1) + " trivial");
    Reaction outflow;
    outflow.source.set(fresh, 1);
    Reaction inflow;
    inflow.target.set(fresh, 1);
    reactions.push_back(outflow);
    reactions.push_back(inflow);
    return ReactionNetwork(std::move(species), std::move(reactions));
}

ReactionNetwork add_dependent_reaction(const ReactionNetwork& net, const Reaction& r) {
    if (r.is_trivial()) throw std::invalid_argument("dependent reaction is trivial");
    for (const Complex* side : {&r.source, &r.target})
        for (const auto& [species, coeff] : side->terms())
            if (species < 0 || species >= net.species_count())
                throw std::invalid_argument("dependent reaction uses an unknown species index");
    RationalVector vec = RationalVector::Zero(net.species_count());
    for (const auto& [species, coeff] : r.target.terms()) vec(species) += coeff;
    for (const auto& [species, coeff] : r.source.terms()) vec(species) -= coeff;
    if (!in_column_span(stoichiometric_matrix(net), vec))
        throw MembershipFailed("reaction vector of " + format_reaction(net, r) +
                               " lies outside the stoichiometric span");
    std::vector<Reaction> reactions = net.reactions();
    reactions.push_back(r);
    return ReactionNetwork(net.species(), std::move(reactions));
}

ReactionNetwork embed_network(const ReactionNetwork& net, const EmbeddingSpec& spec) {
    std::vector<bool> species_removed(static_cast<std::size_t>(net.species_count()), false);
    for (const std::string& name : spec.removed_species) {
        const int idx = net.species_index(name);
        if (idx < 0) throw std::invalid_argument("unknown species: " + name);
        species_removed[static_cast<std::size_t>(idx)] = true;
    }
    std::vector<bool> reaction_removed(static_cast<std::size_t>(net.reaction_count()), false);
    for (int idx : spec.removed_reactions) {
        if (idx < 0 || idx >= net.reaction_count())
            throw std::invalid_argument("reaction index out of range: " + std::to_string(idx));
        reaction_removed[static_cast<std::size_t>(idx)] = true;
    }
    std::vector<Reaction> kept;
    for (int i = 0; i < net.reaction_count(); ++i) {
        if (reaction_removed[static_cast<std::size_t>(i)]) continue;
        Reaction r = net.reactions()[static_cast<std::size_t>(i)];
        r.source = r.source.without(species_removed);
        r.target = r.target.without(species_removed);
        if (r.is_trivial()) continue;
        kept.push_back(std::move(r));
    }
    return ReactionNetwork(net.species(), std::move(kept));
}

ReactionNetwork canonical_form(const ReactionNetwork& net) {
    const int n = net.species_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return net.species_name(x) < net.species_name(y); });
    std::vector<std::string> names;
    std::vector<int> species_map(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        names.push_back(net.species_name(order[static_cast<std::size_t>(pos)]));
        species_map[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    }
    std::vector<Reaction> reactions;
    for (const Reaction& r : net.reactions()) {
        Reaction mapped;
        mapped.source = r.source.renumbered(species_map);
        mapped.target = r.target.renumbered(species_map);
        reactions.push_back(std::move(mapped));
    }
    std::sort(reactions.begin(), reactions.end(), [](const Reaction& x, const Reaction& y) {
        return x.source != y.source ? x.source < y.source : x.target < y.target;
    });
    return ReactionNetwork(std::move(names), std::move(reactions));
}

bool canonically_equal(const ReactionNetwork& a, const ReactionNetwork& b) {
    return canonical_form(a) == canonical_form(b);
}

std::string describe(const LiftStep& step) {
    if (!step.text.empty()) return step.text;
    switch (step.kind) {
        case LiftKind::AddAllFlows:
            return "add-flows";
        case LiftKind::AddSpeciesWithFlow: {
            std::string out = "add-species " + step.species;
            for (const SpeciesInsertion& ins : step.insertions) {
                out += " into " + std::to_string(ins.reaction + 1);
                if (ins.source_coeff > 0) out += " as-source " + std::to_string(ins.source_coeff);
                if (ins.target_coeff > 0) out += " as-product " + std::to_string(ins.target_coeff);
            }
            return out;
        }
        case LiftKind::AddDependentReaction:
            return "add-reaction " + step.reaction_text;
    }
    return "";
}

namespace {

std::string strip(const std::string& line) {
    std::string out = line.substr(0, line.find('#'));
    const auto begin = out.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    return out.substr(begin, out.find_last_not_of(" \t\r") - begin + 1);
}

std::int64_t plan_integer(const std::string& token, int line_no, const char* what) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || value < 0)
        throw ParseError(std::string("expected a nonnegative integer ") + what + ", got \"" +
                             token + "\"",
                         line_no, 1);
    return value;
}

}  // namespace

LiftingPlan parse_lifting_plan(const std::string& text, const std::string& base_dir) {
    LiftingPlan plan;
    bool have_seed = false;
    bool have_target = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream words(line);
        std::string directive;
        words >> directive;
        if (directive == "seed" || directive == "target") {
            std::string path;
            words >> path;
            std::string rest;
            if (path.empty() || (words >> rest))
                throw ParseError(directive + " takes exactly one path", line_no, 1);
            const std::string full = (std::filesystem::path(base_dir) / path).string();
            (directive == "seed" ? plan.seed : plan.target) = load_network(full);
            (directive == "seed" ? plan.seed_path : plan.target_path) = full;
            (directive == "seed" ? have_seed : have_target) = true;
        } else if (directive == "add-flows") {
            std::string rest;
            if (words >> rest) throw ParseError("add-flows takes no arguments", line_no, 1);
            LiftStep step;
            step.kind = LiftKind::AddAllFlows;
            step.text = line;
            plan.steps.push_back(std::move(step));
        } else if (directive == "add-species") {
            LiftStep step;
            step.kind = LiftKind::AddSpeciesWithFlow;
            step.text = line;
            words >> step.species;
            if (step.species.empty())
                throw ParseError("add-species needs a species name", line_no, 1);
            std::string word;
            while (words >> word) {
                if (word != "into")
                    throw ParseError("expected \"into\", got \"" + word + "\"", line_no, 1);
                std::string index_token;
                if (!(words >> index_token))
                    throw ParseError("\"into\" needs a reaction index", line_no, 1);
                SpeciesInsertion ins;
                const std::int64_t index = plan_integer(index_token, line_no, "reaction index");
                if (index < 1) throw ParseError("reaction indices count from 1", line_no, 1);
                ins.reaction = static_cast<int>(index - 1);
                while (true) {
                    const auto next = words.tellg();
                    std::string side;
                    if (!(words >> side)) break;
                    if (side != "as-source" && side != "as-product") {
                        words.clear();
                        words.seekg(next);
                        break;
                    }
                    std::string coeff_token;
                    if (!(words >> coeff_token))
                        throw ParseError("\"" + side + "\" needs a coefficient", line_no, 1);
                    const std::int64_t coeff = plan_integer(coeff_token, line_no, "coefficient");
                    (side == "as-source" ? ins.source_coeff : ins.target_coeff) = coeff;
                }
                step.insertions.push_back(ins);
            }
            plan.steps.push_back(std::move(step));
        } else if (directive == "add-reaction") {
            LiftStep step;
            step.kind = LiftKind::AddDependentReaction;
            step.text = line;
            const auto pos = line.find("add-reaction");
            step.reaction_text = strip(line.substr(pos + std::string("add-reaction").size()));
            if (step.reaction_text.empty())
                throw ParseError("add-reaction needs a reaction", line_no, 1);
            plan.steps.push_back(std::move(step));
        } else {
            throw ParseError("unknown plan directive: " + directive, line_no, 1);
        }
    }
    if (!have_seed) throw ParseError("plan has no seed line", line_no, 1);
    if (!have_target) throw ParseError("plan has no target line", line_no, 1);
    return plan;
}

LiftingPlan load_lifting_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_lifting_plan(buffer.str(),
                                  std::filesystem::path(path).parent_path().string());
    } catch (const ParseError& e) {
        throw ParseError(ParseError::Preformatted{}, path + ": " + e.what(), e.line(),
                         e.column());
    }
}

ReactionNetwork apply_step(const ReactionNetwork& net, const LiftStep& step) {
    switch (step.kind) {
        case LiftKind::AddAllFlows:
            return add_all_flows(net);
        case LiftKind::AddSpeciesWithFlow:
            return add_species_with_flow(net, step.species, step.insertions);
        case LiftKind::AddDependentReaction: {
            const ReactionNetwork mini = parse_network(step.reaction_text);
            if (mini.reaction_count() != 1)
                throw std::invalid_argument("add-reaction takes a single irreversible reaction");
            Reaction r;
            r.rate = mini.reactions().front().rate;
            const Complex* sides[2] = {&mini.reactions().front().source,
                                       &mini.reactions().front().target};
            Complex* mapped[2] = {&r.source, &r.target};
            for (int side = 0; side < 2; ++side)
                for (const auto& [species, coeff] : sides[side]->terms()) {
                    const int idx = net.species_index(mini.species_name(species));
                    if (idx < 0)
                        throw std::invalid_argument("reaction uses a species absent from the network: " +
                                                    mini.species_name(species));
                    mapped[side]->set(idx, coeff);
                }
            return add_dependent_reaction(net, r);
        }
    }
    throw std::logic_error("unhandled lift step kind");
}

bool PlanReport::passed() const {
    return target_matched && std::all_of(steps.begin(), steps.end(),
                                         [](const PlanStepResult& s) { return s.passed; });
}

PlanReport verify_lifting_plan(const LiftingPlan& plan) {
    PlanReport report;
    ReactionNetwork current = plan.seed;
    for (const LiftStep& step : plan.steps) {
        PlanStepResult result;
        result.description = describe(step);
        try {
            current = apply_step(current, step);
        } catch (const std::exception& e) {
            result.detail = e.what();
            report.steps.push_back(std::move(result));
            report.final_network = current;
            report.conclusion =
                "plan fails at step " + std::to_string(report.steps.size()) + ": " + e.what();
            return report;
        }
        result.passed = true;
        result.detail = std::to_string(current.species_count()) + " species, " +
                        std::to_string(current.reaction_count()) + " reactions";
        report.steps.push_back(std::move(result));
    }
    report.final_network = current;
    report.target_matched = canonically_equal(current, plan.target);
    if (!report.target_matched) {
        report.conclusion = "applied steps do not reproduce the target network";
        return report;
    }

    bool nondegenerate_seed = false;
    std::string basis;
    if (auto st = recognize_cst(plan.seed)) {
        const CstVerdict verdict = classify_cst(*st);
        if (verdict.multistationary == Multistationarity::Yes) {
            if (verdict.nondegenerate.value_or(false)) {
                nondegenerate_seed = true;
                basis = verdict.rule;
            } else if (is_sequestration_network(*st)) {
                nondegenerate_seed = true;
                basis = "sequestration cycle of odd length with product coefficient above one; "
                        "its multiple steady states are known nondegenerate";
            }
        }
    }
    std::ostringstream conclusion;
    if (nondegenerate_seed) {
        conclusion << "seed admits multiple nondegenerate positive steady states (" << basis
                   << "); each of the " << plan.steps.size()
                   << " moves preserves nondegenerate multistationarity, so the target admits "
                      "multiple nondegenerate positive steady states as well";
    } else {
        conclusion << "all moves verified; they transfer nondegenerate multistationarity from "
                      "the seed to the target once the seed is so certified";
    }
    report.conclusion = conclusion.str();
    return report;
}

}  // namespace crn
