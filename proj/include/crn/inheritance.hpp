#ifndef CRN_INHERITANCE_HPP
#define CRN_INHERITANCE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/network.hpp"

namespace crn {

/// Thrown when a dependent reaction's vector is outside the stoichiometric span.
class MembershipFailed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Adds 0 -> X and X -> 0 for every species missing them; idempotent.
ReactionNetwork add_all_flows(const ReactionNetwork& net);

/// Where and how a new species enters an existing reaction. Zero coefficients
/// leave the corresponding side untouched. `reaction` is a 0-based index; the
/// plan file format counts from 1.
struct SpeciesInsertion {
    int reaction = 0;
    std::int64_t source_coeff = 0;
    std::int64_t target_coeff = 0;
};

/// Inserts a brand-new species into the listed reactions and appends its
/// outflow and inflow. Rejects existing names, out-of-range indices, negative
/// coefficients, and insertions that make a reaction trivial.
ReactionNetwork add_species_with_flow(const ReactionNetwork& net, const std::string& name,
                                      const std::vector<SpeciesInsertion>& insertions);

/// Appends a reaction whose vector (target - source) lies in the column span
/// of the stoichiometric matrix; exact membership test. Throws
/// MembershipFailed otherwise.
ReactionNetwork add_dependent_reaction(const ReactionNetwork& net, const Reaction& r);

/// Species are named, reaction indices are 0-based positions in the original
/// reaction list (the CLI counts from 1).
struct EmbeddingSpec {
    std::vector<std::string> removed_species;
    std::vector<int> removed_reactions;
};

/// Removes the listed reactions, erases the listed species from every
/// remaining complex, then drops reactions that became trivial and collapses
/// duplicates.
ReactionNetwork embed_network(const ReactionNetwork& net, const EmbeddingSpec& spec);

/// Rate-free normal form: species sorted by name, reactions sorted by
/// (source, target). Two networks describe the same reaction system exactly
/// when their canonical forms compare equal.
ReactionNetwork canonical_form(const ReactionNetwork& net);
bool canonically_equal(const ReactionNetwork& a, const ReactionNetwork& b);

enum class LiftKind { AddAllFlows, AddSpeciesWithFlow, AddDependentReaction };

struct LiftStep {
    LiftKind kind = LiftKind::AddAllFlows;
    std::string species;                       // AddSpeciesWithFlow only
    std::vector<SpeciesInsertion> insertions;  // AddSpeciesWithFlow only
    std::string reaction_text;                 // AddDependentReaction, resolved when applied
    std::string text;                          // source line, used in reports
};

std::string describe(const LiftStep& step);

/// Ordered moves from a seed network to a claimed target network.
struct LiftingPlan {
    ReactionNetwork seed;
    ReactionNetwork target;
    std::vector<LiftStep> steps;
    std::string seed_path;
    std::string target_path;
};

/// Plan text, one directive per line ("#" comments allowed):
///   seed <path>           network file, relative to base_dir
///   target <path>
///   add-flows
///   add-species <name> [into <k> [as-source <c>] [as-product <c>]]...
///   add-reaction <reaction>
/// Reaction indices <k> count from 1 over the reaction list at that step.
LiftingPlan parse_lifting_plan(const std::string& text, const std::string& base_dir);
LiftingPlan load_lifting_plan(const std::string& path);

/// Applies one step; throws on any violated precondition.
ReactionNetwork apply_step(const ReactionNetwork& net, const LiftStep& step);

struct PlanStepResult {
    std::string description;
    bool passed = false;
    std::string detail;
};

struct PlanReport {
    std::vector<PlanStepResult> steps;
    bool target_matched = false;
    ReactionNetwork final_network;
    std::string conclusion;
    bool passed() const;
};

/// Replays the plan step by step, checking every precondition, then compares
/// the result with the target in canonical form. When the seed is certified
/// nondegenerately multistationary the conclusion states that the target
/// inherits that property through the verified moves.
PlanReport verify_lifting_plan(const LiftingPlan& plan);

}  // namespace crn

#endif
