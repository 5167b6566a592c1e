#ifndef CRN_CST_HPP
#define CRN_CST_HPP

#include <optional>
#include <string>
#include <vector>

#include "crn/network.hpp"

namespace crn {

enum class ReactionKind : char { Sequestration = 'S', Transmutation = 'T' };

/// A recognized sequestration-transmutation cycle: reaction i consumes
/// species[i] (coefficient a[i]) and either also consumes species[i+1]
/// (sequestration, coefficient b[i+1]) or produces it (transmutation,
/// coefficient b[i+1]), indices mod n. b[i] is the coefficient of species[i]
/// in reaction i-1. The cycle starts at the lexicographically smallest
/// species name.
struct CstStructure {
    std::vector<std::string> species;
    std::vector<ReactionKind> kinds;
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    std::vector<int> reaction_index;  // position of cycle reaction i in the analyzed network
    Openness openness;

    int n() const { return static_cast<int>(species.size()); }
    int s_count() const;
    int t_count() const;
    Integer prod_a() const;
    Integer prod_b() const;
    std::string kinds_string() const;  // e.g. "SST"
};

/// Flow reactions are set aside, every remaining reaction must be a two-species
/// sequestration or transmutation, and together they must form one directed
/// Hamiltonian cycle over all non-flow species. Returns the canonical structure
/// or nullopt with a reason ("species appears only in flow reactions",
/// "reactions do not form a single cycle", ...). Cycles need n >= 2.
std::optional<CstStructure> recognize_cst(const ReactionNetwork& net, std::string* reason = nullptr);

/// Same cycle, restarted at cycle position offset.
CstStructure rotated(const CstStructure& st, int offset);

/// Cycle reactions only, species in cycle order, no rates.
ReactionNetwork core_network(const CstStructure& st);

/// Core plus an outflow/inflow pair for each listed cycle position.
ReactionNetwork with_flows(const CstStructure& st, const std::vector<int>& flow_positions);

/// Core plus flows for every species; reaction order is the n cycle reactions,
/// then all outflows, then all inflows.
ReactionNetwork fully_open_network(const CstStructure& st);

/// Exactly one transmutation, every consumption coefficient one, and every
/// product coefficient one except possibly the transmutation's. Multistationary
/// sequestration networks are known to have nondegenerate steady states.
bool is_sequestration_network(const CstStructure& st);

enum class Multistationarity { Yes, No, Unknown, NotApplicable };
const char* to_string(Multistationarity m);

struct CstVerdict {
    bool injective_mass_action = false;
    bool injective_general = false;
    Multistationarity multistationary = Multistationarity::Unknown;
    std::optional<bool> nondegenerate;  // set only for the explicit two-state branch
    std::string rule;                   // which branch decided
};

/// Decision table over (openness, n, s, prod a, prod b):
/// closed or no outflows: injective for general kinetics unless the cycle is
/// all sequestrations of even length with unequal products; always injective
/// under mass action; multistationarity not applicable. With outflows:
/// injective under mass action iff s = n, s odd, or prod a >= prod b; when not
/// injective, partially open verdicts stay unknown, fully open ones split into
/// multistationary (s > 0), nondegenerately multistationary (s = 0, some
/// a_i > 1) and not multistationary (s = 0, all a_i = 1).
CstVerdict classify_cst(const CstStructure& st);

}  // namespace crn

#endif
