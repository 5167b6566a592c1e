#ifndef CRN_NETWORK_HPP
#define CRN_NETWORK_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

/// Formal nonnegative integer combination of species; only positive
/// coefficients are stored, so the empty map is the zero complex.
class Complex {
  public:
    Complex() = default;

    void set(int species, std::int64_t coeff);
    std::int64_t coeff(int species) const;
    bool empty() const { return terms_.empty(); }
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    /// True for a single species with coefficient 1.
    bool is_unit() const { return terms_.size() == 1 && terms_.begin()->second == 1; }

    Complex renumbered(const std::vector<int>& species_map) const;
    /// Drops the listed species; remaining indices are left untouched.
    Complex without(const std::vector<bool>& removed) const;

    bool operator==(const Complex&) const = default;
    auto operator<=>(const Complex&) const = default;

  private:
    std::map<int, std::int64_t> terms_;
};

struct Reaction {
    Complex source;
    Complex target;
    std::optional<Rational> rate;  // positive when present

    bool is_inflow() const { return source.empty() && target.is_unit(); }
    bool is_outflow() const { return target.empty() && source.is_unit(); }
    bool is_flow() const { return is_inflow() || is_outflow(); }
    bool is_trivial() const { return source == target; }

    bool operator==(const Reaction&) const = default;
};

/// Species list plus reaction list. Construction canonicalizes: species are
/// reordered to first appearance across the reaction list (source before
/// target, complexes in index order), unreferenced species are dropped,
/// duplicate reactions (same source and target) are silently removed keeping
/// the first, and trivial reactions are rejected.
class ReactionNetwork {
  public:
    ReactionNetwork() = default;
    ReactionNetwork(std::vector<std::string> species, std::vector<Reaction> reactions);

    const std::vector<std::string>& species() const { return species_; }
    const std::vector<Reaction>& reactions() const { return reactions_; }
    int species_count() const { return static_cast<int>(species_.size()); }
    int reaction_count() const { return static_cast<int>(reactions_.size()); }

    const std::string& species_name(int i) const { return species_.at(static_cast<std::size_t>(i)); }
    int species_index(const std::string& name) const;  // -1 when absent

    bool operator==(const ReactionNetwork&) const = default;

  private:
    std::vector<std::string> species_;
    std::vector<Reaction> reactions_;
};

enum class OpennessTag { Closed, OpenNoOutflows, OpenWithOutflows, FullyOpen };

struct Openness {
    OpennessTag tag = OpennessTag::Closed;
    std::vector<int> inflow_species;   // sorted, deduplicated
    std::vector<int> outflow_species;  // sorted, deduplicated
};

const char* to_string(OpennessTag tag);

/// Stoichiometric matrix (columns target - source) and source matrix
/// (columns are source vectors), one column per reaction, exact entries.
struct NetworkMatrices {
    RationalMatrix stoichiometric;
    RationalMatrix source;
};

NetworkMatrices build_matrices(const ReactionNetwork& net);
RationalMatrix stoichiometric_matrix(const ReactionNetwork& net);
RationalMatrix source_matrix(const ReactionNetwork& net);

Openness classify_openness(const ReactionNetwork& net);

/// Canonical basis of left-kernel vectors of the stoichiometric matrix,
/// one conserved quantity per row.
RationalMatrix conservation_laws(const ReactionNetwork& net);

/// #distinct complexes - #linkage classes - rank of the stoichiometric matrix.
int deficiency(const ReactionNetwork& net);

/// True when y - x lies in the column span of the stoichiometric matrix.
bool same_compatibility_class(const ReactionNetwork& net, const RationalVector& x, const RationalVector& y);

}  // namespace crn

#endif
