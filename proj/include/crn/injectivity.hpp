#ifndef CRN_INJECTIVITY_HPP
#define CRN_INJECTIVITY_HPP

#include <string>
#include <vector>

#include "crn/network.hpp"

namespace crn {

enum class Kinetics { MassAction, General };

/// One inspected minor pair: row set, column set, and the sign contribution
/// (for mass action the sign of the minor product; for general kinetics an
/// achievable sign of it).
struct MinorEvidence {
    std::vector<int> rows;
    std::vector<int> cols;
    int sign = 0;
};

struct InjectivityVerdict {
    Kinetics kinetics = Kinetics::MassAction;
    bool injective = false;
    /// Mass action is always exact. For general kinetics the verdict is exact
    /// when every sign set met alongside a nonzero stoichiometric minor was a
    /// singleton; otherwise it is conservative.
    bool exact = true;
    /// A nonzero witness when injective; a conflicting pair when not.
    std::vector<MinorEvidence> evidence;
    std::string reason;
};

/// Sign condition on products of r x r minors of the stoichiometric and
/// source matrices, r = rank of the full stoichiometric matrix, all reactions
/// included: injective iff all nonzero products share one sign and at least
/// one is nonzero.
InjectivityVerdict injective_mass_action(const ReactionNetwork& net);

/// Same test quantified over every matrix sharing the source matrix's sign
/// pattern, via achievable sign sets of its minors.
InjectivityVerdict injective_general(const ReactionNetwork& net);

/// Degenerate-direction certificate check on a fully open network. Inflow
/// reactions are omitted; d scales the retained reactions in network order.
/// Passes iff (-1)^n det(G D Gl^T) < 0 and the row sums of G D are <= 0,
/// where G, Gl are the retained stoichiometric and source matrices.
struct CertificateCheck {
    bool passed = false;
    Rational determinant;       // det(G D Gl^T)
    RationalVector row_sums;    // G D 1
    std::string failure;        // empty when passed
};

CertificateCheck craciun_certificate_check(const ReactionNetwork& net, const RationalVector& d);

}  // namespace crn

#endif
