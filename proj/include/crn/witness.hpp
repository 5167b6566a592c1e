#ifndef CRN_WITNESS_HPP
#define CRN_WITNESS_HPP

#include <string>
#include <vector>

#include "crn/cst.hpp"
#include "crn/injectivity.hpp"
#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn {

/// Two distinct positive steady states for an all-transmutation cycle made
/// open through a single inflow/outflow pair on the first species. Rates are
/// carried both in `rates` (k_1..k_n, l_1, f_1) and on the network reactions.
/// When a state coordinate is not an exact radical the chain is evaluated to
/// high precision instead and `exact` is false; residuals are then bounded by
/// 10^-30 rather than identically zero.
struct TwoStateWitness {
    CstStructure structure;  // rotated so the cycle starts at a coefficient > 1
    ReactionNetwork network;
    RationalVector rates;
    RationalVector state_a;
    RationalVector state_b;
    bool exact = true;
};

/// Residual bound promised by numeric (non-exact) witnesses.
Rational numeric_residual_bound();

/// Builds the witness for an all-transmutation cycle: rotates the cycle to
/// start at the first coefficient a_i > 1, fixes k_1 = 1/(a_1 (prod b / prod a
/// - 1)), k_2..k_n = 1, l_1 = 2^{a_1} - 1, f_1 = 2^{a_1} - 2, and follows the
/// steady-state chain from x_1 = 1 and x_1 = 2, taking a_i-th roots exactly
/// when possible. Requires s = 0, some a_i > 1, prod a < prod b.
TwoStateWitness construct_transmutation_witness(const CstStructure& st);

/// prod_{i>=2} a_i^2 v_i(x) * (l_1 - a_1 v_1(x) / k_1), the quantity whose
/// sign decides nondegeneracy of a witness state; exact.
Rational nondegeneracy_quantity(const TwoStateWitness& w, const RationalVector& x);

struct WitnessCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct WitnessReport {
    std::vector<WitnessCheck> checks;
    bool passed() const;
};

/// Recomputes everything the witness claims: states positive and distinct,
/// residuals zero (or within the numeric bound), the degeneracy-excluding
/// quantity prod_{i>=2} a_i^2 v_i * (l_1 - a_1 v_1 / k_1) nonzero at both
/// states, and both states in one compatibility class.
WitnessReport verify_two_state_witness(const TwoStateWitness& w);

/// Diagonal scaling D = diag(d_1..d_n, eps,...,eps) making the fully open
/// cycle pass the signed-determinant and row-sum test, together with the
/// values the test produced.
struct DeterminantCertificate {
    CstStructure structure;  // rotated so the last cycle reaction sequesters
    ReactionNetwork network;
    RationalVector d1;       // d_i = (b_1...b_i)/(a_1...a_i)
    Rational epsilon;
    int halvings = 0;        // epsilon = 2^-halvings
    Rational det_value;
    RationalVector row_sums;
};

/// Searches eps = 1, 1/2, 1/4, ... (at most 60 halvings) for a scaling that
/// passes craciun_certificate_check on the fully open network. Requires an
/// even, positive number of sequestrations with s < n, prod a < prod b, and a
/// fully open input cycle.
DeterminantCertificate construct_sequestration_certificate(const CstStructure& st);

/// Re-runs the signed-determinant test on a certificate's own data.
CertificateCheck verify_determinant_certificate(const DeterminantCertificate& cert);

}  // namespace crn

#endif
