#ifndef CRN_DYNAMICS_HPP
#define CRN_DYNAMICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn {

/// Thrown when the adaptive integrator cannot make progress (step-size
/// underflow, usually a sign of stiffness beyond the method's reach).
class SimulationError : public std::runtime_error {
  public:
    explicit SimulationError(const std::string& message) : std::runtime_error(message) {}
};

/// Mass-action rates v_j = k_j * prod_i x_i^{s_ij} where s is the source
/// matrix. Exact for rational inputs; inflow reactions have an empty source,
/// so their rate is the bare constant.
RationalVector mass_action_rates(const ReactionNetwork& net, const RationalVector& k,
                                 const RationalVector& x);

/// Float twin of mass_action_rates for the integrator hot path.
Eigen::VectorXd mass_action_rates(const ReactionNetwork& net, const Eigen::VectorXd& k,
                                  const Eigen::VectorXd& x);

/// Right-hand side of the mass-action ODE: stoichiometric matrix times v(x).
RationalVector residual(const ReactionNetwork& net, const RationalVector& k,
                        const RationalVector& x);

/// Jacobian of the vector field at a strictly positive state, computed as
/// G diag(v(x)) G_l^T diag(1/x). Inflow reactions carry a zero column of
/// G_l, so they drop out on their own.
RationalMatrix jacobian(const ReactionNetwork& net, const RationalVector& k,
                        const RationalVector& x);

/// Sum of the r-by-r principal minors of the Jacobian, r = rank of the
/// stoichiometric matrix. Nonzero exactly when x is nondegenerate as a
/// steady state of the reduced system.
Rational reduced_jacobian(const ReactionNetwork& net, const RationalVector& k,
                          const RationalVector& x);

struct Trajectory {
    std::vector<double> times;            // strictly increasing, starts at 0
    std::vector<Eigen::VectorXd> states;  // one per time, nonnegative
    long accepted_steps = 0;
    long rejected_steps = 0;
    double clipped_mass = 0.0;         // total mass zeroed out by clipping
    double conservation_drift = 0.0;   // max over t and laws of |c.x(t) - c.x(0)|

    /// CSV with header "t,<name1>,<name2>,..." and one row per sample.
    std::string to_csv(const ReactionNetwork& net) const;
};

/// Integrates x' = G v(x) from x0 over [0, t_end] with an adaptive embedded
/// Runge-Kutta 5(4) pair (Dormand-Prince), clipping states at zero.
/// Requires x0 >= 0 componentwise and rel_tol in (0, 1e-2].
Trajectory simulate(const ReactionNetwork& net, const Eigen::VectorXd& k,
                    const Eigen::VectorXd& x0, double t_end, double rel_tol);

}  // namespace crn

#endif
