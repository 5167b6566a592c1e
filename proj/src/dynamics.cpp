#include "crn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "crn/linalg.hpp"

namespace crn {

namespace {

void check_sizes(const ReactionNetwork& net, Eigen::Index k_size, Eigen::Index x_size) {
    if (k_size != net.reaction_count())
        throw std::invalid_argument("rate vector size does not match reaction count");
    if (x_size != net.species_count())
        throw std::invalid_argument("state vector size does not match species count");
}

}  // namespace

RationalVector mass_action_rates(const ReactionNetwork& net, const RationalVector& k,
                                 const RationalVector& x) {
    check_sizes(net, k.size(), x.size());
    RationalVector v(net.reaction_count());
    for (int j = 0; j < net.reaction_count(); ++j) {
        Rational rate = k(j);
        for (const auto& [species, coeff] : net.reactions()[static_cast<std::size_t>(j)].source.terms())
            rate *= pow(x(species), coeff);
        v(j) = rate;
    }
    return v;
}

Eigen::VectorXd mass_action_rates(const ReactionNetwork& net, const Eigen::VectorXd& k,
                                  const Eigen::VectorXd& x) {
    check_sizes(net, k.size(), x.size());
    Eigen::VectorXd v(net.reaction_count());
    for (int j = 0; j < net.reaction_count(); ++j) {
        double rate = k(j);
        for (const auto& [species, coeff] : net.reactions()[static_cast<std::size_t>(j)].source.terms())
            rate *= std::pow(x(species), static_cast<double>(coeff));
        v(j) = rate;
    }
    return v;
}

RationalVector residual(const ReactionNetwork& net, const RationalVector& k,
                        const RationalVector& x) {
    return stoichiometric_matrix(net) * mass_action_rates(net, k, x);
}

RationalMatrix jacobian(const ReactionNetwork& net, const RationalVector& k,
                        const RationalVector& x) {
    check_sizes(net, k.size(), x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x(i) == 0) throw std::invalid_argument("jacobian requires a strictly positive state");
    const auto [gamma, source] = build_matrices(net);
    const RationalVector v = mass_action_rates(net, k, x);
    RationalMatrix jac = gamma * v.asDiagonal() * source.transpose();
    for (Eigen::Index col = 0; col < jac.cols(); ++col) jac.col(col) /= x(col);
    return jac;
}

Rational reduced_jacobian(const ReactionNetwork& net, const RationalVector& k,
                          const RationalVector& x) {
    const RationalMatrix jac = jacobian(net, k, x);
    const int r = rank(stoichiometric_matrix(net));
    Rational sum = 0;
    for_each_subset(net.species_count(), r, [&](const std::vector<int>& rows) {
        sum += minor_of(jac, rows, rows);
        return true;
    });
    return sum;
}

std::string Trajectory::to_csv(const ReactionNetwork& net) const {
    std::ostringstream out;
    out.precision(17);
    out << "t";
    for (const auto& name : net.species()) out << "," << name;
    out << "\n";
    for (std::size_t row = 0; row < times.size(); ++row) {
        out << times[row];
        const auto& state = states[row];
        for (Eigen::Index i = 0; i < state.size(); ++i) out << "," << state(i);
        out << "\n";
    }
    return out.str();
}

namespace {

// Dormand-Prince 5(4) tableau; the last stage row doubles as the fifth-order
// weights (first-same-as-last).
constexpr double kA[6][6] = {
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
// Fifth-order weights minus fourth-order weights, for the error estimate.
constexpr double kErr[7] = {71.0 / 57600,     0.0,        -71.0 / 16695, 71.0 / 1920,
                            -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

constexpr long kMaxSteps = 1000000;

}  // namespace

Trajectory simulate(const ReactionNetwork& net, const Eigen::VectorXd& k,
                    const Eigen::VectorXd& x0, double t_end, double rel_tol) {
    check_sizes(net, k.size(), x0.size());
    for (Eigen::Index j = 0; j < k.size(); ++j)
        if (!(k(j) > 0)) throw std::invalid_argument("rate constants must be positive");
    for (Eigen::Index i = 0; i < x0.size(); ++i)
        if (!(x0(i) >= 0)) throw std::invalid_argument("initial state must be nonnegative");
    if (!(rel_tol > 0) || rel_tol > 1e-2)
        throw std::invalid_argument("rel_tol must lie in (0, 1e-2]");
    if (!(t_end > 0)) throw std::invalid_argument("t_end must be positive");

    const int n = net.species_count();
    const RationalMatrix gamma_exact = stoichiometric_matrix(net);
    const Eigen::MatrixXd gamma = gamma_exact.unaryExpr([](const Rational& q) { return to_double(q); });
    const auto field = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        return gamma * mass_action_rates(net, k, x);
    };

    const RationalMatrix laws_exact = conservation_laws(net);
    const Eigen::MatrixXd laws =
        laws_exact.unaryExpr([](const Rational& q) { return to_double(q); });
    const Eigen::VectorXd law_values0 = laws * x0;

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.states.push_back(x0);

    const double abs_tol = rel_tol * 1e-3;
    const double min_step = 1e-14 * t_end;
    double t = 0.0;
    double h = t_end / 1000.0;
    Eigen::VectorXd x = x0;
    Eigen::VectorXd stages[7];
    stages[0] = field(x);

    while (t < t_end) {
        if (traj.accepted_steps + traj.rejected_steps >= kMaxSteps)
            throw SimulationError("step limit exceeded before reaching t_end");
        h = std::min(h, t_end - t);
        if (h < min_step)
            throw SimulationError("step size underflow at t = " + std::to_string(t) +
                                  " (stiffness failure)");

        for (int stage = 1; stage < 7; ++stage) {
            Eigen::VectorXd arg = x;
            for (int prev = 0; prev < stage; ++prev)
                if (kA[stage - 1][prev] != 0.0) arg += h * kA[stage - 1][prev] * stages[prev];
            stages[stage] = field(arg);
        }
        // stages[6] is f at the fifth-order solution, so recover it directly.
        Eigen::VectorXd x_new = x;
        for (int prev = 0; prev < 6; ++prev)
            if (kA[5][prev] != 0.0) x_new += h * kA[5][prev] * stages[prev];

        Eigen::VectorXd err_vec = Eigen::VectorXd::Zero(n);
        for (int stage = 0; stage < 7; ++stage)
            if (kErr[stage] != 0.0) err_vec += h * kErr[stage] * stages[stage];
        double err = 0.0;
        for (int i = 0; i < n; ++i) {
            const double scale = abs_tol + rel_tol * std::max(std::abs(x(i)), std::abs(x_new(i)));
            err += (err_vec(i) / scale) * (err_vec(i) / scale);
        }
        err = std::sqrt(err / n);
        if (!std::isfinite(err)) err = 2.0;  // reject blow-ups and shrink

        if (err <= 1.0) {
            t += h;
            bool clipped = false;
            for (int i = 0; i < n; ++i)
                if (x_new(i) < 0) {
                    traj.clipped_mass += -x_new(i);
                    x_new(i) = 0;
                    clipped = true;
                }
            x = x_new;
            stages[0] = clipped ? field(x) : stages[6];
            traj.times.push_back(t);
            traj.states.push_back(x);
            ++traj.accepted_steps;
        } else {
            ++traj.rejected_steps;
        }
        const double factor = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
        h *= factor;
    }

    if (laws.rows() > 0)
        for (const auto& state : traj.states) {
            const double drift = ((laws * state) - law_values0).cwiseAbs().maxCoeff();
            traj.conservation_drift = std::max(traj.conservation_drift, drift);
        }
    return traj;
}

}  // namespace crn
