#ifndef CRN_TESTS_SUPPORT_HPP
#define CRN_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "crn/cst.hpp"
#include "crn/dynamics.hpp"
#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn::testing {

/// Cofactor expansion along the first row; independent of the elimination path.
inline Rational laplace_determinant(const RationalMatrix& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational det = 0;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        RationalMatrix sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r)
            for (int c = 0, cc = 0; c < n; ++c)
                if (c != j) sub(r - 1, cc++) = m(r, c);
        const Rational term = m(0, j) * laplace_determinant(sub);
        det += (j % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

inline Rational random_rational(std::mt19937& rng, int max_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

/// Cycle structure over species X1..Xn; kinds[i] is 'S' or 'T'.
inline CstStructure make_cst(const std::string& kinds, std::vector<std::int64_t> a,
                             std::vector<std::int64_t> b, OpennessTag tag) {
    CstStructure st;
    const int n = static_cast<int>(kinds.size());
    for (int i = 0; i < n; ++i) {
        st.species.push_back("X" + std::to_string(i + 1));
        st.kinds.push_back(kinds[static_cast<std::size_t>(i)] == 'S' ? ReactionKind::Sequestration
                                                                     : ReactionKind::Transmutation);
        st.reaction_index.push_back(i);
    }
    st.a = std::move(a);
    st.b = std::move(b);
    st.openness.tag = tag;
    if (tag == OpennessTag::FullyOpen)
        for (int i = 0; i < n; ++i) {
            st.openness.inflow_species.push_back(i);
            st.openness.outflow_species.push_back(i);
        }
    return st;
}

inline CstStructure random_cst(std::mt19937& rng, int min_n = 2, int max_n = 4,
                               OpennessTag tag = OpennessTag::FullyOpen) {
    std::uniform_int_distribution<int> n_dist(min_n, max_n);
    std::uniform_int_distribution<int> coeff(1, 3);
    std::uniform_int_distribution<int> bit(0, 1);
    const int n = n_dist(rng);
    std::string kinds;
    std::vector<std::int64_t> a, b;
    for (int i = 0; i < n; ++i) {
        kinds += bit(rng) ? 'S' : 'T';
        a.push_back(coeff(rng));
        b.push_back(coeff(rng));
    }
    return make_cst(kinds, std::move(a), std::move(b), tag);
}

/// Small random network with quirky but legal species names; may contain
/// flows, duplicates collapse in the constructor.
inline ReactionNetwork random_network(std::mt19937& rng) {
    static const std::vector<std::string> pool = {
        "A", "B", "C2", "_x", "Y*", "Z^2", "αβ", "Na", "K9", "M_1",
    };
    std::uniform_int_distribution<int> n_species(1, 6);
    std::uniform_int_distribution<int> n_reactions(1, 8);
    std::uniform_int_distribution<int> coeff(0, 3);
    std::uniform_int_distribution<int> rate_num(1, 99);
    std::uniform_int_distribution<int> rate_den(1, 9);
    std::uniform_int_distribution<int> bit(0, 1);

    std::vector<std::string> names = pool;
    std::shuffle(names.begin(), names.end(), rng);
    names.resize(static_cast<std::size_t>(n_species(rng)));

    std::vector<Reaction> reactions;
    const int m = n_reactions(rng);
    for (int j = 0; j < m; ++j) {
        Reaction r;
        for (int attempt = 0; attempt < 50 && r.source == r.target; ++attempt) {
            r.source = Complex();
            r.target = Complex();
            for (int s = 0; s < static_cast<int>(names.size()); ++s) {
                if (int c = coeff(rng); c > 0 && bit(rng)) r.source.set(s, c);
                if (int c = coeff(rng); c > 0 && bit(rng)) r.target.set(s, c);
            }
        }
        if (r.source == r.target) continue;
        if (bit(rng)) r.rate = Rational(rate_num(rng), rate_den(rng));
        reactions.push_back(std::move(r));
    }
    if (reactions.empty()) {
        Reaction r;
        r.source.set(0, 1);
        reactions.push_back(std::move(r));
    }
    return ReactionNetwork(names, std::move(reactions));
}

/// Central-difference jacobian of the mass-action field, in doubles.
inline Eigen::MatrixXd fd_jacobian(const ReactionNetwork& net, const Eigen::VectorXd& k,
                                   const Eigen::VectorXd& x) {
    const Eigen::MatrixXd gamma =
        stoichiometric_matrix(net).unaryExpr([](const Rational& q) { return to_double(q); });
    const auto field = [&](const Eigen::VectorXd& y) -> Eigen::VectorXd {
        return gamma * mass_action_rates(net, k, y);
    };
    const int n = net.species_count();
    Eigen::MatrixXd jac(n, n);
    const double root_eps = std::cbrt(2.2e-16);
    for (int j = 0; j < n; ++j) {
        const double h = root_eps * std::max(std::abs(x(j)), 1.0);
        Eigen::VectorXd lo = x, hi = x;
        lo(j) -= h;
        hi(j) += h;
        jac.col(j) = (field(hi) - field(lo)) / (2 * h);
    }
    return jac;
}

}  // namespace crn::testing

#endif
