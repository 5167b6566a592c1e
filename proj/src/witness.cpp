#include "crn/witness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "crn/dynamics.hpp"
#include "crn/parse.hpp"

namespace crn {

namespace {

constexpr unsigned kNumericDigits = 45;

Rational chain_ratio(const CstStructure& st, int i) {
    // v_i / v_{i-1} at steady state for an interior cycle species.
    return Rational(st.b[static_cast<std::size_t>(i)]) / st.a[static_cast<std::size_t>(i)];
}

}  // namespace

Rational numeric_residual_bound() {
    return Rational(1) / pow(Rational(10), 30);
}

TwoStateWitness construct_transmutation_witness(const CstStructure& st) {
    if (st.s_count() != 0)
        throw std::invalid_argument("witness construction needs an all-transmutation cycle");
    if (st.prod_a() >= st.prod_b())
        throw std::invalid_argument("witness construction needs prod a < prod b");
    int start = -1;
    for (int i = 0; i < st.n(); ++i)
        if (st.a[static_cast<std::size_t>(i)] > 1) {
            start = i;
            break;
        }
    if (start < 0)
        throw std::invalid_argument("witness construction needs some coefficient a_i > 1");

    TwoStateWitness w;
    w.structure = rotated(st, start);
    const int n = w.structure.n();
    const std::int64_t a1 = w.structure.a[0];
    const Rational ratio = Rational(w.structure.prod_b()) / Rational(w.structure.prod_a());

    w.rates.resize(n + 2);
    w.rates(0) = Rational(1) / (Rational(a1) * (ratio - 1));
    for (int i = 1; i < n; ++i) w.rates(i) = 1;
    const Rational l1 = pow(Rational(2), a1) - 1;
    const Rational f1 = pow(Rational(2), a1) - 2;
    w.rates(n) = l1;
    w.rates(n + 1) = f1;

    std::vector<Reaction> reactions = core_network(w.structure).reactions();
    for (int i = 0; i < n; ++i) reactions[static_cast<std::size_t>(i)].rate = w.rates(i);
    Reaction outflow;
    outflow.source.set(0, 1);
    outflow.rate = l1;
    Reaction inflow;
    inflow.target.set(0, 1);
    inflow.rate = f1;
    reactions.push_back(outflow);
    reactions.push_back(inflow);
    w.network = ReactionNetwork(w.structure.species, std::move(reactions));

    for (RationalVector* state : {&w.state_a, &w.state_b}) {
        const int x1 = (state == &w.state_a) ? 1 : 2;
        state->resize(n);
        (*state)(0) = x1;
        Rational v = w.rates(0) * pow(Rational(x1), a1);
        for (int i = 1; i < n; ++i) {
            v *= chain_ratio(w.structure, i);
            const Rational t = v / w.rates(i);
            const auto k = static_cast<unsigned>(w.structure.a[static_cast<std::size_t>(i)]);
            const RootResult root = exact_root(t, k);
            if (root.exact) {
                (*state)(i) = root.value;
            } else {
                (*state)(i) = approx_root(t, k, kNumericDigits);
                w.exact = false;
            }
        }
    }
    return w;
}

Rational nondegeneracy_quantity(const TwoStateWitness& w, const RationalVector& x) {
    const int n = w.structure.n();
    const Rational l1 = w.rates(n);
    Rational v1 = w.rates(0) * pow(x(0), w.structure.a[0]);
    Rational quantity = l1 - Rational(w.structure.a[0]) * v1 / w.rates(0);
    for (int i = 1; i < n; ++i) {
        const std::int64_t ai = w.structure.a[static_cast<std::size_t>(i)];
        quantity *= Rational(ai) * ai * w.rates(i) * pow(x(i), ai);
    }
    return quantity;
}

namespace {

void check_state(WitnessReport& report, const TwoStateWitness& w, const RationalVector& x,
                 const char* label) {
    const int n = w.structure.n();
    bool positive = x.size() == n;
    if (positive)
        for (int i = 0; i < n; ++i)
            if (sign(x(i)) <= 0) positive = false;
    report.checks.push_back({std::string(label) + " positive", positive,
                             positive ? "" : "state has a nonpositive coordinate"});
    if (!positive) return;

    RationalVector k(w.network.reaction_count());
    for (int j = 0; j < w.network.reaction_count(); ++j)
        k(j) = w.network.reactions()[static_cast<std::size_t>(j)].rate.value();
    const RationalVector res = residual(w.network, k, x);
    bool residual_ok = true;
    const Rational bound = w.exact ? Rational(0) : numeric_residual_bound();
    for (Eigen::Index i = 0; i < res.size(); ++i)
        if (abs(res(i)) > bound) residual_ok = false;
    std::ostringstream detail;
    if (!residual_ok) {
        detail << "residual (";
        for (Eigen::Index i = 0; i < res.size(); ++i)
            detail << (i ? "," : "") << format_rational(res(i));
        detail << ") exceeds bound " << (w.exact ? "0" : "10^-30");
    }
    report.checks.push_back(
        {std::string(label) + (w.exact ? " residual zero" : " residual within 10^-30"),
         residual_ok, detail.str()});

    const Rational q = nondegeneracy_quantity(w, x);
    report.checks.push_back({std::string(label) + " nondegenerate", sign(q) != 0,
                             "degeneracy-excluding quantity " + format_rational(q)});
}

}  // namespace

bool WitnessReport::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const WitnessCheck& c) { return c.passed; });
}

WitnessReport verify_two_state_witness(const TwoStateWitness& w) {
    WitnessReport report;
    report.checks.push_back({"states distinct", w.state_a != w.state_b, ""});
    check_state(report, w, w.state_a, "state_a");
    check_state(report, w, w.state_b, "state_b");
    report.checks.push_back(
        {"states compatible",
         same_compatibility_class(w.network, w.state_a, w.state_b), ""});
    return report;
}

DeterminantCertificate construct_sequestration_certificate(const CstStructure& st) {
    const int s = st.s_count();
    const int n = st.n();
    if (s == 0 || s % 2 != 0)
        throw std::invalid_argument("certificate construction needs an even positive sequestration count");
    if (s >= n)
        throw std::invalid_argument("certificate construction needs a transmutation in the cycle");
    if (st.prod_a() >= st.prod_b())
        throw std::invalid_argument("certificate construction needs prod a < prod b");
    if (st.openness.tag != OpennessTag::FullyOpen)
        throw std::invalid_argument("certificate construction needs a fully open cycle");

    int last_seq = -1;
    for (int i = 0; i < n; ++i)
        if (st.kinds[static_cast<std::size_t>(i)] == ReactionKind::Sequestration) last_seq = i;

    DeterminantCertificate cert;
    cert.structure = rotated(st, (last_seq + 1) % n);
    cert.network = fully_open_network(cert.structure);
    cert.d1.resize(n);
    Rational d = 1;
    for (int i = 0; i < n; ++i) {
        d *= Rational(cert.structure.b[static_cast<std::size_t>(i)]) /
             cert.structure.a[static_cast<std::size_t>(i)];
        cert.d1(i) = d;
    }

    cert.epsilon = 1;
    for (cert.halvings = 0; cert.halvings <= 60; ++cert.halvings) {
        const CertificateCheck check = verify_determinant_certificate(cert);
        if (check.passed) {
            cert.det_value = check.determinant;
            cert.row_sums = check.row_sums;
            return cert;
        }
        cert.epsilon /= 2;
    }
    throw std::runtime_error("no certificate within 60 halvings of epsilon");
}

CertificateCheck verify_determinant_certificate(const DeterminantCertificate& cert) {
    const int n = cert.structure.n();
    RationalVector d(2 * n);
    for (int i = 0; i < n; ++i) d(i) = cert.d1(i);
    for (int i = 0; i < n; ++i) d(n + i) = cert.epsilon;
    return craciun_certificate_check(cert.network, d);
}

}  // namespace crn
