#include "crn/injectivity.hpp"

#include "crn/linalg.hpp"

namespace crn {

namespace {

struct ProductScan {
    bool saw_pos = false, saw_neg = false;
    MinorEvidence pos, neg;

    // Returns false once both signs are present (conflict settled).
    bool note(const std::vector<int>& rows, const std::vector<int>& cols, int s) {
        if (s > 0 && !saw_pos) {
            saw_pos = true;
            pos = {rows, cols, +1};
        } else if (s < 0 && !saw_neg) {
            saw_neg = true;
            neg = {rows, cols, -1};
        }
        return !(saw_pos && saw_neg);
    }
};

std::vector<bool> nonzero_columns(const RationalMatrix& m) {
    std::vector<bool> out(static_cast<std::size_t>(m.cols()), false);
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) {
                out[static_cast<std::size_t>(j)] = true;
                break;
            }
    return out;
}

InjectivityVerdict finish(Kinetics kin, bool exact, const ProductScan& scan) {
    InjectivityVerdict v;
    v.kinetics = kin;
    v.exact = exact;
    if (scan.saw_pos && scan.saw_neg) {
        v.injective = false;
        v.evidence = {scan.pos, scan.neg};
        v.reason = "minor products of conflicting sign";
    } else if (scan.saw_pos || scan.saw_neg) {
        v.injective = true;
        v.evidence = {scan.saw_pos ? scan.pos : scan.neg};
        v.reason = "all nonzero minor products share one sign";
    } else {
        v.injective = false;
        v.reason = "rank-deficient evidence";
    }
    return v;
}

}  // namespace

InjectivityVerdict injective_mass_action(const ReactionNetwork& net) {
    auto [gamma, source] = build_matrices(net);
    const int n = net.species_count();
    const int m = net.reaction_count();
    const int r = rank(gamma);

    ProductScan scan;
    if (r == 0) {
        // Empty minors: the single product is 1.
        scan.note({}, {}, +1);
        return finish(Kinetics::MassAction, true, scan);
    }

    auto gi = to_int64(gamma);
    auto si = to_int64(source);
    const bool fast = gi && si && hadamard_fits_i64(*gi) && hadamard_fits_i64(*si);

    std::vector<bool> live_g = nonzero_columns(gamma);
    std::vector<bool> live_s = nonzero_columns(source);

    bool done = false;
    for_each_subset(m, r, [&](const std::vector<int>& cols) {
        for (int c : cols)
            if (!live_g[static_cast<std::size_t>(c)] || !live_s[static_cast<std::size_t>(c)]) return true;
        for_each_subset(n, r, [&](const std::vector<int>& rows) {
            int s;
            if (fast) {
                std::int64_t g = minor_i64(*gi, rows, cols);
                if (g == 0) return true;
                std::int64_t h = minor_i64(*si, rows, cols);
                if (h == 0) return true;
                s = (g > 0) == (h > 0) ? +1 : -1;
            } else {
                Rational g = minor_of(gamma, rows, cols);
                if (g == 0) return true;
                Rational h = minor_of(source, rows, cols);
                if (h == 0) return true;
                s = sign(g) * sign(h);
            }
            if (!scan.note(rows, cols, s)) {
                done = true;
                return false;
            }
            return true;
        });
        return !done;
    });
    return finish(Kinetics::MassAction, true, scan);
}

InjectivityVerdict injective_general(const ReactionNetwork& net) {
    auto [gamma, source] = build_matrices(net);
    const int n = net.species_count();
    const int m = net.reaction_count();
    const int r = rank(gamma);

    ProductScan scan;
    bool exact = true;
    bool definite = false;
    if (r == 0) {
        scan.note({}, {}, +1);
        auto v = finish(Kinetics::General, true, scan);
        return v;
    }

    SignPattern pattern = sign_pattern(source);
    std::vector<bool> live_g = nonzero_columns(gamma);
    std::vector<bool> live_s = nonzero_columns(source);

    bool done = false;
    for_each_subset(m, r, [&](const std::vector<int>& cols) {
        for (int c : cols)
            if (!live_g[static_cast<std::size_t>(c)] || !live_s[static_cast<std::size_t>(c)]) return true;
        for_each_subset(n, r, [&](const std::vector<int>& rows) {
            Rational g = minor_of(gamma, rows, cols);
            if (g == 0) return true;
            SignSet ss = minor_sign_set(pattern, rows, cols);
            if (ss == SignSet::only(0)) return true;
            if (!ss.is_singleton()) exact = false;
            if (ss.is_singleton()) definite = true;
            bool keep = true;
            if (ss.plus) keep = scan.note(rows, cols, sign(g));
            if (keep && ss.minus) keep = scan.note(rows, cols, -sign(g));
            if (!keep) {
                done = true;
                return false;
            }
            return true;
        });
        return !done;
    });

    InjectivityVerdict v = finish(Kinetics::General, exact, scan);
    if (v.injective && !definite) {
        // Every product can vanish simultaneously; no definite witness exists.
        v.injective = false;
        v.evidence.clear();
        v.reason = "rank-deficient evidence";
    }
    return v;
}

CertificateCheck craciun_certificate_check(const ReactionNetwork& net, const RationalVector& d) {
    if (classify_openness(net).tag != OpennessTag::FullyOpen)
        throw std::invalid_argument("certificate check requires a fully open network");
    std::vector<int> retained;
    for (int j = 0; j < net.reaction_count(); ++j)
        if (!net.reactions()[static_cast<std::size_t>(j)].is_inflow()) retained.push_back(j);
    if (d.rows() != static_cast<int>(retained.size()))
        throw std::invalid_argument("diagonal size must match the retained (non-inflow) reaction count");
    for (int i = 0; i < d.rows(); ++i)
        if (d(i) <= 0) throw std::invalid_argument("diagonal entries must be positive");

    auto [gamma, source] = build_matrices(net);
    const int n = net.species_count();
    RationalMatrix g(n, retained.size()), gl(n, retained.size());
    for (std::size_t j = 0; j < retained.size(); ++j) {
        g.col(static_cast<int>(j)) = gamma.col(retained[j]);
        gl.col(static_cast<int>(j)) = source.col(retained[j]);
    }

    CertificateCheck out;
    RationalMatrix scaled = g * d.asDiagonal();
    const RationalMatrix product = scaled * gl.transpose();
    out.determinant = determinant(product);
    out.row_sums = scaled.rowwise().sum();

    Rational signed_det = (n % 2 == 0) ? out.determinant : Rational(-out.determinant);
    bool det_ok = signed_det < 0;
    bool rows_ok = true;
    for (int i = 0; i < out.row_sums.rows(); ++i)
        if (out.row_sums(i) > 0) rows_ok = false;
    out.passed = det_ok && rows_ok;
    if (!det_ok) out.failure = "signed determinant is not negative";
    if (!rows_ok) out.failure += std::string(out.failure.empty() ? "" : "; ") + "a row sum is positive";
    return out;
}

}  // namespace crn
