#include "crn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace crn {

RationalMatrix rref(RationalMatrix m, std::vector<int>* pivot_cols) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    if (pivot_cols) pivot_cols->clear();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        m.row(r) /= m(r, col);
        for (int i = 0; i < rows; ++i)
            if (i != r && m(i, col) != 0) m.row(i) -= m(i, col) * m.row(r);
        if (pivot_cols) pivot_cols->push_back(col);
        ++r;
    }
    return m;
}

RationalMatrix left_kernel(const RationalMatrix& m) {
    // Left kernel of m = kernel of m^T, read off the RREF free columns.
    RationalMatrix t = m.transpose();
    std::vector<int> pivots;
    RationalMatrix r = rref(t, &pivots);
    const int dim = static_cast<int>(t.cols());
    std::vector<int> free_cols;
    {
        std::size_t p = 0;
        for (int c = 0; c < dim; ++c) {
            if (p < pivots.size() && pivots[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    RationalMatrix basis(static_cast<int>(free_cols.size()), dim);
    basis.setZero();
    for (std::size_t v = 0; v < free_cols.size(); ++v) {
        basis(static_cast<int>(v), free_cols[v]) = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p)
            basis(static_cast<int>(v), pivots[p]) = -r(static_cast<int>(p), free_cols[v]);
    }
    return basis;
}

bool in_column_span(const RationalMatrix& m, const RationalVector& v) {
    if (m.rows() != v.rows()) throw std::invalid_argument("dimension mismatch in span test");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    aug.leftCols(m.cols()) = m;
    aug.col(m.cols()) = v;
    return rank(aug) == rank(m);
}

SignPattern sign_pattern(const RationalMatrix& m) {
    SignPattern p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) p(i, j) = sign(m(i, j));
    return p;
}

namespace {

// Depth-first over permutations with nonzero support; parity tracked via inversions.
// Returns false to stop once both signs have been seen.
bool sign_terms(const SignPattern& p, const std::vector<int>& rows, const std::vector<int>& cols,
                std::size_t depth, std::uint32_t used, int term, SignSet& out) {
    const std::size_t k = rows.size();
    if (depth == k) {
        (term > 0 ? out.plus : out.minus) = true;
        if (out.plus && out.minus) {
            out.zero = true;  // opposite monomials can cancel exactly
            return false;
        }
        return true;
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (used & (1u << j)) continue;
        int s = p(rows[depth], cols[j]);
        if (s == 0) continue;
        int inversions = 0;
        for (std::size_t l = j + 1; l < k; ++l)
            if (used & (1u << l)) ++inversions;
        int next = term * s * (inversions % 2 == 0 ? 1 : -1);
        if (!sign_terms(p, rows, cols, depth + 1, used | (1u << j), next, out)) return false;
    }
    return true;
}

}  // namespace

SignSet minor_sign_set(const SignPattern& p, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor index sets differ in size");
    if (rows.size() > 31) throw std::invalid_argument("minor size out of supported range");
    SignSet out;
    sign_terms(p, rows, cols, 0, 0, 1, out);
    if (!out.plus && !out.minus) return SignSet::only(0);
    return out;
}

namespace {

std::int64_t bareiss_i64(Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> m) {
    const int n = static_cast<int>(m.rows());
    if (n == 0) return 1;
    __int128 prev = 1;
    int parity = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            m.row(piv).swap(m.row(k));
            parity = -parity;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                __int128 t = static_cast<__int128>(m(k, k)) * m(i, j) -
                             static_cast<__int128>(m(i, k)) * m(k, j);
                m(i, j) = static_cast<std::int64_t>(t / prev);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return parity * m(n - 1, n - 1);
}

}  // namespace

std::int64_t determinant_i64(const Int64Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    return bareiss_i64(m);
}

std::int64_t minor_i64(const Int64Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor index sets differ in size");
    const int k = static_cast<int>(rows.size());
    if (k == 0) return 1;
    Int64Matrix sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
    return bareiss_i64(std::move(sub));
}

bool hadamard_fits_i64(const Int64Matrix& m) {
    // Any minor is bounded by the product of the largest row norms, each taken
    // over all columns; sorting norms descending makes the bound submatrix-safe.
    std::vector<long double> norms(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        long double s = 0;
        for (int j = 0; j < m.cols(); ++j) {
            long double e = static_cast<long double>(m(i, j));
            s += e * e;
        }
        norms[static_cast<std::size_t>(i)] = std::sqrt(s);
    }
    std::sort(norms.begin(), norms.end(), std::greater<>());
    long double bound = 1;
    const long double limit = 1.15e18L;  // under 2^60, margin for rounding
    for (long double v : norms) {
        if (v <= 1) break;
        bound *= v;
        if (bound > limit) return false;
    }
    return true;
}

std::optional<Int64Matrix> to_int64(const RationalMatrix& m) {
    Int64Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, j);
            if (q.denominator() != 1) return std::nullopt;
            const Integer num = q.numerator();
            if (num > std::numeric_limits<std::int64_t>::max() ||
                num < std::numeric_limits<std::int64_t>::min())
                return std::nullopt;
            out(i, j) = num.convert_to<std::int64_t>();
        }
    return out;
}

}  // namespace crn
