#ifndef CRN_LINALG_HPP
#define CRN_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

using Int64Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using SignPattern = Eigen::MatrixXi;

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
/// fn returning false stops the enumeration early.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(static_cast<const std::vector<int>&>(idx))) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Fraction-free (Bareiss) elimination over an exact scalar.
/// Entries stay minors of the input, so every division is exact.
template <typename Derived>
struct Elimination {
    using Scalar = typename Derived::Scalar;
    int rank = 0;
    int swap_parity = 1;
    Scalar last_pivot = Scalar(1);
};

template <typename Derived>
Elimination<Derived> eliminate(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
    Elimination<Derived> out;
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    Scalar prev = Scalar(1);
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m(i, col) != Scalar(0)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) {
            m.row(piv).swap(m.row(r));
            out.swap_parity = -out.swap_parity;
        }
        for (int i = r + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)) / prev;
            m(i, col) = Scalar(0);
        }
        prev = m(r, col);
        ++r;
    }
    out.rank = r;
    out.last_pivot = prev;
    return out;
}

template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
    return eliminate(m).rank;
}

/// Exact determinant of a square matrix; the empty 0x0 determinant is 1.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() == 0) return Scalar(1);
    auto e = eliminate(m);
    if (e.rank < m.rows()) return Scalar(0);
    return e.swap_parity > 0 ? e.last_pivot : Scalar(-e.last_pivot);
}

/// Determinant of the submatrix picked by rows x cols (equal sizes, in-range, strictly increasing).
template <typename Derived>
typename Derived::Scalar minor_of(const Eigen::MatrixBase<Derived>& m, const std::vector<int>& rows,
                                  const std::vector<int>& cols) {
    using Scalar = typename Derived::Scalar;
    if (rows.size() != cols.size()) throw std::invalid_argument("minor index sets differ in size");
    const int k = static_cast<int>(rows.size());
    if (k == 0) return Scalar(1);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> sub(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
    return determinant(sub);
}

/// Reduced row echelon form; pivot_cols receives pivot column indices when non-null.
RationalMatrix rref(RationalMatrix m, std::vector<int>* pivot_cols = nullptr);

/// Canonical basis of {c : c^T m = 0}, one vector per row, in reduced echelon form.
RationalMatrix left_kernel(const RationalMatrix& m);

/// True when v lies in the column span of m.
bool in_column_span(const RationalMatrix& m, const RationalVector& v);

/// Entrywise signs of an exact matrix, values in {-1, 0, +1}.
SignPattern sign_pattern(const RationalMatrix& m);

/// Nonempty subset of {+,-,0}: the values sign(det A[rows|cols]) can take over
/// all A sharing the given sign pattern.
struct SignSet {
    bool plus = false;
    bool minus = false;
    bool zero = false;
    bool operator==(const SignSet&) const = default;
    bool is_singleton() const { return (plus ? 1 : 0) + (minus ? 1 : 0) + (zero ? 1 : 0) == 1; }
    static SignSet only(int s) { return {s > 0, s < 0, s == 0}; }
    static SignSet mixed() { return {true, true, true}; }
};

/// {0} if every permutation term vanishes, {s} if all nonzero terms share sign s,
/// {+,-,0} as soon as both signs occur.
SignSet minor_sign_set(const SignPattern& p, const std::vector<int>& rows, const std::vector<int>& cols);

/// Integer fast path: exact determinant via Bareiss with 128-bit intermediates.
/// pre: every minor of m fits in int64; see hadamard_fits_i64.
std::int64_t determinant_i64(const Int64Matrix& m);
std::int64_t minor_i64(const Int64Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// True when the Hadamard bound over every submatrix of m stays below 2^60,
/// so _i64 elimination cannot overflow.
bool hadamard_fits_i64(const Int64Matrix& m);

/// Integer copy of an exact matrix, or nullopt if any entry is non-integral.
std::optional<Int64Matrix> to_int64(const RationalMatrix& m);

}  // namespace crn

#endif
