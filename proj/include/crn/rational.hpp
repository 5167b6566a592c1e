#ifndef CRN_RATIONAL_HPP
#define CRN_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace crn {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar for Eigen matrices, always in lowest terms with a
/// positive denominator. The constructor set is deliberately narrow (builtin
/// integers implicitly, Integer explicitly) so that overload probing against
/// matrix expressions resolves cleanly instead of recursing into the
/// multiprecision backend's converting constructors.
class Rational {
  public:
    Rational() = default;

    template <typename I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
    Rational(I n) : value_(n) {}

    explicit Rational(const Integer& n) : value_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        value_ = Storage(num, den);
    }

    Integer numerator() const { return boost::multiprecision::numerator(value_); }
    Integer denominator() const { return boost::multiprecision::denominator(value_); }

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.value_ == 0) throw std::overflow_error("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }
    Rational operator+() const { return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = a.value_.compare(b.value_);
        if (c < 0) return std::strong_ordering::less;
        return c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend int sign(const Rational& q) { return q.value_.sign(); }
    friend Rational abs(const Rational& q) { return sign(q) < 0 ? -q : q; }
    friend double to_double(const Rational& q) { return q.value_.template convert_to<double>(); }

  private:
    using Storage = boost::multiprecision::cpp_rational;
    Storage value_;
};

int sign(const Rational& q);
Rational abs(const Rational& q);
double to_double(const Rational& q);

std::ostream& operator<<(std::ostream& out, const Rational& q);

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact rational from decimal or fraction text: "3", "-3/2", "1.5", "0.25".
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& q);

/// q^e for integer e >= 0 by repeated squaring; exact.
Rational pow(const Rational& q, std::int64_t e);

/// Largest integer r with r^k <= v, for v >= 0, k >= 1.
Integer iroot(const Integer& v, unsigned k);

/// Exact k-th root when q is a perfect k-th power of a rational, else nullopt-like flag.
struct RootResult {
    bool exact = false;
    Rational value;
};
RootResult exact_root(const Rational& q, unsigned k);

/// Rational x >= 0 with |x^k - q| <= q * 10^-digits, via bisection refinement.
Rational approx_root(const Rational& q, unsigned k, unsigned digits);

}  // namespace crn

namespace Eigen {

template <>
struct NumTraits<crn::Rational> : GenericNumTraits<crn::Rational> {
    typedef crn::Rational Real;
    typedef crn::Rational NonInteger;
    typedef crn::Rational Nested;
    typedef crn::Rational Literal;

    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40,
    };
};

}  // namespace Eigen

#endif
