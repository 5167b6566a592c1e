#include "crn/rational.hpp"

#include <cctype>
#include <ostream>

namespace crn {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from == to) throw std::invalid_argument("malformed rational literal: " + text);
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("malformed rational literal: " + text);
        return Integer(s.substr(from, to - from));
    };
    std::size_t slash = s.find('/', pos);
    std::size_t dot = s.find('.', pos);
    Rational value;
    if (slash != std::string::npos) {
        if (dot != std::string::npos) throw std::invalid_argument("malformed rational literal: " + text);
        Integer num = digits(pos, slash);
        Integer den = digits(slash + 1, s.size());
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        value = Rational(num, den);
    } else if (dot != std::string::npos) {
        Integer whole = dot == pos ? Integer(0) : digits(pos, dot);
        Integer frac = digits(dot + 1, s.size());
        Integer scale = 1;
        for (std::size_t i = dot + 1; i < s.size(); ++i) scale *= 10;
        value = Rational(whole * scale + frac, scale);
    } else {
        value = Rational(digits(pos, s.size()));
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& q) {
    std::string num = q.numerator().str();
    if (q.denominator() == 1) return num;
    return num + "/" + q.denominator().str();
}

std::ostream& operator<<(std::ostream& out, const Rational& q) {
    return out << format_rational(q);
}

Rational pow(const Rational& q, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Rational base = q, acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Integer iroot(const Integer& v, unsigned k) {
    if (v < 0) throw std::invalid_argument("iroot of negative value");
    if (k == 0) throw std::invalid_argument("iroot order zero");
    if (v == 0 || v == 1 || k == 1) return v;
    Integer lo = 1, hi = 1;
    while (boost::multiprecision::pow(hi, k) <= v) hi <<= 1;
    // invariant: lo^k <= v < hi^k
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, k) <= v)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

RootResult exact_root(const Rational& q, unsigned k) {
    if (q < 0) throw std::invalid_argument("root of negative rational");
    Integer num = q.numerator(), den = q.denominator();
    Integer rn = iroot(num, k), rd = iroot(den, k);
    if (boost::multiprecision::pow(rn, k) == num && boost::multiprecision::pow(rd, k) == den)
        return {true, Rational(rn, rd)};
    return {false, Rational()};
}

Rational approx_root(const Rational& q, unsigned k, unsigned digits) {
    if (q < 0) throw std::invalid_argument("root of negative rational");
    if (q == 0) return 0;
    RootResult r = exact_root(q, k);
    if (r.exact) return r.value;
    // Integer root at 10^digits scale brackets the true root within 1/scale.
    Integer scale = boost::multiprecision::pow(Integer(10), digits);
    Integer scaled_num = q.numerator() * boost::multiprecision::pow(scale, k);
    Rational lo(iroot(scaled_num / q.denominator(), k), scale);
    Rational hi = lo + Rational(1, scale);
    while (pow(hi, k) < q) hi += Rational(1, scale);
    while (lo > 0 && pow(lo, k) > q) lo -= Rational(1, scale);
    // Bisect until |lo^k - q| <= q * 10^-digits; each step halves the bracket.
    Rational tol = q / Rational(scale);
    int guard = 64 * static_cast<int>(k) + 512;
    while (abs(pow(lo, k) - q) > tol) {
        if (--guard < 0) throw std::logic_error("root refinement failed to converge");
        Rational mid = (lo + hi) / 2;
        if (pow(mid, k) <= q)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace crn
