#pragma once

#include <gmpxx.h>

#include <string>

#include "dynforms/errors.hpp"

namespace dynforms {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (reduced fraction, positive denominator) as long as every value is
// canonicalized on construction, which the helpers below enforce.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "n", "-n", or "n/d" in base 10. Anything else is rejected.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    std::size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = s[0] == '-' || s[0] == '+' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!is_int(num) || !is_int(den))
        throw InputError("malformed rational literal: " + text);
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw InputError("rational with zero denominator: " + text);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

// Canonical form used across all JSON interfaces: "n" when the
// denominator is one, otherwise "n/d".
inline std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact square test; q is a square iff it is nonnegative and both
// numerator and denominator are perfect squares.
inline bool is_square(const Rational& q) {
    if (q < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

inline Rational sqrt_exact(const Rational& q) {
    if (!is_square(q)) throw InputError("sqrt_exact of a non-square");
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(n, d);
}

// Naive multiplicative height max(|num|, den) of a reduced fraction.
inline Integer height(const Rational& q) {
    Integer n = abs(q.get_num());
    return n > q.get_den() ? n : q.get_den();
}

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational unit_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& q) { return q == 0; }

}  // namespace dynforms
