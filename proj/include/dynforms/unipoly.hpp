#pragma once

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dynforms/errors.hpp"

namespace dynforms {

// Dense univariate polynomial over a field K (rationals or a prime
// field), coefficients stored lowest degree first with no trailing
// zeros. The zero polynomial has an empty coefficient vector and
// degree -1.
template <class K>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const K& k) { return UniPoly(std::vector<K>{k}); }
    // x^n with unit coefficient in the field of `sample`.
    static UniPoly monomial(const K& coeff, int n) {
        std::vector<K> c(static_cast<std::size_t>(n) + 1, zero_like(coeff));
        c.back() = coeff;
        return UniPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    // Coefficient of x^i (zero beyond the stored range).
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K{};
        return c_[static_cast<std::size_t>(i)];
    }
    const K& leading() const {
        if (zero()) throw InputError("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = static_cast<K>(r[i] + b.c_[i]);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K{});
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = static_cast<K>(r[i] - b.c_[i]);
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        std::vector<K> r = c_;
        for (K& x : r) x = static_cast<K>(-x);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.zero() || b.zero()) return UniPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = static_cast<K>(r[i + j] + static_cast<K>(a.c_[i] * b.c_[j]));
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const K& s, const UniPoly& a) {
        std::vector<K> r = a.c_;
        for (K& x : r) x = static_cast<K>(s * x);
        return UniPoly(std::move(r));
    }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Euclidean division: returns (quotient, remainder) with
    // deg(remainder) < deg(divisor).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.zero()) throw InputError("polynomial division by zero");
        UniPoly q, r = *this;
        if (degree() < d.degree()) return {q, r};
        std::vector<K> qc(static_cast<std::size_t>(degree() - d.degree()) + 1, K{});
        while (!r.zero() && r.degree() >= d.degree()) {
            K factor = static_cast<K>(r.leading() / d.leading());
            int shift = r.degree() - d.degree();
            qc[static_cast<std::size_t>(shift)] = factor;
            // r -= factor * x^shift * d
            std::vector<K> rc = r.c_;
            for (std::size_t i = 0; i < d.c_.size(); ++i) {
                std::size_t k = i + static_cast<std::size_t>(shift);
                rc[k] = static_cast<K>(rc[k] - static_cast<K>(factor * d.c_[i]));
            }
            r = UniPoly(std::move(rc));
        }
        return {UniPoly(std::move(qc)), r};
    }
    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }

    // Division that must be exact; throws if a remainder is left.
    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.zero()) throw InputError("exact_div has nonzero remainder");
        return q;
    }

    UniPoly derivative() const {
        if (degree() < 1) return UniPoly();
        std::vector<K> r(c_.size() - 1, K{});
        for (std::size_t i = 1; i < c_.size(); ++i) {
            K n = int_in_field(static_cast<long>(i), c_[i]);
            r[i - 1] = static_cast<K>(n * c_[i]);
        }
        return UniPoly(std::move(r));
    }

    K eval(const K& x) const {
        K acc{};
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = static_cast<K>(static_cast<K>(acc * x) + c_[i]);
        return acc;
    }

    // Substitution of another polynomial for the variable.
    UniPoly compose(const UniPoly& inner) const {
        UniPoly acc;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * inner;
            acc += constant(c_[i]);
        }
        return acc;
    }

    UniPoly pow(int e) const {
        if (e < 0) throw InputError("negative polynomial power");
        UniPoly base = *this;
        UniPoly acc;
        bool started = false;
        while (e) {
            if (e & 1) {
                acc = started ? acc * base : base;
                started = true;
            }
            base = base * base;
            e >>= 1;
        }
        if (!started) {
            if (zero()) throw InputError("0^0 polynomial power");
            return constant(unit_like(leading()));
        }
        return acc;
    }

    UniPoly monic() const {
        if (zero()) return *this;
        K inv = static_cast<K>(unit_like(leading()) / leading());
        return inv * *this;
    }

    // Coefficients reversed against a formal degree (at least the actual
    // degree); computes x^formal_deg * p(1/x).
    UniPoly reverse(int formal_deg) const {
        if (formal_deg < degree()) throw InputError("reverse below actual degree");
        std::vector<K> r(static_cast<std::size_t>(formal_deg) + 1, K{});
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[static_cast<std::size_t>(formal_deg) - i] = c_[i];
        return UniPoly(std::move(r));
    }

    std::string str(const std::string& var = "x") const {
        if (zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (is_zero(c_[i])) continue;
            if (!first) out << " + ";
            first = false;
            out << "(" << coeff_str(c_[i]) << ")";
            if (i > 0) out << "*" << var;
            if (i > 1) out << "^" << i;
        }
        return out.str();
    }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    // n as a field element, relative to a sample from the same field.
    static K int_in_field(long n, const K& sample) {
        K u = unit_like(sample);
        K acc{};
        bool neg = n < 0;
        if (neg) n = -n;
        for (long i = 0; i < n; ++i) acc = static_cast<K>(acc + u);
        return neg ? static_cast<K>(-acc) : acc;
    }
    template <class T>
    static std::string coeff_str(const T& x) {
        return x.str();
    }
    static std::string coeff_str(const mpq_class& x) { return rational_str(x); }

    std::vector<K> c_;
};

// Monic greatest common divisor via the Euclidean algorithm.
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    if (a.zero() && b.zero()) throw InputError("gcd of two zero polynomials");
    while (!b.zero()) {
        UniPoly<K> r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

// Extended Euclid: g = gcd (monic), with u*a + v*b = g.
template <class K>
void poly_xgcd(const UniPoly<K>& a, const UniPoly<K>& b, UniPoly<K>& g, UniPoly<K>& u,
               UniPoly<K>& v) {
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> s0 = UniPoly<K>::constant(unit_like(a.zero() ? b.leading() : a.leading()));
    UniPoly<K> s1, t0, t1 = s0;
    while (!r1.zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        UniPoly<K> s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        UniPoly<K> t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    K lead = r0.leading();
    K inv = static_cast<K>(unit_like(lead) / lead);
    g = inv * r0;
    u = inv * s0;
    v = inv * t0;
}

// Squarefree part a / gcd(a, a') (monic).
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& a) {
    if (a.zero()) throw InputError("squarefree part of zero polynomial");
    if (a.degree() == 0) return a.monic();
    UniPoly<K> g = poly_gcd(a, a.derivative());
    return a.exact_div(g).monic();
}

template <class K>
bool is_squarefree(const UniPoly<K>& a) {
    if (a.zero()) return false;
    if (a.degree() <= 1) return true;
    return poly_gcd(a, a.derivative()).degree() == 0;
}

// Resultant of two nonzero polynomials at their actual degrees, equal to
// the determinant of the Sylvester matrix. Computed by the Euclidean
// remainder recurrence; the independent Sylvester-determinant oracle in
// the test suite cross-checks this path.
template <class K>
K poly_resultant(UniPoly<K> a, UniPoly<K> b) {
    if (a.zero() || b.zero()) throw InputError("resultant of zero polynomial");
    K unit = unit_like(a.leading());
    K acc = unit;
    bool negate = false;
    while (b.degree() > 0) {
        UniPoly<K> r = a % b;
        if (r.zero()) return K{};
        if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
        int drop = a.degree() - r.degree();
        K lb = b.leading();
        for (int i = 0; i < drop; ++i) acc = static_cast<K>(acc * lb);
        a = b;
        b = r;
    }
    // b is a nonzero constant now: Res(a, b0) = b0^deg(a).
    K b0 = b.leading();
    for (int i = 0; i < a.degree(); ++i) acc = static_cast<K>(acc * b0);
    return negate ? static_cast<K>(-acc) : acc;
}

// Discriminant: (-1)^{n(n-1)/2} Res(f, f') / lc(f).
template <class K>
K poly_discriminant(const UniPoly<K>& f) {
    if (f.degree() < 1) throw InputError("discriminant needs degree >= 1");
    if (f.degree() == 1) return unit_like(f.leading());
    K res = poly_resultant(f, f.derivative());
    K d = static_cast<K>(res / f.leading());
    int n = f.degree();
    return (n * (n - 1) / 2) % 2 ? static_cast<K>(-d) : d;
}

}  // namespace dynforms
