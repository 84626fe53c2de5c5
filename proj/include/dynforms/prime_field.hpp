#pragma once

#include <cstdint>
#include <string>

#include "dynforms/errors.hpp"

namespace dynforms {

// Element of a prime field F_p. The modulus travels with the value so
// mixed-modulus arithmetic can be rejected at run time. A default
// constructed element is the "untyped" zero (modulus 0): it combines
// with any modulus, which lets generic polynomial code value-initialize
// scratch zeros without knowing p.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, std::uint64_t modulus) : p_(modulus) {
        if (modulus == 0) throw InputError("prime field with modulus 0");
        std::int64_t m = static_cast<std::int64_t>(modulus);
        std::int64_t r = value % m;
        if (r < 0) r += m;
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_untyped_zero() const { return p_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = merged_modulus(a, b, "+");
        if (p == 0) return Fp();
        return from_reduced((a.v_ + b.v_) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t p = merged_modulus(a, b, "-");
        if (p == 0) return Fp();
        return from_reduced((a.v_ + p - b.v_) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = merged_modulus(a, b, "*");
        if (p == 0) return Fp();
        unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
        return from_reduced(static_cast<std::uint64_t>(prod % p), p);
    }
    Fp operator-() const {
        if (p_ == 0) return Fp();
        return from_reduced(v_ == 0 ? 0 : p_ - v_, p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v_ == 0) throw InputError("inverse of zero in F_p");
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_);
        std::int64_t newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (r != 1) throw InputError("modulus is not prime: gcd != 1");
        return Fp(t, p_);
    }

    Fp pow(std::uint64_t e) const {
        if (p_ == 0) return e == 0 ? Fp(1, 1) : Fp();
        Fp acc(1, p_), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.v_ == 0 && b.v_ == 0) return true;  // zero is zero in any field
        if (a.p_ != b.p_) return false;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

  private:
    static Fp from_reduced(std::uint64_t v, std::uint64_t p) {
        Fp e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }
    // The untyped zero adopts the other operand's modulus; two real
    // moduli must agree.
    static std::uint64_t merged_modulus(const Fp& a, const Fp& b, const char* op) {
        if (a.p_ == 0 && a.v_ == 0) return b.p_;
        if (b.p_ == 0 && b.v_ == 0) return a.p_;
        if (a.p_ != b.p_)
            throw FieldMismatchError(std::string("prime field mismatch in '") + op +
                                     "': p=" + std::to_string(a.p_) + " vs p=" +
                                     std::to_string(b.p_));
        return a.p_;
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline Fp zero_like(const Fp& x) {
    return x.is_untyped_zero() ? Fp() : Fp(0, x.modulus());
}
inline Fp unit_like(const Fp& x) {
    if (x.is_untyped_zero()) throw InputError("unit_like of untyped zero");
    return Fp(1, x.modulus());
}
inline bool is_zero(const Fp& x) { return x.value() == 0; }

}  // namespace dynforms
