#pragma once

#include <string>
#include <vector>

#include "dynforms/rational.hpp"

namespace dynforms {

// Point of the projective line over the rationals: a finite rational
// value or the point at infinity.
class ProjPoint {
  public:
    ProjPoint() : infinite_(false), v_(0) {}
    explicit ProjPoint(Rational v) : infinite_(false), v_(std::move(v)) {}
    static ProjPoint infinity() {
        ProjPoint p;
        p.infinite_ = true;
        return p;
    }

    bool is_infinity() const { return infinite_; }
    const Rational& value() const {
        if (infinite_) throw InputError("value() of the point at infinity");
        return v_;
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.infinite_ != b.infinite_) return b.infinite_;  // finite < infinity
        if (a.infinite_) return false;
        return a.v_ < b.v_;
    }

    std::string str() const { return infinite_ ? "inf" : rational_str(v_); }

  private:
    bool infinite_;
    Rational v_;
};

// Invertible fractional linear transformation z -> (az+b)/(cz+d).
class Mobius {
  public:
    Mobius() : a_(1), b_(0), c_(0), d_(1) {}
    Mobius(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (det() == 0) throw InputError("Mobius with vanishing determinant");
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    Rational det() const { return a_ * d_ - b_ * c_; }
    Mobius inverse() const { return Mobius(d_, -b_, -c_, a_); }

    friend Mobius operator*(const Mobius& m, const Mobius& n) {
        return Mobius(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                      m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
    }

    ProjPoint apply(const ProjPoint& p) const {
        if (p.is_infinity()) {
            if (c_ == 0) return ProjPoint::infinity();
            return ProjPoint(a_ / c_);
        }
        Rational den = c_ * p.value() + d_;
        if (den == 0) return ProjPoint::infinity();
        return ProjPoint((a_ * p.value() + b_) / den);
    }

    // Scales entries so the first nonzero of (a, b, c, d) is one; makes
    // equality of PGL2 elements a tuple comparison.
    Mobius normalized() const {
        Rational s = a_ != 0 ? a_ : b_ != 0 ? b_ : c_ != 0 ? c_ : d_;
        return Mobius(a_ / s, b_ / s, c_ / s, d_ / s);
    }

    friend bool operator==(const Mobius& m, const Mobius& n) {
        Mobius x = m.normalized(), y = n.normalized();
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Mobius& m, const Mobius& n) { return !(m == n); }

    bool is_identity() const { return *this == Mobius(); }

    // The unique element taking (p0, p1, p2) to (0, 1, infinity); the
    // points must be pairwise distinct.
    static Mobius to_zero_one_infinity(const ProjPoint& p0, const ProjPoint& p1,
                                       const ProjPoint& p2);

    // The unique element with src[i] -> dst[i] for three pairwise
    // distinct sources and three pairwise distinct targets.
    static Mobius through(const std::vector<ProjPoint>& src,
                          const std::vector<ProjPoint>& dst);

    std::string str() const {
        return "(" + rational_str(a_) + "*z + " + rational_str(b_) + ") / (" +
               rational_str(c_) + "*z + " + rational_str(d_) + ")";
    }

  private:
    Rational a_, b_, c_, d_;
};

inline Mobius Mobius::to_zero_one_infinity(const ProjPoint& p0, const ProjPoint& p1,
                                           const ProjPoint& p2) {
    if (p0 == p1 || p0 == p2 || p1 == p2)
        throw InputError("to_zero_one_infinity needs distinct points");
    if (p0.is_infinity()) {
        // z -> (p1 - p2) / (z - p2)
        return Mobius(Rational(0), p1.value() - p2.value(), Rational(1), -p2.value());
    }
    if (p1.is_infinity()) {
        // z -> (z - p0) / (z - p2)
        return Mobius(Rational(1), -p0.value(), Rational(1), -p2.value());
    }
    if (p2.is_infinity()) {
        // z -> (z - p0) / (p1 - p0)
        return Mobius(Rational(1), -p0.value(), Rational(0), p1.value() - p0.value());
    }
    // z -> ((z - p0)(p1 - p2)) / ((z - p2)(p1 - p0))
    Rational u = p1.value() - p2.value();
    Rational w = p1.value() - p0.value();
    return Mobius(u, -p0.value() * u, w, -p2.value() * w);
}

inline Mobius Mobius::through(const std::vector<ProjPoint>& src,
                              const std::vector<ProjPoint>& dst) {
    if (src.size() != 3 || dst.size() != 3)
        throw InputError("Mobius::through needs three point pairs");
    Mobius s = to_zero_one_infinity(src[0], src[1], src[2]);
    Mobius t = to_zero_one_infinity(dst[0], dst[1], dst[2]);
    return t.inverse() * s;
}

}  // namespace dynforms
