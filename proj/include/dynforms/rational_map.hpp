#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dynforms/factor.hpp"
#include "dynforms/projective.hpp"

namespace dynforms {

// Degree-d endomorphism of the projective line given by a pair of
// rational polynomials with nonvanishing homogeneous resultant.
// Canonical scaling: monic denominator when the denominator is
// nonconstant, otherwise monic numerator, so equality of values is
// structural equality.
class RationalMap {
  public:
    static RationalMap make(QPoly numerator, QPoly denominator);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    int degree() const { return degree_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    ProjPoint eval(const ProjPoint& x) const;

    friend bool operator==(const RationalMap& f, const RationalMap& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }
    friend bool operator!=(const RationalMap& f, const RationalMap& g) { return !(f == g); }

    std::string str() const { return "(" + num_.str("z") + ") / (" + den_.str("z") + ")"; }

  private:
    RationalMap(QPoly n, QPoly d, int deg)
        : num_(std::move(n)), den_(std::move(d)), degree_(deg) {}
    QPoly num_;
    QPoly den_;
    int degree_;
};

// m^{-1} . f . m, same degree, canonically scaled.
RationalMap conjugate(const RationalMap& f, const Mobius& m);

// Exact forward orbit x, f(x), ..., f^n(x).
std::vector<ProjPoint> orbit(const RationalMap& f, const ProjPoint& x, int n);

struct PreperiodicityResult {
    enum class Kind { Preperiodic, Escaped, Undecided } kind;
    int tail = 0;    // index where the cycle starts
    int period = 0;  // cycle length
};

// Detects a repeated point within max_iter steps, or escape once the
// naive height of an orbit point exceeds height_bound.
PreperiodicityResult preperiodic_bounded(const RationalMap& f, const ProjPoint& x,
                                         int max_iter, const Integer& height_bound);

struct FixedPointData {
    QPoly dynatomic;  // P(z) - z Q(z)
    bool infinity_fixed = false;
    // rational affine fixed points with multiplicity as roots of the
    // dynatomic polynomial
    std::vector<std::pair<Rational, int>> rational_fixed_points;
};

FixedPointData fixed_point_data(const RationalMap& f);

struct MultiplierSpectrum {
    // Monic degree d+1 polynomial whose roots with multiplicity are the
    // fixed point multipliers, the point at infinity included.
    QPoly lambda_poly;
    // sigma[i-1] is the i-th elementary symmetric function of the
    // multipliers.
    std::vector<Rational> sigma;
};

// Computed without root extraction: the affine block is the resultant
// in z of the dynatomic polynomial against lambda*Q^2 - (P'Q - PQ'),
// made monic in lambda; infinity contributes its multiplier from the
// w = 1/z chart, with multiplicity d+1-deg(dynatomic).
MultiplierSpectrum multiplier_spectrum(const RationalMap& f);

// Multiplier at a rational fixed point (infinity allowed when fixed).
Rational multiplier_at(const RationalMap& f, const ProjPoint& fixed_point);

struct RamificationProfile {
    // Rational critical points (infinity included) with ramification
    // index >= 2.
    std::vector<std::pair<ProjPoint, int>> critical_points;
    QPoly wronskian;  // P'Q - PQ'
    // Complete multiplicity structure of the wronskian: monic rational
    // linear factors and the rootless layers from the squarefree
    // decomposition, as (factor, multiplicity) pairs.
    std::vector<std::pair<QPoly, int>> factored_wronskian;
    int infinity_index = 1;  // ramification index at infinity

    // Sum of (e - 1) over all critical points, non-rational ones
    // counted through their factor degrees; equals 2d-2.
    int total_ramification() const;
};

RamificationProfile ramification_profile(const RationalMap& f);

struct AutomorphismResult {
    bool supported = false;
    std::string reason;  // set when unsupported
    std::vector<Mobius> elements;
};

// All rational Mobius transformations commuting with f, found through
// multiplier-preserving permutations of the rational fixed points.
// Requires every fixed point rational; with fewer than two distinct
// fixed points the search is not attempted.
AutomorphismResult automorphisms_rational(const RationalMap& f);

}  // namespace dynforms
