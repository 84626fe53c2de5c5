#include "dynforms/galois.hpp"

#include "dynforms/errors.hpp"

namespace dynforms {

std::string galois_label_str(GaloisLabel g) {
    switch (g) {
        case GaloisLabel::Trivial: return "trivial";
        case GaloisLabel::Z2: return "Z2";
        case GaloisLabel::Z3: return "Z3";
        case GaloisLabel::Z2xZ2: return "Z2xZ2";
        case GaloisLabel::Z4: return "Z4";
        case GaloisLabel::S3: return "S3";
        case GaloisLabel::D4: return "D4";
        case GaloisLabel::A4: return "A4";
        case GaloisLabel::S4: return "S4";
    }
    throw InputError("unknown galois label");
}

int galois_group_order(GaloisLabel g) {
    switch (g) {
        case GaloisLabel::Trivial: return 1;
        case GaloisLabel::Z2: return 2;
        case GaloisLabel::Z3: return 3;
        case GaloisLabel::Z2xZ2: return 4;
        case GaloisLabel::Z4: return 4;
        case GaloisLabel::S3: return 6;
        case GaloisLabel::D4: return 8;
        case GaloisLabel::A4: return 12;
        case GaloisLabel::S4: return 24;
    }
    throw InputError("unknown galois label");
}

QPoly resolvent_cubic(const QPoly& quartic) {
    if (quartic.degree() != 4) throw InputError("resolvent cubic needs degree 4");
    QPoly f = quartic.monic();
    Rational a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
    return QPoly({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rational(1)});
}

namespace {

// True when the quadratic x^2+Bx+C splits over Q(sqrt(D)), for D a
// nonsquare: its discriminant must be zero, a square, or D times a
// square.
bool splits_over_quadratic_field(const Rational& B, const Rational& C, const Rational& D) {
    Rational disc = B * B - 4 * C;
    if (disc == 0 || is_square(disc)) return true;
    Rational scaled = disc * D;
    return is_square(scaled);
}

GaloisLabel irreducible_cubic_label(const QPoly& f) {
    return is_square(poly_discriminant(f)) ? GaloisLabel::Z3 : GaloisLabel::S3;
}

GaloisLabel irreducible_quartic_label(const QPoly& f0) {
    QPoly f = f0.monic();
    QPoly res = resolvent_cubic(f);
    Factorization rf = factor_upto_quartic(res);
    int rational_resolvent_roots = 0;
    Rational beta;
    for (const auto& [fac, mult] : rf.factors) {
        (void)mult;
        if (fac.degree() == 1) {
            ++rational_resolvent_roots;
            beta = -fac.coeff(0);
        }
    }
    if (rational_resolvent_roots == 3) return GaloisLabel::Z2xZ2;
    if (rational_resolvent_roots == 0)
        return is_square(poly_discriminant(f)) ? GaloisLabel::A4 : GaloisLabel::S4;
    // Exactly one rational resolvent root: cyclic or dihedral of order 8.
    Rational a = f.coeff(3), b = f.coeff(2), d = f.coeff(0);
    Rational D = poly_discriminant(f);
    bool cyclic = splits_over_quadratic_field(-beta, d, D) &&
                  splits_over_quadratic_field(a, b - beta, D);
    return cyclic ? GaloisLabel::Z4 : GaloisLabel::D4;
}

}  // namespace

GaloisLabel quartic_galois_group(const QPoly& a) {
    if (a.degree() < 1 || a.degree() > 4)
        throw InputError("quartic_galois_group needs 1 <= degree <= 4");
    if (!is_squarefree(a)) throw InputError("quartic_galois_group needs squarefree input");
    Factorization fac = factor_upto_quartic(a);

    // Splitting field is the compositum over the irreducible factors.
    std::vector<QPoly> quadratics;
    GaloisLabel big = GaloisLabel::Trivial;
    for (const auto& [f, mult] : fac.factors) {
        (void)mult;
        switch (f.degree()) {
            case 1: break;
            case 2: quadratics.push_back(f); break;
            case 3: big = irreducible_cubic_label(f); break;
            case 4: big = irreducible_quartic_label(f); break;
            default: throw InputError("unexpected factor degree");
        }
    }
    if (big != GaloisLabel::Trivial) return big;  // cubic/quartic factor dominates
    if (quadratics.empty()) return GaloisLabel::Trivial;
    if (quadratics.size() == 1) return GaloisLabel::Z2;
    // Two irreducible quadratics: same quadratic field iff the product
    // of their discriminants is a square.
    Rational d1 = poly_discriminant(quadratics[0]);
    Rational d2 = poly_discriminant(quadratics[1]);
    return is_square(d1 * d2) ? GaloisLabel::Z2 : GaloisLabel::Z2xZ2;
}

}  // namespace dynforms
