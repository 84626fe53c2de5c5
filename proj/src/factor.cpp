#include "dynforms/factor.hpp"

#include <algorithm>

#include "dynforms/errors.hpp"

namespace dynforms {

std::vector<Integer> positive_divisors(const Integer& n) {
    if (n == 0) throw InputError("divisors of zero");
    Integer m = abs(n);
    std::vector<Integer> small, large;
    Integer i = 1;
    while (i * i <= m) {
        if (m % i == 0) {
            small.push_back(i);
            Integer j = m / i;
            if (j != i) large.push_back(j);
        }
        i += 1;
    }
    for (std::size_t k = large.size(); k-- > 0;) small.push_back(large[k]);
    return small;
}

namespace {

// Primitive integer model: clears denominators and the integer content.
std::vector<Integer> primitive_int_coeffs(const QPoly& a) {
    Integer lcm_den = 1;
    for (const Rational& c : a.coeffs())
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> out;
    out.reserve(a.coeffs().size());
    Integer content = 0;
    for (const Rational& c : a.coeffs()) {
        Rational scaled = c * Rational(lcm_den);
        out.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    if (content > 1)
        for (Integer& c : out) c /= content;
    return out;
}

int root_multiplicity(QPoly& a, const Rational& x) {
    int mult = 0;
    QPoly lin({-x, Rational(1)});
    while (!a.zero() && a.eval(x) == 0) {
        a = a.exact_div(lin);
        ++mult;
        if (a.degree() < 0) break;
    }
    return mult;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const QPoly& a) {
    if (a.zero()) throw InputError("rational roots of zero polynomial");
    std::vector<std::pair<Rational, int>> roots;
    QPoly rem = a;
    // Strip powers of z first so the constant coefficient is nonzero.
    {
        int mult = 0;
        while (rem.degree() >= 1 && rem.coeff(0) == 0) {
            rem = rem.exact_div(QPoly({Rational(0), Rational(1)}));
            ++mult;
        }
        if (mult > 0) roots.emplace_back(Rational(0), mult);
    }
    if (rem.degree() < 1) return roots;
    std::vector<Integer> ic = primitive_int_coeffs(rem);
    Integer c0 = ic.front(), cl = ic.back();
    std::vector<Integer> nums = positive_divisors(c0);
    std::vector<Integer> dens = positive_divisors(cl);
    for (const Integer& n : nums) {
        for (const Integer& d : dens) {
            for (int sign = 0; sign < 2; ++sign) {
                Rational cand(sign ? -n : n, d);
                cand.canonicalize();
                if (rem.eval(cand) != 0) continue;
                int mult = root_multiplicity(rem, cand);
                roots.emplace_back(cand, mult);
            }
            if (rem.degree() < 1) break;
        }
        if (rem.degree() < 1) break;
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return roots;
}

namespace {

// Irreducible-factor list of a *squarefree monic* polynomial of degree
// <= 4 with no rational roots left to strip.
std::vector<QPoly> split_rootless(const QPoly& f) {
    int deg = f.degree();
    if (deg <= 1) return deg == 1 ? std::vector<QPoly>{f} : std::vector<QPoly>{};
    if (deg == 2 || deg == 3) return {f};  // no rational root => irreducible
    // Quartic: depress with z = y - b3/4, look for quadratic x quadratic.
    Rational b3 = f.coeff(3);
    Rational shift = -b3 / 4;
    QPoly dep = f.compose(QPoly({shift, Rational(1)}));
    Rational p = dep.coeff(2), q = dep.coeff(1), r = dep.coeff(0);
    auto undepress = [&](const QPoly& g) {
        return g.compose(QPoly({-shift, Rational(1)}));
    };
    auto quad = [](const Rational& lin, const Rational& cst) {
        return QPoly({cst, lin, Rational(1)});
    };
    if (q == 0) {
        // (y^2+u)(y^2+v) with u+v = p, uv = r.
        Rational disc = p * p - 4 * r;
        if (is_square(disc)) {
            Rational s = sqrt_exact(disc);
            Rational u = (p + s) / 2, v = (p - s) / 2;
            return {undepress(quad(Rational(0), u)).monic(),
                    undepress(quad(Rational(0), v)).monic()};
        }
        // (y^2+uy+v)(y^2-uy+v) with v^2 = r, u^2 = 2v - p, u != 0.
        if (is_square(r)) {
            for (int sign = 0; sign < 2; ++sign) {
                Rational v = sqrt_exact(r);
                if (sign) v = -v;
                Rational u2 = 2 * v - p;
                if (u2 > 0 && is_square(u2)) {
                    Rational u = sqrt_exact(u2);
                    return {undepress(quad(u, v)).monic(), undepress(quad(-u, v)).monic()};
                }
            }
        }
        return {f};
    }
    // q != 0: u^2 = t must be a positive square root of the cubic
    // resolvent t^3 + 2p t^2 + (p^2-4r) t - q^2.
    QPoly resolvent({-q * q, p * p - 4 * r, 2 * p, Rational(1)});
    for (const auto& [t, mult] : rational_roots(resolvent)) {
        (void)mult;
        if (t <= 0 || !is_square(t)) continue;
        Rational u = sqrt_exact(t);
        Rational v = (p + t - q / u) / 2;
        Rational w = (p + t + q / u) / 2;
        if (v * w != r) continue;
        return {undepress(quad(u, v)).monic(), undepress(quad(-u, w)).monic()};
    }
    return {f};
}

}  // namespace

Factorization factor_upto_quartic(const QPoly& a) {
    if (a.degree() < 1 || a.degree() > 4)
        throw InputError("factor_upto_quartic needs 1 <= degree <= 4");
    Factorization out;
    out.content = a.leading();
    QPoly monic = a.monic();

    // Linear factors from rational roots (with multiplicity), then the
    // rootless cofactor split by squarefree level.
    QPoly rem = monic;
    for (const auto& [x, mult] : rational_roots(monic)) {
        QPoly lin({-x, Rational(1)});
        out.factors.emplace_back(lin, mult);
        for (int i = 0; i < mult; ++i) rem = rem.exact_div(lin);
    }
    if (rem.degree() >= 1) {
        QPoly sf = squarefree_part(rem);
        for (const QPoly& f : split_rootless(sf)) {
            int mult = 0;
            QPoly probe = rem;
            while (true) {
                auto [qt, rt] = probe.divmod(f);
                if (!rt.zero()) break;
                probe = qt;
                ++mult;
            }
            out.factors.emplace_back(f, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree())
            return x.first.degree() < y.first.degree();
        for (int i = x.first.degree(); i >= 0; --i) {
            if (x.first.coeff(i) != y.first.coeff(i))
                return x.first.coeff(i) < y.first.coeff(i);
        }
        return false;
    });
    return out;
}

}  // namespace dynforms
