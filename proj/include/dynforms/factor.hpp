#pragma once

#include <utility>
#include <vector>

#include "dynforms/rational.hpp"
#include "dynforms/unipoly.hpp"

namespace dynforms {

using QPoly = UniPoly<Rational>;

struct Factorization {
    // input = content * prod factor[i] ^ multiplicity[i], factors monic
    // and irreducible over the rationals.
    Rational content;
    std::vector<std::pair<QPoly, int>> factors;

    QPoly reassemble() const {
        QPoly acc = QPoly::constant(content);
        for (const auto& [f, m] : factors) acc *= f.pow(m);
        return acc;
    }
};

// All rational roots of a nonzero rational polynomial, with
// multiplicities, found by divisor search on the primitive integer
// model. Works in any degree.
std::vector<std::pair<Rational, int>> rational_roots(const QPoly& a);

// Complete factorization into rational irreducibles for 1 <= deg <= 4:
// rational roots by divisor search, quadratic splits of quartics via
// rational roots of the resolvent cubic plus exact square tests.
Factorization factor_upto_quartic(const QPoly& a);

// Divisors of |n| (positive), n != 0.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace dynforms
