#pragma once

#include <string>

#include "dynforms/factor.hpp"

namespace dynforms {

// Galois group of the splitting field of a squarefree polynomial of
// degree <= 4 over the rationals.
enum class GaloisLabel { Trivial, Z2, Z3, Z2xZ2, Z4, S3, D4, A4, S4 };

std::string galois_label_str(GaloisLabel g);
int galois_group_order(GaloisLabel g);

// Classification by factorization pattern; irreducible quartics go
// through the resolvent cubic, the discriminant square test, and the
// Kappe-Warren style criterion for the cyclic-vs-dihedral case.
GaloisLabel quartic_galois_group(const QPoly& a);

// Resolvent cubic of a monic quartic x^4+ax^3+bx^2+cx+d:
// y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2).
QPoly resolvent_cubic(const QPoly& quartic);

}  // namespace dynforms
