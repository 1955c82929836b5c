#pragma once

#include <vector>

#include "ghom/fg_ab_group.hpp"
#include "ghom/int_matrix.hpp"
#include "ghom/normal_forms.hpp"

namespace ghom {

// Canonical decomposition of Z^n / column-lattice(rels), with coordinate
// maps in both directions. to_canonical sends ambient coordinates to
// canonical-generator coordinates (reduce afterwards); representative
// lifts a canonical generator back to Z^n.
struct PresentedQuotient {
    FgAbGroup group;
    long ambient_dim = 0;
    IntMatrix to_canonical;   // ngens x n
    IntMatrix representative; // n x ngens

    std::vector<Int> class_of(const std::vector<Int>& x) const;
};

PresentedQuotient quotient_presentation(long n, const IntMatrix& rels);

// Subquotient L/D of Z^n where L = lattice(numerator_gens) and
// D = lattice(denominator_gens) with D <= L. Elements are handled in
// ambient coordinates throughout.
struct Subquotient {
    long ambient_dim = 0;
    IntMatrix basis;  // n x z lattice basis of L
    PresentedQuotient inner;

    const FgAbGroup& group() const { return inner.group; }
    // x must lie in L.
    std::vector<Int> class_of(const std::vector<Int>& x) const;
    // Ambient representative of canonical generator i.
    std::vector<Int> representative(long i) const;
};

Subquotient subquotient(long n, const IntMatrix& numerator_gens, const IntMatrix& denominator_gens);

}  // namespace ghom
