#include "ghom/presentation.hpp"

#include <cassert>

#include "ghom/common.hpp"

namespace ghom {

std::vector<Int> PresentedQuotient::class_of(const std::vector<Int>& x) const {
    return reduce_coords(group, to_canonical.apply(x));
}

PresentedQuotient quotient_presentation(long n, const IntMatrix& rels) {
    if (rels.rows() != n) throw Error("quotient_presentation: relation rows must match ambient dim");
    SmithForm f = smith_normal_form(rels);
    std::vector<Int> diag = f.diagonal();

    // u * rels * v = s, so w = u * x puts the lattice in diagonal position:
    // torsion coordinate per 2 <= d_i, dropped coordinate per d_i = 1,
    // free coordinate per zero row.
    std::vector<long> torsion_rows, free_rows;
    std::vector<Int> factors;
    for (size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 0) {
            free_rows.push_back(static_cast<long>(i));
        } else if (diag[i] != 1) {
            torsion_rows.push_back(static_cast<long>(i));
            factors.push_back(diag[i]);
        }
    }
    for (long i = static_cast<long>(diag.size()); i < n; ++i) free_rows.push_back(i);

    std::vector<long> selected = torsion_rows;
    selected.insert(selected.end(), free_rows.begin(), free_rows.end());

    PresentedQuotient q;
    q.ambient_dim = n;
    q.group.free_rank = static_cast<long>(free_rows.size());
    q.group.torsion = std::move(factors);
    q.to_canonical = f.u.select_rows(selected);

    // representative: columns of u^{-1} at the selected positions.
    auto uinv = lattice_solve(f.u, IntMatrix::identity(n));
    assert(uinv.has_value());
    q.representative = uinv->select_cols(selected);
    return q;
}

std::vector<Int> Subquotient::class_of(const std::vector<Int>& x) const {
    auto y = hermite_solve(basis, x);
    if (!y) throw Error("Subquotient::class_of: element not in the numerator lattice");
    return inner.class_of(*y);
}

std::vector<Int> Subquotient::representative(long i) const {
    return basis.apply(inner.representative.col(i));
}

Subquotient subquotient(long n, const IntMatrix& numerator_gens, const IntMatrix& denominator_gens) {
    if (numerator_gens.rows() != n || denominator_gens.rows() != n)
        throw Error("subquotient: ambient dimension mismatch");
    Subquotient s;
    s.ambient_dim = n;
    s.basis = lattice_basis(numerator_gens);
    auto denom = lattice_solve(s.basis, denominator_gens);
    if (!denom) throw Error("subquotient: denominator not contained in numerator lattice");
    s.inner = quotient_presentation(s.basis.cols(), *denom);
    return s;
}

}  // namespace ghom
