#pragma once

#include <optional>
#include <vector>

#include "ghom/fg_ab_group.hpp"
#include "ghom/int_matrix.hpp"

namespace ghom {

// u * M * v = s with u, v unimodular and s = diag(d_1, ..., d_k),
// d_i >= 0 and d_i | d_{i+1}.
struct SmithForm {
    IntMatrix u, s, v;
    long source_rows = 0, source_cols = 0;
    std::vector<Int> diagonal() const;
    long rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Column-style echelon form: M * u = h with u unimodular. Pivot columns
// come first; pivot rows strictly increase, pivots are positive, entries
// above a pivot vanish and entries right of a pivot in its row lie in
// [0, pivot). Earlier columns in a pivot row are reduced into [0, pivot).
struct HermiteForm {
    IntMatrix h, u;
    std::vector<long> pivot_rows;  // pivot of column j sits at (pivot_rows[j], j)
    long rank() const { return static_cast<long>(pivot_rows.size()); }
};

HermiteForm hermite_form(const IntMatrix& m);

// Some integer x with m*x = b, if b lies in the column lattice of m.
// The choice is pinned by the Hermite form, so repeated calls agree.
std::optional<std::vector<Int>> hermite_solve(const IntMatrix& m, const std::vector<Int>& b);

// Columnwise hermite_solve: X with m*X = b, or nullopt if any column fails.
std::optional<IntMatrix> lattice_solve(const IntMatrix& m, const IntMatrix& b);

// Lattice basis of {x : m*x = 0}; exactly cols - rank columns.
IntMatrix integer_kernel(const IntMatrix& m);

// Z^rows / column-lattice(m) in invariant-factor form.
FgAbGroup cokernel_group(const IntMatrix& m);

long rank(const IntMatrix& m);

// Basis of the lattice spanned by the columns (nonzero Hermite columns).
IntMatrix lattice_basis(const IntMatrix& gens);

bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& v);
bool lattice_subset(const IntMatrix& a, const IntMatrix& b);  // lattice(a) <= lattice(b)
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

// Rank of m over the prime field F_p.
long rank_mod_p(IntMatrix m, const Int& p);

}  // namespace ghom
