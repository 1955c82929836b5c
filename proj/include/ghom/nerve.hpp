#pragma once

#include <vector>

#include "ghom/groupoid.hpp"

namespace ghom {

inline constexpr long kDefaultTupleBudget = 1'000'000;

// Simplicial levels of a finite groupoid up to degree n_max. Level 0 lists
// the units; level n lists composable n-tuples of arrow indices in
// lexicographic order, which pins every chain-group basis. Face and
// degeneracy maps are stored as index arrays.
struct Nerve {
    FiniteGroupoid groupoid;
    long n_max = 0;
    std::vector<std::vector<std::vector<long>>> levels;
    // face[n][i] maps level-n positions to level-(n-1) positions, 1 <= n <= n_max.
    std::vector<std::vector<std::vector<long>>> face;
    // degeneracy[n][j] maps level-n positions to level-(n+1) positions, n < n_max.
    std::vector<std::vector<std::vector<long>>> degeneracy;

    long level_size(long n) const { return static_cast<long>(levels[static_cast<size_t>(n)].size()); }
    long index_of(long n, const std::vector<long>& tuple) const;  // -1 if absent
};

Nerve build_nerve(const FiniteGroupoid& g, long n_max, long tuple_budget = kDefaultTupleBudget);

// Index array of d_i : level n -> level n-1 (1 <= n <= n_max, 0 <= i <= n).
const std::vector<long>& face_map(const Nerve& nv, long n, long i);

// Index array of s_j : level n -> level n+1 (0 <= n < n_max, 0 <= j <= n).
const std::vector<long>& degeneracy_map(const Nerve& nv, long n, long j);

// Exhaustive check of the simplicial identities up to n_max.
ValidationReport check_simplicial_identities(const Nerve& nv);

// Per-level index arrays of the simplicial map induced by a functor;
// level n sends (h_1..h_n) to (f h_1 .. f h_n).
std::vector<std::vector<long>> induced_simplicial_map(const EtaleFunctor& f, const Nerve& dom,
                                                      const Nerve& cod);

}  // namespace ghom
