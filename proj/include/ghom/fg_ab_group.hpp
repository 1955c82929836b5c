#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghom/int_matrix.hpp"
#include "ghom/intx.hpp"

namespace ghom {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
// Two values are isomorphic groups iff they compare equal.
struct FgAbGroup {
    long free_rank = 0;
    std::vector<Int> torsion;

    static FgAbGroup trivial() { return {}; }
    static FgAbGroup free_group(long r) { return {r, {}}; }
    static FgAbGroup cyclic(const Int& m);  // m >= 2
    // Renormalizes arbitrary factors (drops units, merges into a divisor chain).
    static FgAbGroup canonical(long free_rank, std::vector<Int> factors);

    long ngens() const { return free_rank + static_cast<long>(torsion.size()); }
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    // Order of canonical generator i: d_i for torsion generators (listed
    // first), 0 for free generators.
    Int gen_order(long i) const;
    std::optional<Int> order() const;
    bool operator==(const FgAbGroup&) const = default;

    std::string to_string() const;
};

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup tor1(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup hom_group(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup ext1(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup direct_sum(const std::vector<FgAbGroup>& parts);

// Relation lattice of the canonical presentation Z^{ngens} -> G:
// columns d_i * e_i over the torsion generators.
IntMatrix relation_matrix(const FgAbGroup& g);

// Normalizes coordinates on canonical generators: torsion entries into
// [0, d_i), free entries untouched.
std::vector<Int> reduce_coords(const FgAbGroup& g, std::vector<Int> x);

}  // namespace ghom
