#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ghom/common.hpp"

namespace ghom {

struct Violation {
    std::string axiom;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string axiom, std::string detail) {
        violations.push_back({std::move(axiom), std::move(detail)});
    }
    std::string to_string() const;
};

// Explicit arrow-level presentation of a finite discrete groupoid.
// Arrows are indexed 0..arrow_count-1 in input order; units are the sorted
// list of unit arrows; source/range map arrows to unit arrows. The
// composition table is kept as a sorted sparse pair table.
struct FiniteGroupoid {
    long arrow_count = 0;
    std::vector<long> units;
    std::vector<long> source, range, inverse;
    std::vector<std::array<long, 3>> compose;  // (a, b, a*b), sorted by (a, b)

    std::optional<long> compose_lookup(long a, long b) const;
    long product(long a, long b) const;  // throws if not composable
    bool is_unit(long a) const;
    long unit_position(long unit_arrow) const;  // index into units, -1 if absent
    void sort_compose_table();

    bool operator==(const FiniteGroupoid&) const = default;
};

ValidationReport validate_groupoid(const FiniteGroupoid& g);

// Composition-first presentation: the composable set is the key set of the
// table, units and source/range are derived. Throws ValidationError with a
// witness if (G1')-(G4') fail.
FiniteGroupoid derive_structure(long arrows, const std::vector<std::array<long, 3>>& compose,
                                const std::vector<long>& inverse);

// Standard constructors.
FiniteGroupoid group_groupoid(const std::vector<std::vector<long>>& table);
FiniteGroupoid pair_groupoid(long n);
FiniteGroupoid unit_groupoid(long n);
FiniteGroupoid transformation_groupoid(const std::vector<std::vector<long>>& group_table,
                                       const std::vector<std::vector<long>>& action);
FiniteGroupoid equivalence_relation_groupoid(long n, const std::vector<std::vector<long>>& partition);
FiniteGroupoid group_bundle_groupoid(const std::vector<std::vector<std::vector<long>>>& tables);
FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts);

// Orbit partition of the unit space, as blocks of unit positions. Blocks
// and their contents are sorted, so the partition is deterministic.
std::vector<std::vector<long>> orbits(const FiniteGroupoid& g);

bool is_saturated(const FiniteGroupoid& g, const std::vector<long>& unit_positions);

struct Reduction {
    FiniteGroupoid groupoid;
    std::vector<long> arrow_map;  // new arrow index -> original arrow index
    bool full = false;            // r(s^{-1}(U)) covers every unit
};

Reduction reduction(const FiniteGroupoid& g, const std::vector<long>& unit_positions);

struct IsotropyResult {
    FiniteGroupoid subgroupoid;
    std::vector<long> arrow_map;
    bool principal = false;
    bool minimal = false;
};

IsotropyResult isotropy(const FiniteGroupoid& g);

// Quotient by a wide normal subgroupoid of isotropy arrows, given as a
// subset of g's arrows. Arrows of the quotient are double cosets.
FiniteGroupoid quotient_by_normal_isotropy(const FiniteGroupoid& g,
                                           const std::vector<long>& normal_arrows);

// Subgroupoid of g spanned by the given arrows (must be closed); the
// optional out-param receives new->old arrow indices.
FiniteGroupoid materialize_subgroupoid(const FiniteGroupoid& g, const std::vector<long>& arrows,
                                       std::vector<long>* arrow_map = nullptr);

// Relabel arrows by a permutation (perm[old] = new); used by invariance tests.
FiniteGroupoid relabel(const FiniteGroupoid& g, const std::vector<long>& perm);

struct EtaleFunctor {
    FiniteGroupoid domain, codomain;
    std::vector<long> arrow_map;  // domain arrow -> codomain arrow
    std::vector<long> unit_map;   // domain unit position -> codomain unit position
};

EtaleFunctor identity_functor(const FiniteGroupoid& g);
EtaleFunctor compose(const EtaleFunctor& outer, const EtaleFunctor& inner);
ValidationReport validate_functor(const EtaleFunctor& f);

// Inclusion of a reduction (or other materialized subgroupoid) into g.
EtaleFunctor inclusion_functor(const FiniteGroupoid& g, const FiniteGroupoid& sub,
                               const std::vector<long>& arrow_map);

}  // namespace ghom
