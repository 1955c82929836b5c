#pragma once

#include <vector>

#include "ghom/fg_ab_group.hpp"
#include "ghom/groupoid.hpp"
#include "ghom/intx.hpp"

namespace ghom {

// Integer-valued function on the arrows of a finite groupoid. Finiteness
// makes every function compactly supported and every fibre finite, so no
// support bookkeeping is carried.
struct GroupoidFunction {
    FiniteGroupoid groupoid;
    std::vector<Int> values;  // indexed by arrows
};

GroupoidFunction zero_function(const FiniteGroupoid& g);
GroupoidFunction characteristic(const FiniteGroupoid& g, const std::vector<long>& arrows);

// (f1 * f2)(g) = sum over h with s(h) = r(g) of f1(h^{-1}) f2(h g).
GroupoidFunction convolve(const FiniteGroupoid& g, const GroupoidFunction& f1,
                          const GroupoidFunction& f2);

// Characteristic function of the unit set; a global convolution unit in
// the finite case.
GroupoidFunction local_unit(const FiniteGroupoid& g);

// Function with values in a f.g. abelian coefficient group, each value a
// coordinate tuple on the canonical generators.
struct CoeffFunction {
    FgAbGroup coeff;
    std::vector<std::vector<Int>> values;
};

CoeffFunction zero_coeff_function(const FgAbGroup& a, long size);

// Pointwise integer action: (f . zeta)(x) = f(x) . zeta(x).
CoeffFunction scalar_pair(const GroupoidFunction& f, const CoeffFunction& zeta);
CoeffFunction scalar_pair(const std::vector<Int>& f, const CoeffFunction& zeta);

// Fibre-sum transport along an index map, for integer- and coefficient-
// valued functions alike.
std::vector<Int> pushforward_values(const std::vector<long>& map, long codomain_size,
                                    const std::vector<Int>& values);
CoeffFunction pushforward_values(const std::vector<long>& map, long codomain_size,
                                 const CoeffFunction& zeta);

long distinct_value_count(const GroupoidFunction& f);
long distinct_value_count(const CoeffFunction& zeta);

}  // namespace ghom
