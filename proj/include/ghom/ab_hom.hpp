#pragma once

#include <utility>

#include "ghom/fg_ab_group.hpp"
#include "ghom/int_matrix.hpp"

namespace ghom {

// Homomorphism of f.g. abelian groups, given on canonical generators.
// Column j is the image of domain generator j, as coordinates on the
// codomain's canonical generators.
struct AbHom {
    FgAbGroup domain, codomain;
    IntMatrix matrix;  // ngens(codomain) x ngens(domain)
};

AbHom identity_hom(const FgAbGroup& g);
AbHom zero_hom(const FgAbGroup& dom, const FgAbGroup& cod);

// Each finite-order domain generator must land in the codomain's relation
// lattice after scaling by its order.
bool well_defined(const AbHom& f);

AbHom compose(const AbHom& outer, const AbHom& inner);

// Equality as homomorphisms: same endpoints and congruent columns modulo
// the codomain relations.
bool hom_equal(const AbHom& f, const AbHom& g);

// Generators (as a lattice over the codomain's free cover) of the image
// subgroup; always contains the codomain relations.
IntMatrix image_lattice(const AbHom& f);

// Basis of {x in Z^{ngens(dom)} : f(x) lies in the codomain relation
// lattice}; contains the domain relations.
IntMatrix kernel_lattice(const AbHom& f);

std::pair<FgAbGroup, FgAbGroup> hom_image_kernel(const AbHom& f);

// image(f) == kernel(g) as subgroups of the middle group, tested by two
// lattice-membership checks on the free cover.
bool check_exact_at(const AbHom& f, const AbHom& g);

bool is_injective(const AbHom& f);
bool is_surjective(const AbHom& f);

}  // namespace ghom
