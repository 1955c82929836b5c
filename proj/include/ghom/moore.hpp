#pragma once

#include "ghom/ab_hom.hpp"
#include "ghom/chain_complex.hpp"
#include "ghom/coefficients.hpp"
#include "ghom/nerve.hpp"
#include "ghom/presentation.hpp"

namespace ghom {

// |Y| x |X| zero-one matrix of the fibre-sum transport along an index map;
// column x has its single 1 in row map[x].
IntMatrix pushforward_matrix(const std::vector<long>& map, long domain_size, long codomain_size);

// Moore complex of a nerve: rank_n = |level n|, d_n the alternating sum of
// face pushforwards. d.d = 0 is verified at construction.
ChainComplex moore_complex(const Nerve& nv);

// Homology at degree n as a subquotient of the chain group, retaining
// coordinates so classes can be chased through maps. Requires n+1 within
// the complex's homology window.
Subquotient homology_presentation(const ChainComplex& c, long n);

FgAbGroup homology(const ChainComplex& c, long n);

// Z and prime fields are computed directly on the chain level; composite
// and mixed coefficient groups go through the UCT splitting.
FgAbGroup homology_with_coefficients(const ChainComplex& c, const CoefficientSpec& a, long n);

HomologyResult homology_range(const ChainComplex& c, const CoefficientSpec& a, long max_degree);

ChainMap induced_chain_map(const EtaleFunctor& f, const Nerve& dom, const Nerve& cod);

AbHom induced_homology_map(const ChainMap& cm, long n);

// Chain homotopy between the pushforwards of two similar functors.
// theta[x] is the codomain arrow linking rho(x) to sigma(x) for each unit
// position x; the naturality identity is checked and the resulting
// homotopy is verified before returning.
ChainHomotopy similarity_chain_homotopy(const EtaleFunctor& rho, const EtaleFunctor& sigma,
                                        const std::vector<long>& theta, long n_max);

}  // namespace ghom
