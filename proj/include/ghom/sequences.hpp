#pragma once

#include <string>
#include <vector>

#include "ghom/ab_hom.hpp"
#include "ghom/chain_complex.hpp"
#include "ghom/coefficients.hpp"
#include "ghom/convolution.hpp"
#include "ghom/moore.hpp"

namespace ghom {

// Degreewise-split short exact sequence of chain complexes
// 0 -> sub -> mid -> quot -> 0.
struct ChainSES {
    ChainComplex sub, mid, quot;
    ChainMap inject, project;
};

// Degreewise checks: inject injective, project surjective, image = kernel
// as lattices, plus both chain-map squares.
ValidationReport verify_ses(const ChainSES& ses);

enum class NodeTag { Sub, Mid, Quot };

struct LesNode {
    FgAbGroup group;
    long degree = 0;
    NodeTag tag = NodeTag::Sub;
};

// Long exact sequence, highest degree first:
// H_n(sub) -> H_n(mid) -> H_n(quot) -> H_{n-1}(sub) -> ... -> H_0(quot) -> 0.
struct LongExactSequence {
    std::vector<LesNode> nodes;
    std::vector<AbHom> maps;  // maps[i] : nodes[i] -> nodes[i+1]
};

// Connecting maps are computed by the lift / boundary / pull-back chase,
// with lifts pinned by hermite_solve.
LongExactSequence snake_les(const ChainSES& ses, long n_max);

ValidationReport verify_exactness(const LongExactSequence& les);

// Canonical SES of a wide open subgroupoid (arrow subset containing every
// unit): chains on the subgroupoid include by zero-extension, the quotient
// is carried by the complementary tuples.
ChainSES subgroupoid_ses(const FiniteGroupoid& g, const std::vector<long>& sub_arrows, long n_max);

struct MvCover {
    FiniteGroupoid groupoid;
    std::vector<long> u1, u2;  // unit positions
};

// alpha(xi) = (xi, -xi) into the two reductions, beta = summed zero
// extensions onto the whole groupoid. The support-local variant replaces
// the quotient complex by chains on the union of the two reduced nerves
// and drops the saturation requirement.
ChainSES mv_ses(const MvCover& cover, long n_max, bool support_local = false);
LongExactSequence mv_les(const MvCover& cover, long n_max, bool support_local = false);

struct UctSequence {
    long degree = 0;
    FgAbGroup left, middle, right;
    AbHom iota;   // left -> middle, injective
    AbHom kappa;  // middle -> right, surjective
};

// 0 -> H_n (x) A -> H_n(-; A) -> Tor(H_{n-1}, A) -> 0 with the middle
// realized as the split direct sum and coordinate splitting maps.
UctSequence uct_homology(const HomologyResult& h_integral, const CoefficientSpec& a, long n);

// Cochain complex dual to an integral chain complex: C^n = A^{rank_n},
// delta^n the transpose of d_{n+1} acting on coefficient vectors.
struct DualComplex {
    ChainComplex primal;
    CoefficientSpec coeff;

    IntMatrix delta(long n) const;  // C^n -> C^{n+1}
    long top_degree() const { return primal.top_homology_degree(); }
};

DualComplex dual_cochain_complex(const ChainComplex& c, const CoefficientSpec& a);

// ker(delta^n)/im(delta^{n-1}); Z and prime fields directly, general
// coefficients through the Ext-Hom splitting.
FgAbGroup cohomology(const DualComplex& d, long n);

// 0 -> Ext(H_{n-1}, A) -> H^n(-; A) -> Hom(H_n, A) -> 0.
UctSequence uct_cohomology(const HomologyResult& h_integral, const CoefficientSpec& a, long n);

// Builds the three UCT rows of a short exact sequence of free complexes
// with honest chain-level vertical maps (coefficient homology computed as
// a subquotient of A-valued chains, Tor as the kernel of B (x) A -> Z (x) A)
// and checks every square on generators.
ValidationReport uct_naturality_check(const ChainSES& ses, const CoefficientSpec& a, long n_max);

// Chain-level model of H_n(C; A) for any f.g. A, computed as a subquotient
// of A-valued chains. Independent of the UCT splitting; the two must agree.
FgAbGroup coefficient_homology_group(const ChainComplex& c, const FgAbGroup& A, long n);

// True iff the function takes finitely many distinct values; trivially
// true at finite scale, exposed so the tensor-comparison invariant can be
// stated against images of the comparison map.
bool finite_image_predicate(const GroupoidFunction& f);
bool finite_image_predicate(const CoeffFunction& zeta);

}  // namespace ghom
