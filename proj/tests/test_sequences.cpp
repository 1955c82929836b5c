#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghom/normal_forms.hpp"
#include "ghom/sequences.hpp"

using namespace ghom;

namespace {

std::vector<std::vector<long>> cyclic_table(long n) {
    std::vector<std::vector<long>> t(static_cast<size_t>(n), std::vector<long>(static_cast<size_t>(n)));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    return t;
}

ChainSES two_term_example() {
    // sub: C_0 = Z, C_1 = 0;  mid: Z --x2--> Z;  quot: C_1 = Z, C_0 = 0.
    ChainSES ses;
    ses.sub = complex_from_dense({1, 0}, {IntMatrix(1, 0)});
    ses.mid = complex_from_dense({1, 1}, {IntMatrix::from_rows({{2}})});
    ses.quot = complex_from_dense({0, 1}, {IntMatrix(0, 1)});
    ses.inject.source = ses.sub;
    ses.inject.target = ses.mid;
    ses.inject.mats = {IntMatrix::identity(1), IntMatrix(1, 0)};
    ses.project.source = ses.mid;
    ses.project.target = ses.quot;
    ses.project.mats = {IntMatrix(0, 1), IntMatrix::identity(1)};
    return ses;
}

const LesNode* find_node(const LongExactSequence& les, long degree, NodeTag tag) {
    for (const auto& n : les.nodes)
        if (n.degree == degree && n.tag == tag) return &n;
    return nullptr;
}

}  // namespace

TEST_CASE("snake chase on the two-term complex gives multiplication by 2") {
    ChainSES ses = two_term_example();
    CHECK(verify_ses(ses).ok());
    LongExactSequence les = snake_les(ses, 1);
    CHECK(verify_exactness(les).ok());

    CHECK(find_node(les, 1, NodeTag::Quot)->group == FgAbGroup::free_group(1));
    CHECK(find_node(les, 0, NodeTag::Sub)->group == FgAbGroup::free_group(1));
    CHECK(find_node(les, 0, NodeTag::Mid)->group == FgAbGroup::cyclic(2));

    // The connecting map H_1(quot) -> H_0(sub) is x2 up to sign.
    for (size_t k = 0; k + 1 < les.nodes.size(); ++k)
        if (les.nodes[k].tag == NodeTag::Quot && les.nodes[k].degree == 1) {
            const AbHom& conn = les.maps[k];
            CHECK(abs_int(conn.matrix.at(0, 0)) == 2);
        }
}

TEST_CASE("zero quotient degenerates the LES to isomorphisms") {
    ChainSES ses;
    ses.sub = complex_from_dense({1, 1}, {IntMatrix::from_rows({{3}})});
    ses.mid = ses.sub;
    ses.quot = complex_from_dense({0, 0}, {IntMatrix(0, 0)});
    ses.inject.source = ses.sub;
    ses.inject.target = ses.mid;
    ses.inject.mats = {IntMatrix::identity(1), IntMatrix::identity(1)};
    ses.project.source = ses.mid;
    ses.project.target = ses.quot;
    ses.project.mats = {IntMatrix(0, 1), IntMatrix(0, 1)};
    LongExactSequence les = snake_les(ses, 1);
    CHECK(verify_exactness(les).ok());
    for (size_t k = 0; k + 1 < les.nodes.size(); ++k)
        if (les.nodes[k].tag == NodeTag::Sub && les.nodes[k].degree >= 0) {
            const AbHom& m = les.maps[k];
            auto [im, ker] = hom_image_kernel(m);
            CHECK(ker.is_trivial());
            CHECK(im == m.codomain);
        }
}

TEST_CASE("hand-built non-exact sequence is caught") {
    LongExactSequence les;
    FgAbGroup z = FgAbGroup::free_group(1);
    les.nodes = {{z, 1, NodeTag::Sub}, {z, 1, NodeTag::Mid}, {z, 1, NodeTag::Quot}};
    AbHom times2{z, z, IntMatrix::from_rows({{2}})};
    les.maps = {times2, times2};
    ValidationReport rep = verify_exactness(les);
    CHECK(!rep.ok());
}

TEST_CASE("subgroupoid SES of Z/4 with the even subgroup") {
    FiniteGroupoid z4 = group_groupoid(cyclic_table(4));
    ChainSES ses = subgroupoid_ses(z4, {0, 2}, 2);
    // Rank bookkeeping at degree 1: 2 + 2 = 4.
    CHECK(ses.sub.rank(1) == 2);
    CHECK(ses.quot.rank(1) == 2);
    CHECK(ses.mid.rank(1) == 4);
    CHECK(verify_ses(ses).ok());
    LongExactSequence les = snake_les(ses, 2);
    CHECK(verify_exactness(les).ok());
    // H_n(sub) is the bar homology of Z/2.
    CHECK(find_node(les, 0, NodeTag::Sub)->group == FgAbGroup::free_group(1));
    CHECK(find_node(les, 1, NodeTag::Sub)->group == FgAbGroup::cyclic(2));
    CHECK(find_node(les, 1, NodeTag::Mid)->group == FgAbGroup::cyclic(4));
}

TEST_CASE("subgroupoid SES edge cases") {
    FiniteGroupoid z4 = group_groupoid(cyclic_table(4));
    // Whole groupoid: quotient complex is zero.
    ChainSES all = subgroupoid_ses(z4, {0, 1, 2, 3}, 1);
    for (long n = 0; n <= 2; ++n) CHECK(all.quot.rank(n) == 0);

    // Unit subgroupoid of pair(2): the complement at degree 1 is the two
    // off-diagonal arrows.
    FiniteGroupoid p2 = pair_groupoid(2);
    ChainSES units = subgroupoid_ses(p2, {0, 3}, 1);
    CHECK(units.quot.rank(1) == 2);

    CHECK_THROWS_AS(subgroupoid_ses(p2, {0}, 1), ValidationError);      // not wide
    CHECK_THROWS_AS(subgroupoid_ses(p2, {0, 1, 3}, 1), ValidationError);  // not closed
}

TEST_CASE("Mayer-Vietoris over a three-component union recovers the direct sum") {
    FiniteGroupoid g =
        disjoint_union({pair_groupoid(2), group_groupoid(cyclic_table(2)), pair_groupoid(1)});
    // Unit positions: component 1 = {0,1}, component 2 = {2}, component 3 = {3}.
    MvCover cover{g, {0, 1, 2}, {2, 3}};
    ChainSES ses = mv_ses(cover, 2);
    CHECK(verify_ses(ses).ok());
    // Overlap complex is the bar complex of Z/2.
    CHECK(ses.sub.rank(1) == 2);

    LongExactSequence les = mv_les(cover, 2);
    CHECK(verify_exactness(les).ok());

    // All connecting maps vanish and H_n(whole) is the direct sum.
    for (size_t k = 0; k + 1 < les.nodes.size(); ++k)
        if (les.nodes[k].tag == NodeTag::Quot && les.nodes[k].degree >= 1)
            CHECK(les.maps[k].matrix.is_zero());
    CHECK(find_node(les, 0, NodeTag::Quot)->group == FgAbGroup::free_group(3));
    CHECK(find_node(les, 1, NodeTag::Quot)->group == FgAbGroup::cyclic(2));
}

TEST_CASE("degenerate and disjoint covers") {
    FiniteGroupoid g = disjoint_union({pair_groupoid(2), pair_groupoid(2)});

    // U1 empty, U2 everything: accepted, overlap complex empty.
    MvCover degenerate{g, {}, {0, 1, 2, 3}};
    ChainSES ses = mv_ses(degenerate, 1);
    for (long n = 0; n <= 2; ++n) CHECK(ses.sub.rank(n) == 0);
    CHECK(verify_exactness(snake_les(ses, 1)).ok());

    // U1 = U2 = everything: the LES splits against the diagonal.
    MvCover diagonal{g, {0, 1, 2, 3}, {0, 1, 2, 3}};
    CHECK(verify_exactness(mv_les(diagonal, 1)).ok());

    // Disjoint cover: overlap nodes vanish, beta is injective and surjective
    // on homology.
    MvCover disjoint{g, {0, 1}, {2, 3}};
    LongExactSequence les = mv_les(disjoint, 1);
    CHECK(verify_exactness(les).ok());
    for (const auto& node : les.nodes)
        if (node.tag == NodeTag::Sub && node.degree >= 0) CHECK(node.group.is_trivial());

    // A non-saturated cover is rejected, but accepted with the
    // support-local flag.
    FiniteGroupoid p2 = pair_groupoid(2);
    MvCover bad{p2, {0}, {1}};
    CHECK_THROWS_AS((void)mv_ses(bad, 1), ValidationError);
    ChainSES local = mv_ses(bad, 1, true);
    CHECK(verify_ses(local).ok());
    LongExactSequence les_local = snake_les(local, 1);
    CHECK(verify_exactness(les_local).ok());
}

TEST_CASE("uct_homology on the combined SFT groups") {
    HomologyResult h;
    h.coeff = CoefficientSpec::integers();
    h.groups = {FgAbGroup::canonical(1, {Int(2), Int(2)}), FgAbGroup::free_group(1)};

    UctSequence u2 = uct_homology(h, CoefficientSpec::mod(2), 1);
    CHECK(u2.left == FgAbGroup::cyclic(2));
    CHECK(u2.right == FgAbGroup::canonical(0, {Int(2), Int(2)}));
    CHECK(u2.middle == FgAbGroup::canonical(0, {Int(2), Int(2), Int(2)}));
    CHECK(is_injective(u2.iota));
    CHECK(is_surjective(u2.kappa));
    CHECK(check_exact_at(u2.iota, u2.kappa));
    CHECK(u2.middle == direct_sum({u2.left, u2.right}));

    UctSequence u3 = uct_homology(h, CoefficientSpec::mod(3), 1);
    CHECK(u3.right.is_trivial());
    CHECK(u3.middle == FgAbGroup::cyclic(3));

    UctSequence uz = uct_homology(h, CoefficientSpec::integers(), 1);
    CHECK(uz.right.is_trivial());
    CHECK(uz.middle == h.groups[1]);
}

TEST_CASE("uct splitting maps are exact for mixed groups") {
    HomologyResult h;
    h.coeff = CoefficientSpec::integers();
    h.groups = {FgAbGroup::canonical(1, {Int(4)}), FgAbGroup::canonical(2, {Int(6)})};
    for (const CoefficientSpec& a :
         {CoefficientSpec::mod(2), CoefficientSpec::mod(12),
          CoefficientSpec::group(FgAbGroup::canonical(1, {Int(2)}))}) {
        UctSequence u = uct_homology(h, a, 1);
        CHECK(is_injective(u.iota));
        CHECK(is_surjective(u.kappa));
        CHECK(check_exact_at(u.iota, u.kappa));
        CHECK(u.middle == direct_sum({u.left, u.right}));
    }
}

TEST_CASE("dual cochain complex and integral cohomology of Z/2") {
    ChainComplex c = moore_complex(build_nerve(group_groupoid(cyclic_table(2)), 3));
    DualComplex d = dual_cochain_complex(c, CoefficientSpec::integers());
    // delta o delta = 0 and delta is the transpose of the boundary.
    for (long n = 0; n + 1 <= d.top_degree(); ++n) CHECK((d.delta(n + 1) * d.delta(n)).is_zero());
    for (long n = 0; n <= d.top_degree(); ++n)
        CHECK(d.delta(n) == c.boundary_dense(n + 1).transpose());

    CHECK(cohomology(d, 0) == FgAbGroup::free_group(1));
    CHECK(cohomology(d, 1) == FgAbGroup::trivial());
    CHECK(cohomology(d, 2) == FgAbGroup::cyclic(2));
}

TEST_CASE("cohomology of the unit groupoid") {
    ChainComplex c = moore_complex(build_nerve(unit_groupoid(4), 3));
    DualComplex d = dual_cochain_complex(c, CoefficientSpec::integers());
    CHECK(cohomology(d, 0) == FgAbGroup::free_group(4));
    CHECK(cohomology(d, 1) == FgAbGroup::trivial());
    CHECK(cohomology(d, 2) == FgAbGroup::trivial());
}

TEST_CASE("mod-2 cohomology of Z/2") {
    ChainComplex c = moore_complex(build_nerve(group_groupoid(cyclic_table(2)), 3));
    DualComplex d = dual_cochain_complex(c, CoefficientSpec::mod(2));
    for (long n = 0; n <= 2; ++n) CHECK(cohomology(d, n) == FgAbGroup::cyclic(2));
}

TEST_CASE("uct_cohomology matches direct cochain computation") {
    ChainComplex c = moore_complex(build_nerve(group_groupoid(cyclic_table(2)), 3));
    HomologyResult h = homology_range(c, CoefficientSpec::integers(), 2);

    UctSequence u = uct_cohomology(h, CoefficientSpec::integers(), 2);
    CHECK(u.left == FgAbGroup::cyclic(2));   // Ext(Z/2, Z)
    CHECK(u.right == FgAbGroup::trivial());  // Hom(0, Z)
    CHECK(u.middle == FgAbGroup::cyclic(2));

    // Degree 0: the Ext term vanishes against H_{-1} = 0.
    UctSequence u0 = uct_cohomology(h, CoefficientSpec::integers(), 0);
    CHECK(u0.left.is_trivial());
    CHECK(u0.middle == hom_group(h.groups[0], FgAbGroup::free_group(1)));

    // Mixed coefficient group: Ext(Z/2, Z + Z/2) = Z/2 + Z/2... the Z part
    // contributes Z/2 and the torsion part gcd(2,2).
    UctSequence um = uct_cohomology(h, CoefficientSpec::group(FgAbGroup::canonical(1, {Int(2)})), 2);
    CHECK(um.left == FgAbGroup::canonical(0, {Int(2), Int(2)}));

    DualComplex d = dual_cochain_complex(c, CoefficientSpec::integers());
    for (long n = 0; n <= 2; ++n)
        CHECK(uct_cohomology(h, CoefficientSpec::integers(), n).middle == cohomology(d, n));
}

TEST_CASE("pullback coboundary coincides with the dual-complex coboundary") {
    // delta^n(zeta) = sum (-1)^i zeta o d_i, built directly from face maps.
    for (const FiniteGroupoid& g : {pair_groupoid(2), group_groupoid(cyclic_table(4)),
                                    unit_groupoid(3),
                                    disjoint_union({pair_groupoid(2), group_groupoid(cyclic_table(2))})}) {
        Nerve nv = build_nerve(g, 3);
        ChainComplex c = moore_complex(nv);
        DualComplex d = dual_cochain_complex(c, CoefficientSpec::integers());
        for (long n = 0; n + 1 <= 3; ++n) {
            IntMatrix pullback(c.rank(n + 1), c.rank(n));
            for (long i = 0; i <= n + 1; ++i) {
                const auto& fi = nv.face[static_cast<size_t>(n + 1)][static_cast<size_t>(i)];
                Int sign = (i % 2 == 0) ? 1 : -1;
                // (zeta o d_i) has matrix P_i^T: entry (tuple, d_i(tuple)).
                for (long p = 0; p < c.rank(n + 1); ++p)
                    pullback.at(p, fi[static_cast<size_t>(p)]) += sign;
            }
            CHECK(pullback == d.delta(n));
        }
    }
}

TEST_CASE("uct naturality on the subgroupoid SES of Z/4") {
    FiniteGroupoid z4 = group_groupoid(cyclic_table(4));
    ChainSES ses = subgroupoid_ses(z4, {0, 2}, 2);
    for (const CoefficientSpec& a :
         {CoefficientSpec::mod(2), CoefficientSpec::mod(4),
          CoefficientSpec::group(FgAbGroup::canonical(1, {Int(2)}))}) {
        ValidationReport rep = uct_naturality_check(ses, a, 2);
        INFO(rep.to_string());
        CHECK(rep.ok());
    }
}

TEST_CASE("uct naturality on degenerate and Mayer-Vietoris sequences") {
    FiniteGroupoid z4 = group_groupoid(cyclic_table(4));
    ChainSES whole = subgroupoid_ses(z4, {0, 1, 2, 3}, 1);
    CHECK(uct_naturality_check(whole, CoefficientSpec::mod(2), 1).ok());

    FiniteGroupoid g = disjoint_union({pair_groupoid(2), group_groupoid(cyclic_table(2))});
    MvCover disjoint{g, {0, 1}, {2}};
    ChainSES mv = mv_ses(disjoint, 1);
    CHECK(uct_naturality_check(mv, CoefficientSpec::mod(4), 1).ok());
}

TEST_CASE("the empty groupoid is a first-class value end to end") {
    FiniteGroupoid empty;
    CHECK(validate_groupoid(empty).ok());
    Nerve nv = build_nerve(empty, 3);
    CHECK(check_simplicial_identities(nv).ok());
    ChainComplex c = moore_complex(nv);
    for (long n = 0; n <= 2; ++n) CHECK(homology(c, n).is_trivial());

    MvCover cover{empty, {}, {}};
    CHECK(verify_exactness(mv_les(cover, 2)).ok());
    ChainSES ses = subgroupoid_ses(empty, {}, 2);
    CHECK(verify_exactness(snake_les(ses, 2)).ok());
    CHECK(uct_naturality_check(ses, CoefficientSpec::mod(4), 2).ok());

    CHECK(orbits(empty).empty());
    IsotropyResult iso = isotropy(empty);
    CHECK(iso.principal);
    CHECK(reduction(empty, {}).full);  // vacuously
}

TEST_CASE("concrete coefficient homology agrees with the UCT route") {
    for (const FiniteGroupoid& g : {group_groupoid(cyclic_table(2)), group_groupoid(cyclic_table(4)),
                                    pair_groupoid(2),
                                    disjoint_union({pair_groupoid(2), group_groupoid(cyclic_table(2))})}) {
        ChainComplex c = moore_complex(build_nerve(g, 3));
        for (const CoefficientSpec& a :
             {CoefficientSpec::mod(2), CoefficientSpec::mod(4), CoefficientSpec::mod(6),
              CoefficientSpec::group(FgAbGroup::canonical(1, {Int(2)}))}) {
            for (long n = 0; n <= 2; ++n) {
                FgAbGroup via_uct = homology_with_coefficients(c, a, n);
                FgAbGroup via_chains = coefficient_homology_group(c, a.as_group(), n);
                CHECK(via_uct == via_chains);
            }
        }
    }
}
