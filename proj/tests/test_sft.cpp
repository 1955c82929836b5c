#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ghom/normal_forms.hpp"
#include "ghom/sequences.hpp"
#include "ghom/sft.hpp"

using namespace ghom;

namespace {

SftSpec spec_a() { return {IntMatrix::from_rows({{2, 1}, {1, 0}})}; }
SftSpec spec_b() { return {IntMatrix::from_rows({{2, 1}, {1, 2}})}; }
SftSpec spec_c() { return {IntMatrix::from_rows({{3}})}; }

SftSpec random_spec(std::mt19937& rng, long n) {
    std::uniform_int_distribution<int> entry(0, 3);
    while (true) {
        IntMatrix m(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) m.at(i, j) = entry(rng);
        SftSpec s{m};
        try {
            validate_sft(s);
            return s;
        } catch (const ValidationError&) {
        }
    }
}

}  // namespace

TEST_CASE("golden values for A, B, C") {
    HomologyResult a = sft_homology(spec_a(), 3);
    CHECK(a.groups[0] == FgAbGroup::cyclic(2));
    CHECK(a.groups[1] == FgAbGroup::trivial());
    CHECK(a.groups[2] == FgAbGroup::trivial());
    CHECK(a.groups[3] == FgAbGroup::trivial());

    HomologyResult b = sft_homology(spec_b(), 2);
    CHECK(b.groups[0] == FgAbGroup::free_group(1));
    CHECK(b.groups[1] == FgAbGroup::free_group(1));
    CHECK(b.groups[2] == FgAbGroup::trivial());

    HomologyResult c = sft_homology(spec_c(), 2);
    CHECK(c.groups[0] == FgAbGroup::cyclic(2));
    CHECK(c.groups[1] == FgAbGroup::trivial());
}

TEST_CASE("disjoint union of A, B, C") {
    HomologyResult h = sft_disjoint_union({spec_a(), spec_b(), spec_c()}, 2);
    CHECK(h.groups[0] == FgAbGroup::canonical(1, {Int(2), Int(2)}));
    CHECK(h.groups[1] == FgAbGroup::free_group(1));
    CHECK(h.groups[2] == FgAbGroup::trivial());

    // Single part is the identity.
    HomologyResult single = sft_disjoint_union({spec_b()}, 1);
    CHECK(single.groups == sft_homology(spec_b(), 1).groups);
}

TEST_CASE("block-diagonal adjacency agrees with the direct-sum route") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 15; ++trial) {
        SftSpec p = random_spec(rng, 2);
        SftSpec q = random_spec(rng, 3);
        long n = p.matrix.rows() + q.matrix.rows();
        IntMatrix block(n, n);
        for (long i = 0; i < p.matrix.rows(); ++i)
            for (long j = 0; j < p.matrix.cols(); ++j) block.at(i, j) = p.matrix.at(i, j);
        for (long i = 0; i < q.matrix.rows(); ++i)
            for (long j = 0; j < q.matrix.cols(); ++j)
                block.at(p.matrix.rows() + i, p.matrix.cols() + j) = q.matrix.at(i, j);
        HomologyResult via_block = sft_homology({block}, 2);
        HomologyResult via_sum = sft_disjoint_union({p, q}, 2);
        CHECK(via_block.groups == via_sum.groups);
    }
}

TEST_CASE("coefficients through the UCT") {
    std::vector<SftSpec> parts = {spec_a(), spec_b(), spec_c()};
    HomologyResult integral = sft_disjoint_union(parts, 2);

    FgAbGroup z2_cubed = FgAbGroup::canonical(0, {Int(2), Int(2), Int(2)});
    CHECK(uct_homology(integral, CoefficientSpec::mod(2), 0).middle == z2_cubed);
    CHECK(uct_homology(integral, CoefficientSpec::mod(2), 1).middle == z2_cubed);
    for (const long p : {3L, 5L, 7L}) {
        CHECK(uct_homology(integral, CoefficientSpec::mod(p), 0).middle == FgAbGroup::cyclic(p));
        CHECK(uct_homology(integral, CoefficientSpec::mod(p), 1).middle == FgAbGroup::cyclic(p));
        CHECK(uct_homology(integral, CoefficientSpec::mod(p), 2).middle == FgAbGroup::trivial());
    }
}

TEST_CASE("single-matrix coefficient change") {
    CHECK(sft_homology_with_coefficients(spec_a(), CoefficientSpec::mod(2), 0) ==
          FgAbGroup::cyclic(2));
    CHECK(sft_homology_with_coefficients(spec_a(), CoefficientSpec::integers(), 0) ==
          FgAbGroup::cyclic(2));
    CHECK(sft_homology_with_coefficients(spec_b(), CoefficientSpec::mod(3), 1) ==
          FgAbGroup::cyclic(3));
}

TEST_CASE("invalid adjacency matrices name the offender") {
    SftSpec zero_row{IntMatrix::from_rows({{0, 0}, {1, 1}})};
    CHECK_THROWS_WITH_AS(validate_sft(zero_row), doctest::Contains("row 0"), ValidationError);
    SftSpec zero_col{IntMatrix::from_rows({{1, 0}, {1, 0}})};
    CHECK_THROWS_WITH_AS(validate_sft(zero_col), doctest::Contains("column 1"), ValidationError);
    SftSpec negative{IntMatrix::from_rows({{1, -1}, {1, 1}})};
    CHECK_THROWS_AS(validate_sft(negative), ValidationError);
    SftSpec rect{IntMatrix::from_rows({{1, 1}})};
    CHECK_THROWS_AS(validate_sft(rect), ValidationError);
}

TEST_CASE("determinant magnitude equals the order of H_0 when H_1 vanishes") {
    std::mt19937 rng(992);
    for (int trial = 0; trial < 40; ++trial) {
        SftSpec s = random_spec(rng, 1 + trial % 4);
        IntMatrix m = one_minus_transpose(s.matrix);
        Int det = determinant(m);
        HomologyResult h = sft_homology(s, 1);
        if (det != 0) {
            CHECK(h.groups[1].is_trivial());
            REQUIRE(h.groups[0].order().has_value());
            CHECK(*h.groups[0].order() == abs_int(det));
        } else {
            CHECK(!h.groups[1].is_trivial());
        }
    }
}

TEST_CASE("invariance under simultaneous row and column permutation") {
    std::mt19937 rng(515);
    for (int trial = 0; trial < 20; ++trial) {
        SftSpec s = random_spec(rng, 4);
        std::vector<long> perm = {0, 1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        IntMatrix p(4, 4);
        for (long i = 0; i < 4; ++i)
            for (long j = 0; j < 4; ++j)
                p.at(i, j) = s.matrix.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
        CHECK(sft_homology({p}, 1).groups == sft_homology(s, 1).groups);
    }
}
