#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ghom/normal_forms.hpp"
#include "ghom/presentation.hpp"

using namespace ghom;

namespace {

IntMatrix random_matrix(std::mt19937& rng, long rows, long cols, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

void check_smith(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    CHECK(f.u * m * f.v == f.s);
    CHECK(abs_int(determinant(f.u)) == 1);
    CHECK(abs_int(determinant(f.v)) == 1);
    auto d = f.diagonal();
    for (size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (i + 1 < d.size() && d[i + 1] != 0) {
            if (d[i] == 0) CHECK(d[i + 1] == 0);
            if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
        }
    }
    // Off-diagonal must vanish.
    for (long i = 0; i < f.s.rows(); ++i)
        for (long j = 0; j < f.s.cols(); ++j)
            if (i != j) CHECK(f.s.at(i, j) == 0);
}

void check_hermite(const IntMatrix& m) {
    HermiteForm f = hermite_form(m);
    CHECK(m * f.u == f.h);
    CHECK(abs_int(determinant(f.u)) == 1);
    for (long c = 0; c < f.rank(); ++c) {
        long r = f.pivot_rows[static_cast<size_t>(c)];
        CHECK(f.h.at(r, c) > 0);
        for (long i = 0; i < r; ++i) CHECK(f.h.at(i, c) == 0);
        // Entries right of the pivot in its row lie in [0, pivot): they are zero.
        for (long k = c + 1; k < f.h.cols(); ++k) {
            CHECK(f.h.at(r, k) >= 0);
            CHECK(f.h.at(r, k) < f.h.at(r, c));
        }
        // Earlier columns of the pivot row are reduced.
        for (long k = 0; k < c; ++k) {
            CHECK(f.h.at(r, k) >= 0);
            CHECK(f.h.at(r, k) < f.h.at(r, c));
        }
    }
    for (long c = f.rank(); c < f.h.cols(); ++c)
        for (long i = 0; i < f.h.rows(); ++i) CHECK(f.h.at(i, c) == 0);
}

}  // namespace

TEST_CASE("smith normal form of the worked 2x2 matrix") {
    IntMatrix m = IntMatrix::from_rows({{-1, -1}, {-1, 1}});
    SmithForm f = smith_normal_form(m);
    auto d = f.diagonal();
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 1);
    CHECK(d[1] == 2);
    CHECK(f.u * m * f.v == f.s);
}

TEST_CASE("smith normal form: identity and zero") {
    SmithForm id3 = smith_normal_form(IntMatrix::identity(3));
    CHECK(id3.diagonal() == std::vector<Int>{1, 1, 1});
    SmithForm z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.diagonal() == std::vector<Int>{0, 0});
    SmithForm e = smith_normal_form(IntMatrix(0, 0));
    CHECK(e.diagonal().empty());
}

TEST_CASE("smith normal form: randomized invariants") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> size(0, 6);
    for (int trial = 0; trial < 60; ++trial) check_smith(random_matrix(rng, size(rng), size(rng)));
}

TEST_CASE("hermite form: randomized invariants") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> size(0, 6);
    for (int trial = 0; trial < 60; ++trial) check_hermite(random_matrix(rng, size(rng), size(rng)));
}

TEST_CASE("hermite_solve: direct examples") {
    IntMatrix m1 = IntMatrix::from_rows({{2}});
    auto x1 = hermite_solve(m1, {Int(4)});
    REQUIRE(x1.has_value());
    CHECK((*x1)[0] == 2);
    CHECK(!hermite_solve(m1, {Int(3)}).has_value());

    IntMatrix m2 = IntMatrix::from_rows({{-1, -1}, {-1, 1}});
    auto x2 = hermite_solve(m2, {Int(0), Int(2)});
    REQUIRE(x2.has_value());
    CHECK(m2.apply(*x2) == std::vector<Int>{0, 2});
}

TEST_CASE("hermite_solve: dimension mismatch") {
    IntMatrix m = IntMatrix::from_rows({{1, 0}, {0, 1}});
    CHECK_THROWS_AS((void)hermite_solve(m, {Int(1)}), ghom::Error);
}

TEST_CASE("hermite_solve agrees with membership on random lattices") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> size(1, 5);
    std::uniform_int_distribution<int> small(-4, 4);
    for (int trial = 0; trial < 80; ++trial) {
        long rows = size(rng), cols = size(rng);
        IntMatrix m = random_matrix(rng, rows, cols);
        // A point of the lattice must solve; the solution must reproduce it.
        std::vector<Int> coeffs(static_cast<size_t>(cols));
        for (auto& c : coeffs) c = small(rng);
        std::vector<Int> b = m.apply(coeffs);
        auto x = hermite_solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("integer_kernel: examples and rank identity") {
    IntMatrix m = IntMatrix::from_rows({{-1, -1}, {-1, -1}});
    IntMatrix k = integer_kernel(m);
    REQUIRE(k.cols() == 1);
    // Spans (1, -1)Z.
    CHECK(abs_int(k.at(0, 0)) == 1);
    CHECK(k.at(0, 0) == -k.at(1, 0));

    CHECK(integer_kernel(IntMatrix::identity(4)).cols() == 0);
    IntMatrix z12(1, 2);
    CHECK(integer_kernel(z12).cols() == 2);

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> size(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix a = random_matrix(rng, size(rng), size(rng));
        IntMatrix ker = integer_kernel(a);
        CHECK(ker.cols() + rank(a) == a.cols());
        if (ker.cols() > 0) CHECK((a * ker).is_zero());
    }
}

TEST_CASE("cokernel_group: worked SFT matrices") {
    IntMatrix a = IntMatrix::from_rows({{-1, -1}, {-1, 1}});   // 1 - A^T for A=[[2,1],[1,0]]
    CHECK(cokernel_group(a) == FgAbGroup::cyclic(2));
    IntMatrix b = IntMatrix::from_rows({{-1, -1}, {-1, -1}});  // 1 - B^T for B=[[2,1],[1,2]]
    CHECK(cokernel_group(b) == FgAbGroup::free_group(1));
    CHECK(cokernel_group(IntMatrix(2, 2)) == FgAbGroup::free_group(2));
}

TEST_CASE("cokernel invariant under unimodular multiplication") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> size(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        long rows = size(rng), cols = size(rng);
        IntMatrix m = random_matrix(rng, rows, cols);
        // Reuse the unimodular factors of a random matrix's Smith form.
        SmithForm f = smith_normal_form(random_matrix(rng, rows, rows));
        SmithForm gform = smith_normal_form(random_matrix(rng, cols, cols));
        FgAbGroup base = cokernel_group(m);
        CHECK(cokernel_group(f.u * m) == base);
        CHECK(cokernel_group(m * gform.v) == base);
    }
}

TEST_CASE("lattice_equal and lattice_subset") {
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 2}});
    IntMatrix b = IntMatrix::from_rows({{2, 0, 2}, {0, 2, 2}});
    CHECK(lattice_equal(a, b));
    IntMatrix c = IntMatrix::from_rows({{1, 0}, {0, 2}});
    CHECK(lattice_subset(a, c));
    CHECK(!lattice_subset(c, a));
}

TEST_CASE("rank_mod_p on small matrices") {
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {1, 2}});
    CHECK(rank_mod_p(m, 2) == 1);  // becomes [[0,0],[1,0]]
    CHECK(rank_mod_p(m, 3) == 1);
    CHECK(rank_mod_p(IntMatrix::identity(3), 5) == 3);
    CHECK(rank_mod_p(IntMatrix(2, 2), 7) == 0);
}

TEST_CASE("quotient_presentation round trips classes") {
    // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6
    IntMatrix rels = IntMatrix::from_rows({{2, 0}, {0, 3}});
    PresentedQuotient q = quotient_presentation(2, rels);
    CHECK(q.group == FgAbGroup::cyclic(6));
    // The representative of each generator maps back to the unit coordinate.
    for (long i = 0; i < q.group.ngens(); ++i) {
        std::vector<Int> rep = q.representative.col(i);
        std::vector<Int> cls = q.class_of(rep);
        for (long k = 0; k < q.group.ngens(); ++k)
            CHECK(cls[static_cast<size_t>(k)] == (k == i ? 1 : 0));
    }
}

TEST_CASE("subquotient computes homology-style quotients") {
    // L = <(1,1),(0,2)>, D = <(2,2)> inside Z^2: L/D = Z + Z/2 quotient...
    IntMatrix num = IntMatrix::from_rows({{1, 0}, {1, 2}});
    IntMatrix den = IntMatrix::from_rows({{2}, {2}});
    Subquotient s = subquotient(2, num, den);
    // (1,1) generates a Z summand mod (2,2) of order 2; (0,2) is free.
    CHECK(s.group() == FgAbGroup::canonical(1, {2}));
}
