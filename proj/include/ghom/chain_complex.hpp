#pragma once

#include <tuple>
#include <vector>

#include "ghom/groupoid.hpp"
#include "ghom/int_matrix.hpp"

namespace ghom {

// Boundary matrices come out of face maps nearly empty, so they are kept
// as triplet lists and densified where the normal-form algorithms need
// full storage.
struct SparseIntMatrix {
    long rows = 0, cols = 0;
    std::vector<std::tuple<long, long, Int>> entries;

    static SparseIntMatrix from_dense(const IntMatrix& m);
    IntMatrix dense() const;
    void add(long r, long c, const Int& v);  // accumulates, dropping zeros on dense()
};

// Chain complex of free abelian groups in degrees 0..length with boundary
// d_n : C_n -> C_{n-1}. zero_above records whether C_n = 0 for n > length;
// Moore complexes of truncated nerves set it false, which closes the
// homology window one degree early.
struct ChainComplex {
    long length = 0;
    std::vector<long> ranks;                  // 0..length
    std::vector<SparseIntMatrix> boundaries;  // index n = d_n for 1..length; [0] unused
    bool zero_above = true;

    IntMatrix boundary_dense(long n) const;
    long rank(long n) const { return ranks[static_cast<size_t>(n)]; }
    // Highest degree at which homology is defined.
    long top_homology_degree() const { return zero_above ? length : length - 1; }
};

// Convenience for hand-built complexes in tests and exact-sequence plumbing.
ChainComplex complex_from_dense(const std::vector<long>& ranks, std::vector<IntMatrix> boundaries,
                                bool zero_above = true);

ValidationReport verify_boundary_squares_to_zero(const ChainComplex& c);

struct ChainMap {
    ChainComplex source, target;
    std::vector<IntMatrix> mats;  // degrees 0..min(source.length, target.length)

    long top_degree() const { return static_cast<long>(mats.size()) - 1; }
};

ValidationReport verify_chain_map(const ChainMap& f);

ChainComplex direct_sum_complex(const ChainComplex& a, const ChainComplex& b);

// h_n : C_n -> D_{n+1} with dh + hd = from - to.
struct ChainHomotopy {
    ChainMap from, to;
    std::vector<IntMatrix> h;
};

ValidationReport verify_chain_homotopy(const ChainHomotopy& hom);

}  // namespace ghom
