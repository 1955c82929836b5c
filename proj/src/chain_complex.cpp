#include "ghom/chain_complex.hpp"

#include <string>

namespace ghom {

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
    SparseIntMatrix s;
    s.rows = m.rows();
    s.cols = m.cols();
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) s.entries.push_back({i, j, m.at(i, j)});
    return s;
}

IntMatrix SparseIntMatrix::dense() const {
    IntMatrix m(rows, cols);
    for (const auto& [r, c, v] : entries) m.at(r, c) += v;
    return m;
}

void SparseIntMatrix::add(long r, long c, const Int& v) { entries.push_back({r, c, v}); }

IntMatrix ChainComplex::boundary_dense(long n) const {
    if (n < 1 || n > length) {
        // Out-of-window boundaries are zero maps with the right shape.
        long r = (n >= 1 && n - 1 <= length) ? rank(n - 1) : 0;
        long c = (n >= 0 && n <= length) ? rank(n) : 0;
        return IntMatrix(r, c);
    }
    return boundaries[static_cast<size_t>(n)].dense();
}

ChainComplex complex_from_dense(const std::vector<long>& ranks, std::vector<IntMatrix> boundaries,
                                bool zero_above) {
    ChainComplex c;
    c.length = static_cast<long>(ranks.size()) - 1;
    c.ranks = ranks;
    c.zero_above = zero_above;
    c.boundaries.resize(static_cast<size_t>(c.length) + 1);
    if (static_cast<long>(boundaries.size()) != c.length)
        throw Error("complex_from_dense: need one boundary per degree 1..length");
    for (long n = 1; n <= c.length; ++n) {
        IntMatrix& b = boundaries[static_cast<size_t>(n - 1)];
        if (b.rows() != ranks[static_cast<size_t>(n - 1)] || b.cols() != ranks[static_cast<size_t>(n)])
            throw Error("complex_from_dense: boundary " + std::to_string(n) + " has wrong shape");
        c.boundaries[static_cast<size_t>(n)] = SparseIntMatrix::from_dense(b);
    }
    return c;
}

ValidationReport verify_boundary_squares_to_zero(const ChainComplex& c) {
    ValidationReport rep;
    for (long n = 2; n <= c.length; ++n)
        if (!(c.boundary_dense(n - 1) * c.boundary_dense(n)).is_zero())
            rep.add("dd", "d_" + std::to_string(n - 1) + " . d_" + std::to_string(n) + " != 0");
    return rep;
}

ValidationReport verify_chain_map(const ChainMap& f) {
    ValidationReport rep;
    long top = f.top_degree();
    for (long n = 0; n <= top; ++n) {
        const IntMatrix& m = f.mats[static_cast<size_t>(n)];
        if (m.rows() != f.target.rank(n) || m.cols() != f.source.rank(n))
            rep.add("shape", "degree " + std::to_string(n) + " matrix has wrong shape");
    }
    if (!rep.ok()) return rep;
    for (long n = 1; n <= top; ++n) {
        IntMatrix lhs = f.target.boundary_dense(n) * f.mats[static_cast<size_t>(n)];
        IntMatrix rhs = f.mats[static_cast<size_t>(n - 1)] * f.source.boundary_dense(n);
        if (!(lhs == rhs)) rep.add("chain-map", "square at degree " + std::to_string(n) + " fails");
    }
    return rep;
}

ChainComplex direct_sum_complex(const ChainComplex& a, const ChainComplex& b) {
    if (a.length != b.length) throw Error("direct_sum_complex: length mismatch");
    ChainComplex c;
    c.length = a.length;
    c.zero_above = a.zero_above && b.zero_above;
    for (long n = 0; n <= c.length; ++n) c.ranks.push_back(a.rank(n) + b.rank(n));
    c.boundaries.resize(static_cast<size_t>(c.length) + 1);
    for (long n = 1; n <= c.length; ++n) {
        SparseIntMatrix s;
        s.rows = c.rank(n - 1);
        s.cols = c.rank(n);
        for (const auto& [r, col, v] : a.boundaries[static_cast<size_t>(n)].entries)
            s.entries.push_back({r, col, v});
        for (const auto& [r, col, v] : b.boundaries[static_cast<size_t>(n)].entries)
            s.entries.push_back({r + a.rank(n - 1), col + a.rank(n), v});
        c.boundaries[static_cast<size_t>(n)] = std::move(s);
    }
    return c;
}

ValidationReport verify_chain_homotopy(const ChainHomotopy& hom) {
    ValidationReport rep;
    const ChainComplex& src = hom.from.source;
    const ChainComplex& tgt = hom.from.target;
    long top = static_cast<long>(hom.h.size()) - 1;
    for (long n = 0; n <= top; ++n) {
        IntMatrix lhs = tgt.boundary_dense(n + 1) * hom.h[static_cast<size_t>(n)];
        if (n >= 1) lhs = lhs + hom.h[static_cast<size_t>(n - 1)] * src.boundary_dense(n);
        IntMatrix rhs = hom.from.mats[static_cast<size_t>(n)] - hom.to.mats[static_cast<size_t>(n)];
        if (!(lhs == rhs)) rep.add("homotopy", "dh + hd != f - g at degree " + std::to_string(n));
    }
    return rep;
}

}  // namespace ghom
