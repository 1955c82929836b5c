#include "ghom/normal_forms.hpp"

#include <cassert>

#include "ghom/common.hpp"

namespace ghom {

std::vector<Int> SmithForm::diagonal() const {
    long k = std::min(s.rows(), s.cols());
    std::vector<Int> d(static_cast<size_t>(k));
    for (long i = 0; i < k; ++i) d[static_cast<size_t>(i)] = s.at(i, i);
    return d;
}

long SmithForm::rank() const {
    long r = 0;
    for (const Int& d : diagonal())
        if (d != 0) ++r;
    return r;
}

namespace {

// Position of a nonzero entry of minimal absolute value in the trailing
// submatrix starting at (t, t); lexicographically first among ties.
bool find_pivot(const IntMatrix& a, long t, long& pi, long& pj) {
    bool found = false;
    Int best;
    for (long i = t; i < a.rows(); ++i)
        for (long j = t; j < a.cols(); ++j) {
            const Int& v = a.at(i, j);
            if (v == 0) continue;
            Int av = abs_int(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f;
    f.source_rows = m.rows();
    f.source_cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    long t = 0;
    long limit = std::min(a.rows(), a.cols());
    while (t < limit) {
        long pi, pj;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Eliminate column and row of the pivot; a failed division leaves a
        // smaller remainder that becomes the new pivot, so this terminates.
        bool clean = false;
        while (!clean) {
            clean = true;
            for (long i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = rounded_quotient(a.at(i, t), a.at(t, t));
                a.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (a.at(i, t) != 0) {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (long j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = rounded_quotient(a.at(t, j), a.at(t, t));
                a.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot must divide the rest of the submatrix to keep the
            // divisibility chain; folding an offending row restarts cleanup.
            for (long i = t + 1; i < a.rows() && clean; ++i)
                for (long j = t + 1; j < a.cols() && clean; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        clean = false;
                    }
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    f.u = std::move(u);
    f.s = std::move(a);
    f.v = std::move(v);
    return f;
}

HermiteForm hermite_form(const IntMatrix& m) {
    HermiteForm f;
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.cols());
    long c = 0;
    for (long r = 0; r < h.rows() && c < h.cols(); ++r) {
        // Gather the gcd of row r over columns >= c into column c.
        bool any = false;
        for (long k = c; k < h.cols(); ++k)
            if (h.at(r, k) != 0) any = true;
        if (!any) continue;
        bool done = false;
        while (!done) {
            long best = -1;
            for (long k = c; k < h.cols(); ++k) {
                if (h.at(r, k) == 0) continue;
                if (best < 0 || abs_int(h.at(r, k)) < abs_int(h.at(r, best))) best = k;
            }
            h.swap_cols(c, best);
            u.swap_cols(c, best);
            done = true;
            for (long k = c + 1; k < h.cols(); ++k) {
                if (h.at(r, k) == 0) continue;
                Int q = rounded_quotient(h.at(r, k), h.at(r, c));
                h.add_col_multiple(k, c, -q);
                u.add_col_multiple(k, c, -q);
                if (h.at(r, k) != 0) done = false;
            }
        }
        if (h.at(r, c) < 0) {
            h.negate_col(c);
            u.negate_col(c);
        }
        // Reduce earlier columns of this pivot row into [0, pivot).
        for (long k = 0; k < c; ++k) {
            auto [q, rem] = fdivmod(h.at(r, k), h.at(r, c));
            (void)rem;
            if (q != 0) {
                h.add_col_multiple(k, c, -q);
                u.add_col_multiple(k, c, -q);
            }
        }
        f.pivot_rows.push_back(r);
        ++c;
    }
    f.h = std::move(h);
    f.u = std::move(u);
    return f;
}

std::optional<std::vector<Int>> hermite_solve(const IntMatrix& m, const std::vector<Int>& b) {
    if (static_cast<long>(b.size()) != m.rows()) throw Error("hermite_solve: dimension mismatch");
    HermiteForm f = hermite_form(m);
    std::vector<Int> residual = b;
    std::vector<Int> y(static_cast<size_t>(m.cols()));
    for (long c = 0; c < f.rank(); ++c) {
        long r = f.pivot_rows[static_cast<size_t>(c)];
        auto [q, rem] = fdivmod(residual[static_cast<size_t>(r)], f.h.at(r, c));
        if (rem != 0) return std::nullopt;
        y[static_cast<size_t>(c)] = q;
        if (q != 0)
            for (long i = 0; i < m.rows(); ++i) residual[static_cast<size_t>(i)] -= q * f.h.at(i, c);
    }
    for (const Int& v : residual)
        if (v != 0) return std::nullopt;
    return f.u.apply(y);
}

std::optional<IntMatrix> lattice_solve(const IntMatrix& m, const IntMatrix& b) {
    if (b.rows() != m.rows()) throw Error("lattice_solve: dimension mismatch");
    // One Hermite form reused across right-hand sides.
    HermiteForm f = hermite_form(m);
    IntMatrix x(m.cols(), b.cols());
    for (long col = 0; col < b.cols(); ++col) {
        std::vector<Int> residual = b.col(col);
        std::vector<Int> y(static_cast<size_t>(m.cols()));
        for (long c = 0; c < f.rank(); ++c) {
            long r = f.pivot_rows[static_cast<size_t>(c)];
            auto [q, rem] = fdivmod(residual[static_cast<size_t>(r)], f.h.at(r, c));
            if (rem != 0) return std::nullopt;
            y[static_cast<size_t>(c)] = q;
            if (q != 0)
                for (long i = 0; i < m.rows(); ++i)
                    residual[static_cast<size_t>(i)] -= q * f.h.at(i, c);
        }
        for (const Int& v : residual)
            if (v != 0) return std::nullopt;
        x.set_col(col, f.u.apply(y));
    }
    return x;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    HermiteForm f = hermite_form(m);
    std::vector<long> zero_cols;
    for (long j = f.rank(); j < m.cols(); ++j) zero_cols.push_back(j);
    return f.u.select_cols(zero_cols);
}

FgAbGroup cokernel_group(const IntMatrix& m) {
    SmithForm f = smith_normal_form(m);
    std::vector<Int> factors;
    long nonzero = 0;
    for (const Int& d : f.diagonal())
        if (d != 0) {
            ++nonzero;
            if (d != 1) factors.push_back(d);
        }
    return FgAbGroup::canonical(m.rows() - nonzero, std::move(factors));
}

long rank(const IntMatrix& m) { return hermite_form(m).rank(); }

IntMatrix lattice_basis(const IntMatrix& gens) {
    HermiteForm f = hermite_form(gens);
    std::vector<long> cols;
    for (long j = 0; j < f.rank(); ++j) cols.push_back(j);
    return f.h.select_cols(cols);
}

bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& v) {
    return hermite_solve(gens, v).has_value();
}

bool lattice_subset(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw Error("lattice_subset: ambient dimension mismatch");
    return lattice_solve(b, a).has_value();
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return lattice_subset(a, b) && lattice_subset(b, a);
}

long rank_mod_p(IntMatrix m, const Int& p) {
    assert(is_prime(p));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) m.at(i, j) = fmod_pos(m.at(i, j), p);
    long r = 0;
    for (long c = 0; c < m.cols() && r < m.rows(); ++c) {
        long piv = -1;
        for (long i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        m.swap_rows(r, piv);
        Int inv;
        mpz_invert(inv.get_mpz_t(), m.at(r, c).get_mpz_t(), p.get_mpz_t());
        for (long j = c; j < m.cols(); ++j) m.at(r, j) = fmod_pos(m.at(r, j) * inv, p);
        for (long i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Int factor = m.at(i, c);
            for (long j = c; j < m.cols(); ++j)
                m.at(i, j) = fmod_pos(m.at(i, j) - factor * m.at(r, j), p);
        }
        ++r;
    }
    return r;
}

}  // namespace ghom
