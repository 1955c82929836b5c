#include "ghom/sequences.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ghom/normal_forms.hpp"
#include "ghom/presentation.hpp"

namespace ghom {

ValidationReport verify_ses(const ChainSES& ses) {
    ValidationReport rep;
    ValidationReport mi = verify_chain_map(ses.inject);
    ValidationReport mp = verify_chain_map(ses.project);
    for (auto& v : mi.violations) rep.add("inject-" + v.axiom, v.detail);
    for (auto& v : mp.violations) rep.add("project-" + v.axiom, v.detail);
    if (!rep.ok()) return rep;

    long top = std::min(ses.inject.top_degree(), ses.project.top_degree());
    for (long n = 0; n <= top; ++n) {
        const IntMatrix& in = ses.inject.mats[static_cast<size_t>(n)];
        const IntMatrix& pr = ses.project.mats[static_cast<size_t>(n)];
        if (integer_kernel(in).cols() != 0)
            rep.add("exact", "inject not injective at degree " + std::to_string(n));
        if (!cokernel_group(pr).is_trivial())
            rep.add("exact", "project not surjective at degree " + std::to_string(n));
        IntMatrix ker = integer_kernel(pr);
        // Empty lattices need an ambient dimension to compare in.
        if (in.cols() == 0 && ker.cols() == 0) continue;
        if (!lattice_equal(in, ker))
            rep.add("exact", "image(inject) != kernel(project) at degree " + std::to_string(n));
    }
    return rep;
}

LongExactSequence snake_les(const ChainSES& ses, long n_max) {
    ValidationReport rep = verify_ses(ses);
    if (!rep.ok()) throw ValidationError("snake_les: not a short exact sequence:\n" + rep.to_string());
    if (n_max > ses.sub.top_homology_degree() || n_max > ses.mid.top_homology_degree() ||
        n_max > ses.quot.top_homology_degree())
        throw Error("snake_les: n_max outside the homology window");

    std::vector<Subquotient> hsub, hmid, hquot;
    for (long n = 0; n <= n_max; ++n) {
        hsub.push_back(homology_presentation(ses.sub, n));
        hmid.push_back(homology_presentation(ses.mid, n));
        hquot.push_back(homology_presentation(ses.quot, n));
    }

    LongExactSequence les;
    for (long n = n_max; n >= 0; --n) {
        les.nodes.push_back({hsub[static_cast<size_t>(n)].group(), n, NodeTag::Sub});
        les.nodes.push_back({hmid[static_cast<size_t>(n)].group(), n, NodeTag::Mid});
        les.nodes.push_back({hquot[static_cast<size_t>(n)].group(), n, NodeTag::Quot});

        les.maps.push_back(induced_homology_map(ses.inject, n));
        les.maps.push_back(induced_homology_map(ses.project, n));

        if (n > 0) {
            // Connecting map: lift a representative cycle through project,
            // take its boundary, pull back through inject.
            const Subquotient& hq = hquot[static_cast<size_t>(n)];
            const Subquotient& hs = hsub[static_cast<size_t>(n - 1)];
            AbHom conn;
            conn.domain = hq.group();
            conn.codomain = hs.group();
            conn.matrix = IntMatrix(hs.group().ngens(), hq.group().ngens());
            const IntMatrix& pr = ses.project.mats[static_cast<size_t>(n)];
            const IntMatrix& in = ses.inject.mats[static_cast<size_t>(n - 1)];
            for (long j = 0; j < hq.group().ngens(); ++j) {
                auto lift = hermite_solve(pr, hq.representative(j));
                if (!lift) throw Error("snake_les: lift through project failed");
                std::vector<Int> bdry = ses.mid.boundary_dense(n).apply(*lift);
                auto pulled = hermite_solve(in, bdry);
                if (!pulled) throw Error("snake_les: boundary does not pull back through inject");
                conn.matrix.set_col(j, hs.class_of(*pulled));
            }
            if (!well_defined(conn)) throw Error("snake_les: connecting map is ill defined");
            les.maps.push_back(conn);
        }
    }
    // Terminal zero map makes H_0(quot) an interior node.
    les.nodes.push_back({FgAbGroup::trivial(), -1, NodeTag::Sub});
    les.maps.push_back(zero_hom(les.nodes[les.nodes.size() - 2].group, FgAbGroup::trivial()));
    return les;
}

ValidationReport verify_exactness(const LongExactSequence& les) {
    ValidationReport rep;
    for (size_t k = 1; k + 1 < les.nodes.size(); ++k) {
        if (!check_exact_at(les.maps[k - 1], les.maps[k]))
            rep.add("exactness", "fails at node " + std::to_string(k) + " (degree " +
                                     std::to_string(les.nodes[k].degree) + ")");
    }
    return rep;
}

namespace {

// Positions of nerve tuples all of whose arrows, endpoints included, stay
// inside the given unit-arrow set.
std::vector<long> tuples_inside(const Nerve& nv, long n, const std::set<long>& unit_arrows) {
    std::vector<long> out;
    const auto& lvl = nv.levels[static_cast<size_t>(n)];
    for (long p = 0; p < static_cast<long>(lvl.size()); ++p) {
        bool inside = true;
        for (long a : lvl[static_cast<size_t>(p)]) {
            if (n == 0) {
                inside = unit_arrows.count(a) > 0;
            } else if (!unit_arrows.count(nv.groupoid.source[a]) ||
                       !unit_arrows.count(nv.groupoid.range[a])) {
                inside = false;
            }
            if (!inside) break;
        }
        if (inside) out.push_back(p);
    }
    return out;
}

// Selection matrix R of shape |rows_of| x ambient with R[i][rows_of[i]] = 1.
IntMatrix restriction_matrix(const std::vector<long>& positions, long ambient) {
    IntMatrix m(static_cast<long>(positions.size()), ambient);
    for (size_t i = 0; i < positions.size(); ++i) m.at(static_cast<long>(i), positions[i]) = 1;
    return m;
}

// Restrict a boundary matrix to a subfamily of basis tuples on both sides.
IntMatrix restrict_boundary(const IntMatrix& full, const std::vector<long>& rows,
                            const std::vector<long>& cols) {
    return full.select_rows(rows).select_cols(cols);
}

ChainComplex subset_complex(const ChainComplex& big, const std::vector<std::vector<long>>& keep) {
    ChainComplex c;
    c.length = big.length;
    c.zero_above = big.zero_above;
    for (long n = 0; n <= big.length; ++n)
        c.ranks.push_back(static_cast<long>(keep[static_cast<size_t>(n)].size()));
    c.boundaries.resize(static_cast<size_t>(big.length) + 1);
    for (long n = 1; n <= big.length; ++n)
        c.boundaries[static_cast<size_t>(n)] = SparseIntMatrix::from_dense(restrict_boundary(
            big.boundary_dense(n), keep[static_cast<size_t>(n - 1)], keep[static_cast<size_t>(n)]));
    return c;
}

}  // namespace

ChainSES subgroupoid_ses(const FiniteGroupoid& g, const std::vector<long>& sub_arrows, long n_max) {
    std::set<long> sub(sub_arrows.begin(), sub_arrows.end());
    for (long u : g.units)
        if (!sub.count(u)) throw ValidationError("subgroupoid_ses: subgroupoid is not wide");
    for (long a : sub) {
        if (a < 0 || a >= g.arrow_count) throw ValidationError("subgroupoid_ses: arrow out of range");
        if (!sub.count(g.inverse[a]))
            throw ValidationError("subgroupoid_ses: not closed under inverses");
    }
    for (const auto& e : g.compose)
        if (sub.count(e[0]) && sub.count(e[1]) && !sub.count(e[2]))
            throw ValidationError("subgroupoid_ses: not closed under composition");

    Nerve nv = build_nerve(g, n_max + 1);
    ChainComplex mid = moore_complex(nv);

    // Tuples made of subgroupoid arrows, and their complement.
    std::vector<std::vector<long>> sub_keep(static_cast<size_t>(n_max) + 2);
    std::vector<std::vector<long>> delta_keep(static_cast<size_t>(n_max) + 2);
    for (long n = 0; n <= n_max + 1; ++n) {
        const auto& lvl = nv.levels[static_cast<size_t>(n)];
        for (long p = 0; p < static_cast<long>(lvl.size()); ++p) {
            bool inside = true;
            for (long a : lvl[static_cast<size_t>(p)])
                if (!sub.count(a)) inside = false;
            (inside ? sub_keep : delta_keep)[static_cast<size_t>(n)].push_back(p);
        }
    }

    ChainSES ses;
    ses.mid = mid;
    ses.sub = subset_complex(mid, sub_keep);
    ses.quot = subset_complex(mid, delta_keep);

    ses.inject.source = ses.sub;
    ses.inject.target = ses.mid;
    ses.project.source = ses.mid;
    ses.project.target = ses.quot;
    for (long n = 0; n <= n_max + 1; ++n) {
        ses.inject.mats.push_back(
            restriction_matrix(sub_keep[static_cast<size_t>(n)], mid.rank(n)).transpose());
        ses.project.mats.push_back(restriction_matrix(delta_keep[static_cast<size_t>(n)], mid.rank(n)));
    }

    ValidationReport rep = verify_ses(ses);
    if (!rep.ok()) throw Error("subgroupoid_ses: exactness failed:\n" + rep.to_string());
    return ses;
}

ChainSES mv_ses(const MvCover& cover, long n_max, bool support_local) {
    const FiniteGroupoid& g = cover.groupoid;
    std::set<long> pos1(cover.u1.begin(), cover.u1.end());
    std::set<long> pos2(cover.u2.begin(), cover.u2.end());
    for (long p : pos1)
        if (p < 0 || p >= static_cast<long>(g.units.size()))
            throw ValidationError("mv_ses: unit position out of range");
    for (long p : pos2)
        if (p < 0 || p >= static_cast<long>(g.units.size()))
            throw ValidationError("mv_ses: unit position out of range");
    for (long p = 0; p < static_cast<long>(g.units.size()); ++p)
        if (!pos1.count(p) && !pos2.count(p))
            throw ValidationError("mv_ses: cover does not exhaust the unit space");
    if (!support_local) {
        if (!is_saturated(g, cover.u1)) throw ValidationError("mv_ses: U1 is not saturated");
        if (!is_saturated(g, cover.u2)) throw ValidationError("mv_ses: U2 is not saturated");
    }

    std::set<long> units1, units2, units12;
    for (long p : pos1) units1.insert(g.units[static_cast<size_t>(p)]);
    for (long p : pos2) units2.insert(g.units[static_cast<size_t>(p)]);
    for (long u : units1)
        if (units2.count(u)) units12.insert(u);

    Nerve nv = build_nerve(g, n_max + 1);
    ChainComplex whole = moore_complex(nv);

    std::vector<std::vector<long>> keep1(static_cast<size_t>(n_max) + 2),
        keep2(static_cast<size_t>(n_max) + 2), keep12(static_cast<size_t>(n_max) + 2),
        keep_union(static_cast<size_t>(n_max) + 2);
    for (long n = 0; n <= n_max + 1; ++n) {
        keep1[static_cast<size_t>(n)] = tuples_inside(nv, n, units1);
        keep2[static_cast<size_t>(n)] = tuples_inside(nv, n, units2);
        keep12[static_cast<size_t>(n)] = tuples_inside(nv, n, units12);
        if (support_local) {
            std::set<long> merged(keep1[static_cast<size_t>(n)].begin(),
                                  keep1[static_cast<size_t>(n)].end());
            merged.insert(keep2[static_cast<size_t>(n)].begin(), keep2[static_cast<size_t>(n)].end());
            keep_union[static_cast<size_t>(n)].assign(merged.begin(), merged.end());
        }
    }

    ChainComplex piece1 = subset_complex(whole, keep1);
    ChainComplex piece2 = subset_complex(whole, keep2);

    ChainSES ses;
    ses.sub = subset_complex(whole, keep12);
    ses.mid = direct_sum_complex(piece1, piece2);
    ses.quot = support_local ? subset_complex(whole, keep_union) : whole;

    // Positions of each tuple family inside the quotient basis.
    const std::vector<std::vector<long>>* quot_keep = nullptr;
    std::vector<std::vector<long>> identity_keep(static_cast<size_t>(n_max) + 2);
    if (support_local) {
        quot_keep = &keep_union;
    } else {
        for (long n = 0; n <= n_max + 1; ++n) {
            identity_keep[static_cast<size_t>(n)].resize(static_cast<size_t>(whole.rank(n)));
            for (long p = 0; p < whole.rank(n); ++p)
                identity_keep[static_cast<size_t>(n)][static_cast<size_t>(p)] = p;
        }
        quot_keep = &identity_keep;
    }

    ses.inject.source = ses.sub;
    ses.inject.target = ses.mid;
    ses.project.source = ses.mid;
    ses.project.target = ses.quot;
    for (long n = 0; n <= n_max + 1; ++n) {
        const auto& k1 = keep1[static_cast<size_t>(n)];
        const auto& k2 = keep2[static_cast<size_t>(n)];
        const auto& k12 = keep12[static_cast<size_t>(n)];
        const auto& kq = (*quot_keep)[static_cast<size_t>(n)];

        auto position_in = [](const std::vector<long>& where, long p) {
            auto it = std::lower_bound(where.begin(), where.end(), p);
            return static_cast<long>(it - where.begin());
        };

        // alpha(xi) = (xi, -xi)
        IntMatrix alpha(static_cast<long>(k1.size() + k2.size()), static_cast<long>(k12.size()));
        for (size_t j = 0; j < k12.size(); ++j) {
            alpha.at(position_in(k1, k12[j]), static_cast<long>(j)) = 1;
            alpha.at(static_cast<long>(k1.size()) + position_in(k2, k12[j]), static_cast<long>(j)) = -1;
        }
        ses.inject.mats.push_back(std::move(alpha));

        // beta(xi1, xi2) = extension-by-zero sum
        IntMatrix beta(static_cast<long>(kq.size()), static_cast<long>(k1.size() + k2.size()));
        for (size_t j = 0; j < k1.size(); ++j)
            beta.at(position_in(kq, k1[j]), static_cast<long>(j)) = 1;
        for (size_t j = 0; j < k2.size(); ++j)
            beta.at(position_in(kq, k2[j]), static_cast<long>(k1.size() + j)) = 1;
        ses.project.mats.push_back(std::move(beta));
    }

    ValidationReport rep = verify_ses(ses);
    if (!rep.ok()) throw Error("mv_ses: exactness failed:\n" + rep.to_string());
    return ses;
}

LongExactSequence mv_les(const MvCover& cover, long n_max, bool support_local) {
    return snake_les(mv_ses(cover, n_max, support_local), n_max);
}

namespace {

// Direct sum with generator bookkeeping: the concatenated presentation of
// left + right canonicalized, plus both coordinate maps.
struct SplitSum {
    PresentedQuotient pq;
    long left_gens = 0, right_gens = 0;
};

SplitSum split_sum(const FgAbGroup& left, const FgAbGroup& right) {
    long n = left.ngens() + right.ngens();
    std::vector<Int> orders;
    for (long i = 0; i < left.ngens(); ++i) orders.push_back(left.gen_order(i));
    for (long i = 0; i < right.ngens(); ++i) orders.push_back(right.gen_order(i));
    long torsion = 0;
    for (const Int& o : orders)
        if (o != 0) ++torsion;
    IntMatrix rels(n, torsion);
    long c = 0;
    for (long i = 0; i < n; ++i)
        if (orders[static_cast<size_t>(i)] != 0) rels.at(i, c++) = orders[static_cast<size_t>(i)];
    SplitSum s;
    s.pq = quotient_presentation(n, rels);
    s.left_gens = left.ngens();
    s.right_gens = right.ngens();
    return s;
}

UctSequence assemble_uct(long degree, const FgAbGroup& left, const FgAbGroup& right) {
    SplitSum s = split_sum(left, right);
    UctSequence u;
    u.degree = degree;
    u.left = left;
    u.right = right;
    u.middle = s.pq.group;

    u.iota.domain = left;
    u.iota.codomain = u.middle;
    u.iota.matrix = IntMatrix(u.middle.ngens(), left.ngens());
    for (long j = 0; j < left.ngens(); ++j) {
        std::vector<Int> e(static_cast<size_t>(s.pq.ambient_dim));
        e[static_cast<size_t>(j)] = 1;
        u.iota.matrix.set_col(j, s.pq.class_of(e));
    }

    u.kappa.domain = u.middle;
    u.kappa.codomain = right;
    u.kappa.matrix = IntMatrix(right.ngens(), u.middle.ngens());
    for (long k = 0; k < u.middle.ngens(); ++k) {
        std::vector<Int> rep = s.pq.representative.col(k);
        std::vector<Int> right_part(rep.begin() + s.left_gens, rep.end());
        u.kappa.matrix.set_col(k, reduce_coords(right, right_part));
    }
    return u;
}

}  // namespace

UctSequence uct_homology(const HomologyResult& h_integral, const CoefficientSpec& a, long n) {
    if (n < 0 || n > h_integral.max_degree()) throw Error("uct_homology: degree missing");
    FgAbGroup hn = h_integral.groups[static_cast<size_t>(n)];
    FgAbGroup hn1 = n > 0 ? h_integral.groups[static_cast<size_t>(n - 1)] : FgAbGroup::trivial();
    FgAbGroup A = a.as_group();
    return assemble_uct(n, tensor(hn, A), tor1(hn1, A));
}

UctSequence uct_cohomology(const HomologyResult& h_integral, const CoefficientSpec& a, long n) {
    if (n < 0 || n > h_integral.max_degree()) throw Error("uct_cohomology: degree missing");
    FgAbGroup hn = h_integral.groups[static_cast<size_t>(n)];
    FgAbGroup hn1 = n > 0 ? h_integral.groups[static_cast<size_t>(n - 1)] : FgAbGroup::trivial();
    FgAbGroup A = a.as_group();
    return assemble_uct(n, ext1(hn1, A), hom_group(hn, A));
}

IntMatrix DualComplex::delta(long n) const { return primal.boundary_dense(n + 1).transpose(); }

DualComplex dual_cochain_complex(const ChainComplex& c, const CoefficientSpec& a) {
    return {c, a};
}

FgAbGroup cohomology(const DualComplex& d, long n) {
    if (n < 0 || n > d.top_degree()) throw Error("cohomology: degree outside the valid window");
    if (d.coeff.is_integers()) {
        IntMatrix cocycles = integer_kernel(d.delta(n));
        IntMatrix cobound = n == 0 ? IntMatrix(d.primal.rank(0), 0) : d.delta(n - 1);
        return subquotient(d.primal.rank(n), cocycles, cobound).group();
    }
    if (d.coeff.is_prime_field()) {
        const Int& p = d.coeff.modulus;
        long r1 = rank_mod_p(d.delta(n), p);
        long r0 = n == 0 ? 0 : rank_mod_p(d.delta(n - 1), p);
        long dim = d.primal.rank(n) - r1 - r0;
        return FgAbGroup::canonical(0, std::vector<Int>(static_cast<size_t>(dim), p));
    }
    // General coefficients through the Ext-Hom splitting.
    HomologyResult h;
    h.coeff = CoefficientSpec::integers();
    for (long k = 0; k <= n; ++k) h.groups.push_back(homology(d.primal, k));
    return uct_cohomology(h, d.coeff, n).middle;
}

namespace {

// Concrete model of H_n(C; A) as a subquotient of Z^{rank_n * g}, where g
// counts canonical generators of A. Index (cell i, coefficient gen j)
// flattens to i*g + j.
struct CoeffHomology {
    Subquotient sq;
    long cells = 0, agens = 0;
};

IntMatrix kronecker_with_identity(const IntMatrix& m, long g) {
    IntMatrix out(m.rows() * g, m.cols() * g);
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            if (m.at(i, j) == 0) continue;
            for (long k = 0; k < g; ++k) out.at(i * g + k, j * g + k) = m.at(i, j);
        }
    return out;
}

IntMatrix module_relations(long cells, const FgAbGroup& A) {
    long g = A.ngens();
    long t = static_cast<long>(A.torsion.size());
    IntMatrix rel(cells * g, cells * t);
    long c = 0;
    for (long i = 0; i < cells; ++i)
        for (long j = 0; j < t; ++j) rel.at(i * g + j, c++) = A.torsion[static_cast<size_t>(j)];
    return rel;
}

// Lattice {x : m*x in lattice(rel)} via the kernel of [m | rel].
IntMatrix preimage_lattice(const IntMatrix& m, const IntMatrix& rel) {
    IntMatrix ker = integer_kernel(IntMatrix::hcat(m, rel));
    std::vector<long> top;
    for (long i = 0; i < m.cols(); ++i) top.push_back(i);
    return lattice_basis(ker.select_rows(top));
}

CoeffHomology coefficient_homology(const ChainComplex& c, const FgAbGroup& A, long n) {
    long g = A.ngens();
    long cells = c.rank(n);
    IntMatrix dn = kronecker_with_identity(c.boundary_dense(n), g);
    IntMatrix dn1 = kronecker_with_identity(c.boundary_dense(n + 1), g);
    IntMatrix rel_n = module_relations(cells, A);
    IntMatrix rel_prev = module_relations(c.rank(n > 0 ? n - 1 : 0), A);

    IntMatrix cycles =
        n == 0 ? IntMatrix::identity(cells * g) : preimage_lattice(dn, rel_prev);
    IntMatrix numerator = IntMatrix::hcat(cycles, rel_n);
    IntMatrix denominator = IntMatrix::hcat(dn1, rel_n);
    CoeffHomology ch;
    ch.sq = subquotient(cells * g, numerator, denominator);
    ch.cells = cells;
    ch.agens = g;
    return ch;
}

// Tor model: kernel of B (x) A -> Z (x) A for the presentation
// 0 -> B_{n-1} -> Z_{n-1} -> H_{n-1} -> 0.
struct TorModel {
    Subquotient sq;
    IntMatrix b_basis;  // rank_{n-1} x b
    long agens = 0;
};

TorModel tor_model(const ChainComplex& c, const FgAbGroup& A, long n) {
    long g = A.ngens();
    IntMatrix bnd = c.boundary_dense(n);  // image = B_{n-1}
    IntMatrix b_basis = lattice_basis(bnd);
    IntMatrix z_basis =
        n - 1 == 0 ? IntMatrix::identity(c.rank(0)) : integer_kernel(c.boundary_dense(n - 1));
    auto incl = lattice_solve(z_basis, b_basis);
    if (!incl) throw Error("tor_model: boundaries do not lie in cycles");

    long b = b_basis.cols();
    IntMatrix rho = kronecker_with_identity(*incl, g);
    IntMatrix rel_b = module_relations(b, A);
    IntMatrix rel_z = module_relations(incl->rows(), A);

    IntMatrix kernel = preimage_lattice(rho, rel_z);
    TorModel t;
    t.sq = subquotient(b * g, IntMatrix::hcat(kernel, rel_b), rel_b);
    t.b_basis = b_basis;
    t.agens = g;
    return t;
}

// Presentation of H (x) A on pair generators (h, j), h over canonical
// generators of H and j over those of A, with both order relations. Its
// canonical form equals tensor(H, A), but the pair coordinates are kept.
PresentedQuotient tensor_pair_presentation(const FgAbGroup& H, const FgAbGroup& A) {
    long g = A.ngens();
    long n = H.ngens() * g;
    std::vector<std::vector<Int>> cols;
    for (long h = 0; h < H.ngens(); ++h)
        for (long j = 0; j < g; ++j) {
            long idx = h * g + j;
            if (H.gen_order(h) != 0) {
                std::vector<Int> e(static_cast<size_t>(n));
                e[static_cast<size_t>(idx)] = H.gen_order(h);
                cols.push_back(std::move(e));
            }
            if (A.gen_order(j) != 0) {
                std::vector<Int> e(static_cast<size_t>(n));
                e[static_cast<size_t>(idx)] = A.gen_order(j);
                cols.push_back(std::move(e));
            }
        }
    IntMatrix rels(n, static_cast<long>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) rels.set_col(static_cast<long>(c), cols[c]);
    return quotient_presentation(n, rels);
}

// iota into the concrete coefficient homology: h (x) a_j becomes the
// integral representative placed in coefficient slot j.
AbHom concrete_iota(const Subquotient& h_integral, const PresentedQuotient& pair_pres,
                    const CoeffHomology& ha) {
    AbHom iota;
    iota.domain = pair_pres.group;
    iota.codomain = ha.sq.group();
    iota.matrix = IntMatrix(ha.sq.group().ngens(), pair_pres.group.ngens());
    long g = ha.agens;
    for (long t = 0; t < pair_pres.group.ngens(); ++t) {
        std::vector<Int> pair_rep = pair_pres.representative.col(t);
        std::vector<Int> x(static_cast<size_t>(ha.cells * g));
        for (long idx = 0; idx < static_cast<long>(pair_rep.size()); ++idx) {
            if (pair_rep[static_cast<size_t>(idx)] == 0) continue;
            long h = idx / g, j = idx % g;
            std::vector<Int> chain = h_integral.representative(h);
            for (long i = 0; i < static_cast<long>(chain.size()); ++i)
                x[static_cast<size_t>(i * g + j)] +=
                    pair_rep[static_cast<size_t>(idx)] * chain[static_cast<size_t>(i)];
        }
        iota.matrix.set_col(t, ha.sq.class_of(x));
    }
    return iota;
}

// kappa out of the concrete coefficient homology: slice the boundary of a
// representative cycle into B-coordinates per coefficient slot.
AbHom concrete_kappa(const ChainComplex& c, long n, const CoeffHomology& ha, const TorModel& tor) {
    AbHom kappa;
    kappa.domain = ha.sq.group();
    kappa.codomain = tor.sq.group();
    kappa.matrix = IntMatrix(tor.sq.group().ngens(), ha.sq.group().ngens());
    long g = ha.agens;
    IntMatrix bnd = c.boundary_dense(n);
    for (long k = 0; k < ha.sq.group().ngens(); ++k) {
        std::vector<Int> x = ha.sq.representative(k);
        std::vector<Int> w(static_cast<size_t>(tor.b_basis.cols() * g));
        for (long j = 0; j < g; ++j) {
            std::vector<Int> slice(static_cast<size_t>(ha.cells));
            for (long i = 0; i < ha.cells; ++i) slice[static_cast<size_t>(i)] = x[static_cast<size_t>(i * g + j)];
            std::vector<Int> y = bnd.apply(slice);
            auto coords = hermite_solve(tor.b_basis, y);
            if (!coords) throw Error("uct naturality: boundary slice escapes B");
            for (long bcoord = 0; bcoord < tor.b_basis.cols(); ++bcoord)
                w[static_cast<size_t>(bcoord * g + j)] = (*coords)[static_cast<size_t>(bcoord)];
        }
        kappa.matrix.set_col(k, tor.sq.class_of(w));
    }
    return kappa;
}

struct UctRow {
    Subquotient h_integral;        // H_n of the integral complex
    PresentedQuotient pair_pres;   // H_n (x) A on pair generators
    FgAbGroup tens;                // H_n (x) A
    CoeffHomology ha;              // H_n(C; A), concrete
    TorModel tor;                  // Tor(H_{n-1}, A), concrete
    AbHom iota, kappa;
};

UctRow build_row(const ChainComplex& c, const FgAbGroup& A, long n) {
    UctRow row;
    row.h_integral = homology_presentation(c, n);
    row.pair_pres = tensor_pair_presentation(row.h_integral.group(), A);
    row.tens = row.pair_pres.group;
    row.ha = coefficient_homology(c, A, n);
    row.tor = tor_model(c, A, n);
    row.iota = concrete_iota(row.h_integral, row.pair_pres, row.ha);
    row.kappa = concrete_kappa(c, n, row.ha, row.tor);
    return row;
}

}  // namespace

ValidationReport uct_naturality_check(const ChainSES& ses, const CoefficientSpec& a, long n_max) {
    ValidationReport rep = verify_ses(ses);
    if (!rep.ok()) return rep;
    FgAbGroup A = a.as_group();

    for (long n = 0; n <= n_max; ++n) {
        UctRow rsub = build_row(ses.sub, A, n);
        UctRow rmid = build_row(ses.mid, A, n);
        UctRow rquot = build_row(ses.quot, A, n);

        struct Vertical {
            AbHom left, middle, right;
        };
        auto vertical = [&](const ChainMap& f, const UctRow& from, const UctRow& to) {
            Vertical v;
            long g = A.ngens();
            AbHom hf = induced_homology_map(f, n);

            // left: H(f) (x) id on pair presentations
            v.left.domain = from.tens;
            v.left.codomain = to.tens;
            v.left.matrix = IntMatrix(to.tens.ngens(), from.tens.ngens());
            for (long t = 0; t < from.tens.ngens(); ++t) {
                std::vector<Int> rep = from.pair_pres.representative.col(t);
                std::vector<Int> out(static_cast<size_t>(to.pair_pres.ambient_dim));
                for (long idx = 0; idx < static_cast<long>(rep.size()); ++idx) {
                    if (rep[static_cast<size_t>(idx)] == 0) continue;
                    long h = idx / g, j = idx % g;
                    for (long h2 = 0; h2 < hf.codomain.ngens(); ++h2)
                        out[static_cast<size_t>(h2 * g + j)] +=
                            rep[static_cast<size_t>(idx)] * hf.matrix.at(h2, h);
                }
                v.left.matrix.set_col(t, to.pair_pres.class_of(out));
            }

            // middle: chain-level f (x) id on coefficient cycles
            IntMatrix fmod = kronecker_with_identity(f.mats[static_cast<size_t>(n)], g);
            v.middle.domain = from.ha.sq.group();
            v.middle.codomain = to.ha.sq.group();
            v.middle.matrix = IntMatrix(to.ha.sq.group().ngens(), from.ha.sq.group().ngens());
            for (long k = 0; k < from.ha.sq.group().ngens(); ++k)
                v.middle.matrix.set_col(k, to.ha.sq.class_of(fmod.apply(from.ha.sq.representative(k))));

            // right: induced map on the Tor kernels via B-coordinates
            v.right.domain = from.tor.sq.group();
            v.right.codomain = to.tor.sq.group();
            v.right.matrix = IntMatrix(to.tor.sq.group().ngens(), from.tor.sq.group().ngens());
            const IntMatrix& fprev = f.mats[static_cast<size_t>(n - 1 >= 0 ? n - 1 : 0)];
            for (long k = 0; k < from.tor.sq.group().ngens(); ++k) {
                std::vector<Int> w = from.tor.sq.representative(k);
                std::vector<Int> out(static_cast<size_t>(to.tor.b_basis.cols() * g));
                for (long j = 0; j < g; ++j) {
                    std::vector<Int> slice(static_cast<size_t>(from.tor.b_basis.cols()));
                    for (long i = 0; i < from.tor.b_basis.cols(); ++i)
                        slice[static_cast<size_t>(i)] = w[static_cast<size_t>(i * g + j)];
                    std::vector<Int> y = fprev.apply(from.tor.b_basis.apply(slice));
                    auto coords = hermite_solve(to.tor.b_basis, y);
                    if (!coords) throw Error("uct naturality: image boundary escapes B");
                    for (long b = 0; b < to.tor.b_basis.cols(); ++b)
                        out[static_cast<size_t>(b * g + j)] = (*coords)[static_cast<size_t>(b)];
                }
                v.right.matrix.set_col(k, to.tor.sq.class_of(out));
            }
            return v;
        };

        auto check_row = [&](const UctRow& r, const std::string& which) {
            if (!is_injective(r.iota))
                rep.add("uct-row", which + " degree " + std::to_string(n) + ": iota not injective");
            if (!is_surjective(r.kappa))
                rep.add("uct-row", which + " degree " + std::to_string(n) + ": kappa not surjective");
            if (!check_exact_at(r.iota, r.kappa))
                rep.add("uct-row", which + " degree " + std::to_string(n) + ": middle not exact");
        };
        check_row(rsub, "sub");
        check_row(rmid, "mid");
        check_row(rquot, "quot");

        auto check_squares = [&](const ChainMap& f, const UctRow& from, const UctRow& to,
                                 const std::string& which) {
            Vertical v = vertical(f, from, to);
            if (!hom_equal(compose(to.iota, v.left), compose(v.middle, from.iota)))
                rep.add("uct-square",
                        which + " degree " + std::to_string(n) + ": tensor square fails");
            if (!hom_equal(compose(to.kappa, v.middle), compose(v.right, from.kappa)))
                rep.add("uct-square", which + " degree " + std::to_string(n) + ": Tor square fails");
        };
        check_squares(ses.inject, rsub, rmid, "inject");
        check_squares(ses.project, rmid, rquot, "project");
    }
    return rep;
}

FgAbGroup coefficient_homology_group(const ChainComplex& c, const FgAbGroup& A, long n) {
    return coefficient_homology(c, A, n).sq.group();
}

bool finite_image_predicate(const GroupoidFunction& f) { return distinct_value_count(f) >= 0; }

bool finite_image_predicate(const CoeffFunction& zeta) { return distinct_value_count(zeta) >= 0; }

}  // namespace ghom
