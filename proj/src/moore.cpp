#include "ghom/moore.hpp"

#include <string>

#include "ghom/normal_forms.hpp"

namespace ghom {

IntMatrix pushforward_matrix(const std::vector<long>& map, long domain_size, long codomain_size) {
    if (static_cast<long>(map.size()) != domain_size)
        throw Error("pushforward_matrix: map length mismatch");
    IntMatrix m(codomain_size, domain_size);
    for (long x = 0; x < domain_size; ++x) {
        long y = map[static_cast<size_t>(x)];
        if (y < 0 || y >= codomain_size) throw Error("pushforward_matrix: image out of range");
        m.at(y, x) += 1;
    }
    return m;
}

ChainComplex moore_complex(const Nerve& nv) {
    ChainComplex c;
    c.length = nv.n_max;
    c.zero_above = false;  // the nerve continues above the cutoff
    for (long n = 0; n <= nv.n_max; ++n) c.ranks.push_back(nv.level_size(n));
    c.boundaries.resize(static_cast<size_t>(nv.n_max) + 1);
    for (long n = 1; n <= nv.n_max; ++n) {
        SparseIntMatrix s;
        s.rows = c.rank(n - 1);
        s.cols = c.rank(n);
        for (long i = 0; i <= n; ++i) {
            const auto& fi = nv.face[static_cast<size_t>(n)][static_cast<size_t>(i)];
            Int sign = (i % 2 == 0) ? 1 : -1;
            for (long p = 0; p < c.rank(n); ++p) s.add(fi[static_cast<size_t>(p)], p, sign);
        }
        c.boundaries[static_cast<size_t>(n)] = std::move(s);
    }
    ValidationReport rep = verify_boundary_squares_to_zero(c);
    if (!rep.ok()) throw Error("moore_complex: boundary does not square to zero:\n" + rep.to_string());
    return c;
}

Subquotient homology_presentation(const ChainComplex& c, long n) {
    if (n < 0 || n > c.top_homology_degree())
        throw Error("homology: degree " + std::to_string(n) + " outside the valid window");
    IntMatrix cycles = (n == 0) ? IntMatrix::identity(c.rank(0)) : integer_kernel(c.boundary_dense(n));
    IntMatrix boundaries = c.boundary_dense(n + 1);
    return subquotient(c.rank(n), cycles, boundaries);
}

FgAbGroup homology(const ChainComplex& c, long n) { return homology_presentation(c, n).group(); }

FgAbGroup homology_with_coefficients(const ChainComplex& c, const CoefficientSpec& a, long n) {
    if (a.is_integers()) return homology(c, n);
    if (a.is_prime_field()) {
        if (n < 0 || n > c.top_homology_degree())
            throw Error("homology: degree " + std::to_string(n) + " outside the valid window");
        const Int& p = a.modulus;
        long rank_dn = (n == 0) ? 0 : rank_mod_p(c.boundary_dense(n), p);
        long rank_dn1 = rank_mod_p(c.boundary_dense(n + 1), p);
        long dim = c.rank(n) - rank_dn - rank_dn1;
        std::vector<Int> factors(static_cast<size_t>(dim), p);
        return FgAbGroup::canonical(0, std::move(factors));
    }
    // Composite or mixed coefficients: split middle of the UCT sequence.
    FgAbGroup hn = homology(c, n);
    FgAbGroup hn1 = (n == 0) ? FgAbGroup::trivial() : homology(c, n - 1);
    return direct_sum({tensor(hn, a.as_group()), tor1(hn1, a.as_group())});
}

HomologyResult homology_range(const ChainComplex& c, const CoefficientSpec& a, long max_degree) {
    if (max_degree > c.top_homology_degree())
        throw Error("homology_range: max degree outside the valid window");
    HomologyResult r;
    r.coeff = a;
    for (long n = 0; n <= max_degree; ++n) r.groups.push_back(homology_with_coefficients(c, a, n));
    return r;
}

ChainMap induced_chain_map(const EtaleFunctor& f, const Nerve& dom, const Nerve& cod) {
    auto simp = induced_simplicial_map(f, dom, cod);
    ChainMap cm;
    cm.source = moore_complex(dom);
    cm.target = moore_complex(cod);
    for (long n = 0; n <= dom.n_max; ++n)
        cm.mats.push_back(
            pushforward_matrix(simp[static_cast<size_t>(n)], dom.level_size(n), cod.level_size(n)));
    ValidationReport rep = verify_chain_map(cm);
    if (!rep.ok()) throw Error("induced_chain_map: not a chain map:\n" + rep.to_string());
    return cm;
}

AbHom induced_homology_map(const ChainMap& cm, long n) {
    if (n < 0 || n > cm.top_degree()) throw Error("induced_homology_map: degree out of range");
    Subquotient src = homology_presentation(cm.source, n);
    Subquotient tgt = homology_presentation(cm.target, n);
    const IntMatrix& f = cm.mats[static_cast<size_t>(n)];

    AbHom h;
    h.domain = src.group();
    h.codomain = tgt.group();
    h.matrix = IntMatrix(tgt.group().ngens(), src.group().ngens());
    for (long j = 0; j < src.group().ngens(); ++j) {
        std::vector<Int> image = f.apply(src.representative(j));
        h.matrix.set_col(j, tgt.class_of(image));
    }
    if (!well_defined(h)) throw Error("induced_homology_map: class chase produced an ill-defined map");
    return h;
}

ChainHomotopy similarity_chain_homotopy(const EtaleFunctor& rho, const EtaleFunctor& sigma,
                                        const std::vector<long>& theta, long n_max) {
    if (!(rho.domain == sigma.domain) || !(rho.codomain == sigma.codomain))
        throw ValidationError("similarity: functors must share endpoints");
    ValidationReport vr = validate_functor(rho);
    ValidationReport vs = validate_functor(sigma);
    if (!vr.ok() || !vs.ok()) throw ValidationError("similarity: invalid functor");
    const FiniteGroupoid& dom = rho.domain;
    const FiniteGroupoid& cod = rho.codomain;
    if (theta.size() != dom.units.size()) throw ValidationError("similarity: theta length mismatch");

    // theta(x) : rho(x) -> sigma(x) in the codomain.
    for (size_t i = 0; i < dom.units.size(); ++i) {
        long th = theta[i];
        if (th < 0 || th >= cod.arrow_count) throw ValidationError("similarity: theta out of range");
        long rho_x = cod.units[static_cast<size_t>(rho.unit_map[i])];
        long sigma_x = cod.units[static_cast<size_t>(sigma.unit_map[i])];
        if (cod.source[th] != rho_x || cod.range[th] != sigma_x)
            throw ValidationError("similarity: theta endpoints wrong at unit position " +
                                  std::to_string(i));
    }
    // Naturality: theta(r g) . rho(g) = sigma(g) . theta(s g).
    auto theta_at = [&](long unit_arrow) {
        return theta[static_cast<size_t>(dom.unit_position(unit_arrow))];
    };
    for (long g = 0; g < dom.arrow_count; ++g) {
        long lhs = cod.product(theta_at(dom.range[g]), rho.arrow_map[static_cast<size_t>(g)]);
        long rhs = cod.product(sigma.arrow_map[static_cast<size_t>(g)], theta_at(dom.source[g]));
        if (lhs != rhs)
            throw ValidationError("similarity: naturality fails at arrow " + std::to_string(g));
    }

    Nerve dom_nerve = build_nerve(dom, n_max);
    Nerve cod_nerve = build_nerve(cod, n_max + 1);

    ChainHomotopy hom;
    hom.from = induced_chain_map(rho, dom_nerve, cod_nerve);
    hom.to = induced_chain_map(sigma, dom_nerve, cod_nerve);

    // k_j inserts theta after j sigma-images, with rho-images beyond.
    for (long n = 0; n <= n_max; ++n) {
        IntMatrix hn(cod_nerve.level_size(n + 1), dom_nerve.level_size(n));
        for (long j = 0; j <= n; ++j) {
            Int sign = (j % 2 == 0) ? 1 : -1;
            for (long p = 0; p < dom_nerve.level_size(n); ++p) {
                const auto& t = dom_nerve.levels[static_cast<size_t>(n)][static_cast<size_t>(p)];
                std::vector<long> img;
                img.reserve(t.size() + 1);
                if (n == 0) {
                    img.push_back(theta_at(t[0]));
                } else {
                    for (long k = 0; k < j; ++k)
                        img.push_back(sigma.arrow_map[static_cast<size_t>(t[static_cast<size_t>(k)])]);
                    long anchor = (j < n) ? dom.range[t[static_cast<size_t>(j)]]
                                          : dom.source[t[static_cast<size_t>(n - 1)]];
                    img.push_back(theta_at(anchor));
                    for (long k = j; k < n; ++k)
                        img.push_back(rho.arrow_map[static_cast<size_t>(t[static_cast<size_t>(k)])]);
                }
                long idx = cod_nerve.index_of(n + 1, img);
                if (idx < 0) throw Error("similarity: homotopy tuple missing from the nerve");
                hn.at(idx, p) += sign;
            }
        }
        hom.h.push_back(std::move(hn));
    }

    ValidationReport rep = verify_chain_homotopy(hom);
    if (!rep.ok()) throw Error("similarity: homotopy identity fails:\n" + rep.to_string());
    return hom;
}

}  // namespace ghom
