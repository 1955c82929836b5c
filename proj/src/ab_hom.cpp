#include "ghom/ab_hom.hpp"

#include "ghom/common.hpp"
#include "ghom/normal_forms.hpp"
#include "ghom/presentation.hpp"

namespace ghom {

AbHom identity_hom(const FgAbGroup& g) { return {g, g, IntMatrix::identity(g.ngens())}; }

AbHom zero_hom(const FgAbGroup& dom, const FgAbGroup& cod) {
    return {dom, cod, IntMatrix(cod.ngens(), dom.ngens())};
}

bool well_defined(const AbHom& f) {
    if (f.matrix.rows() != f.codomain.ngens() || f.matrix.cols() != f.domain.ngens()) return false;
    long tdom = static_cast<long>(f.domain.torsion.size());
    long tcod = static_cast<long>(f.codomain.torsion.size());
    for (long j = 0; j < tdom; ++j) {
        const Int& d = f.domain.torsion[static_cast<size_t>(j)];
        for (long i = 0; i < f.codomain.ngens(); ++i) {
            Int v = d * f.matrix.at(i, j);
            if (i < tcod) {
                if (v % f.codomain.torsion[static_cast<size_t>(i)] != 0) return false;
            } else if (v != 0) {
                return false;
            }
        }
    }
    return true;
}

AbHom compose(const AbHom& outer, const AbHom& inner) {
    if (!(outer.domain == inner.codomain)) throw Error("compose: domain/codomain mismatch");
    return {inner.domain, outer.codomain, outer.matrix * inner.matrix};
}

bool hom_equal(const AbHom& f, const AbHom& g) {
    if (!(f.domain == g.domain) || !(f.codomain == g.codomain)) return false;
    long tcod = static_cast<long>(f.codomain.torsion.size());
    for (long j = 0; j < f.domain.ngens(); ++j)
        for (long i = 0; i < f.codomain.ngens(); ++i) {
            Int diff = f.matrix.at(i, j) - g.matrix.at(i, j);
            if (i < tcod) {
                if (diff % f.codomain.torsion[static_cast<size_t>(i)] != 0) return false;
            } else if (diff != 0) {
                return false;
            }
        }
    return true;
}

IntMatrix image_lattice(const AbHom& f) {
    return IntMatrix::hcat(f.matrix, relation_matrix(f.codomain));
}

IntMatrix kernel_lattice(const AbHom& f) {
    // x with f(x) in the relation lattice: kernel of [M | Rel_cod],
    // projected to the x block.
    IntMatrix rel = relation_matrix(f.codomain);
    IntMatrix stacked = IntMatrix::hcat(f.matrix, rel);
    IntMatrix ker = integer_kernel(stacked);
    std::vector<long> top;
    for (long i = 0; i < f.domain.ngens(); ++i) top.push_back(i);
    IntMatrix projected = ker.select_rows(top);
    // Domain relations always belong; include them before taking a basis so
    // the zero map on a torsion domain still yields the full kernel.
    return lattice_basis(IntMatrix::hcat(projected, relation_matrix(f.domain)));
}

std::pair<FgAbGroup, FgAbGroup> hom_image_kernel(const AbHom& f) {
    if (!well_defined(f)) throw Error("hom_image_kernel: homomorphism is not well defined");
    IntMatrix rel_cod = relation_matrix(f.codomain);
    FgAbGroup image = subquotient(f.codomain.ngens(), image_lattice(f), rel_cod).group();
    IntMatrix ker = kernel_lattice(f);
    FgAbGroup kernel = subquotient(f.domain.ngens(), ker, relation_matrix(f.domain)).group();
    return {image, kernel};
}

bool check_exact_at(const AbHom& f, const AbHom& g) {
    if (!(f.codomain == g.domain)) throw Error("check_exact_at: maps are not composable");
    if (!well_defined(f) || !well_defined(g)) throw Error("check_exact_at: ill-defined homomorphism");
    return lattice_equal(image_lattice(f), kernel_lattice(g));
}

bool is_injective(const AbHom& f) {
    auto [image, kernel] = hom_image_kernel(f);
    (void)image;
    return kernel.is_trivial();
}

bool is_surjective(const AbHom& f) {
    // The image subgroup is everything iff its lattice spans the free cover.
    return lattice_subset(IntMatrix::identity(f.codomain.ngens()), image_lattice(f));
}

}  // namespace ghom
