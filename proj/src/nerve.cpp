#include "ghom/nerve.hpp"

#include <algorithm>
#include <string>

namespace ghom {

long Nerve::index_of(long n, const std::vector<long>& tuple) const {
    const auto& lvl = levels[static_cast<size_t>(n)];
    auto it = std::lower_bound(lvl.begin(), lvl.end(), tuple);
    if (it == lvl.end() || *it != tuple) return -1;
    return static_cast<long>(it - lvl.begin());
}

namespace {

std::vector<long> face_tuple(const FiniteGroupoid& g, const std::vector<long>& t, long i) {
    long n = static_cast<long>(t.size());
    if (n == 1) {
        // Lands in level 0: a unit, kept as a 1-tuple of its arrow index.
        return {i == 0 ? g.source[t[0]] : g.range[t[0]]};
    }
    std::vector<long> out;
    out.reserve(static_cast<size_t>(n - 1));
    if (i == 0) {
        out.assign(t.begin() + 1, t.end());
    } else if (i == n) {
        out.assign(t.begin(), t.end() - 1);
    } else {
        out.assign(t.begin(), t.begin() + i - 1);
        out.push_back(g.product(t[static_cast<size_t>(i - 1)], t[static_cast<size_t>(i)]));
        out.insert(out.end(), t.begin() + i + 1, t.end());
    }
    return out;
}

std::vector<long> degeneracy_tuple(const FiniteGroupoid& g, const std::vector<long>& t, long n,
                                   long j) {
    if (n == 0) return {t[0]};  // u(x) viewed in level 1
    std::vector<long> out(t.begin(), t.begin() + j);
    long unit = (j < n) ? g.range[t[static_cast<size_t>(j)]] : g.source[t.back()];
    out.push_back(unit);
    out.insert(out.end(), t.begin() + j, t.end());
    return out;
}

}  // namespace

Nerve build_nerve(const FiniteGroupoid& g, long n_max, long tuple_budget) {
    Nerve nv;
    nv.groupoid = g;
    nv.n_max = n_max;
    nv.levels.resize(static_cast<size_t>(n_max) + 1);

    for (long u : g.units) nv.levels[0].push_back({u});
    if (n_max >= 1)
        for (long a = 0; a < g.arrow_count; ++a) nv.levels[1].push_back({a});

    // Arrows grouped by range, ascending: extending lexicographically
    // ordered (n-1)-tuples preserves lexicographic order at level n.
    std::vector<std::vector<long>> by_range(g.units.size());
    for (long a = 0; a < g.arrow_count; ++a)
        by_range[static_cast<size_t>(g.unit_position(g.range[a]))].push_back(a);

    for (long n = 2; n <= n_max; ++n) {
        auto& lvl = nv.levels[static_cast<size_t>(n)];
        for (const auto& t : nv.levels[static_cast<size_t>(n - 1)]) {
            long anchor = g.unit_position(g.source[t.back()]);
            for (long a : by_range[static_cast<size_t>(anchor)]) {
                std::vector<long> ext = t;
                ext.push_back(a);
                lvl.push_back(std::move(ext));
                if (static_cast<long>(lvl.size()) > tuple_budget)
                    throw BudgetError("nerve level " + std::to_string(n) + " exceeds tuple budget " +
                                      std::to_string(tuple_budget));
            }
        }
    }

    nv.face.resize(static_cast<size_t>(n_max) + 1);
    for (long n = 1; n <= n_max; ++n) {
        auto& maps = nv.face[static_cast<size_t>(n)];
        maps.resize(static_cast<size_t>(n) + 1);
        for (long i = 0; i <= n; ++i) {
            auto& arr = maps[static_cast<size_t>(i)];
            arr.reserve(nv.levels[static_cast<size_t>(n)].size());
            for (const auto& t : nv.levels[static_cast<size_t>(n)])
                arr.push_back(nv.index_of(n - 1, face_tuple(g, t, i)));
        }
    }

    nv.degeneracy.resize(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n < n_max; ++n) {
        auto& maps = nv.degeneracy[static_cast<size_t>(n)];
        maps.resize(static_cast<size_t>(n) + 1);
        for (long j = 0; j <= n; ++j) {
            auto& arr = maps[static_cast<size_t>(j)];
            arr.reserve(nv.levels[static_cast<size_t>(n)].size());
            for (const auto& t : nv.levels[static_cast<size_t>(n)])
                arr.push_back(nv.index_of(n + 1, degeneracy_tuple(g, t, n, j)));
        }
    }
    return nv;
}

const std::vector<long>& face_map(const Nerve& nv, long n, long i) {
    if (n < 1 || n > nv.n_max || i < 0 || i > n) throw Error("face_map: index out of range");
    return nv.face[static_cast<size_t>(n)][static_cast<size_t>(i)];
}

const std::vector<long>& degeneracy_map(const Nerve& nv, long n, long j) {
    if (n < 0 || n >= nv.n_max || j < 0 || j > n) throw Error("degeneracy_map: index out of range");
    return nv.degeneracy[static_cast<size_t>(n)][static_cast<size_t>(j)];
}

ValidationReport check_simplicial_identities(const Nerve& nv) {
    ValidationReport rep;
    auto name = [](const char* kind, long n, long i, long j, long pos) {
        return std::string(kind) + " at degree " + std::to_string(n) + ", (i,j)=(" +
               std::to_string(i) + "," + std::to_string(j) + "), tuple " + std::to_string(pos);
    };
    const auto& face = nv.face;
    const auto& deg = nv.degeneracy;

    // d_i d_j = d_{j-1} d_i for i < j
    for (long n = 2; n <= nv.n_max; ++n)
        for (long j = 1; j <= n; ++j)
            for (long i = 0; i < j; ++i)
                for (long p = 0; p < nv.level_size(n); ++p) {
                    long lhs = face[static_cast<size_t>(n - 1)][static_cast<size_t>(i)]
                                   [static_cast<size_t>(face[static_cast<size_t>(n)][static_cast<size_t>(j)]
                                                            [static_cast<size_t>(p)])];
                    long rhs = face[static_cast<size_t>(n - 1)][static_cast<size_t>(j - 1)]
                                   [static_cast<size_t>(face[static_cast<size_t>(n)][static_cast<size_t>(i)]
                                                            [static_cast<size_t>(p)])];
                    if (lhs != rhs) rep.add("dd", name("d_i d_j = d_{j-1} d_i", n, i, j, p));
                }

    // s_i s_j = s_{j+1} s_i for i <= j
    for (long n = 0; n + 2 <= nv.n_max; ++n)
        for (long j = 0; j <= n; ++j)
            for (long i = 0; i <= j; ++i)
                for (long p = 0; p < nv.level_size(n); ++p) {
                    long lhs = deg[static_cast<size_t>(n + 1)][static_cast<size_t>(i)]
                                  [static_cast<size_t>(deg[static_cast<size_t>(n)][static_cast<size_t>(j)]
                                                           [static_cast<size_t>(p)])];
                    long rhs = deg[static_cast<size_t>(n + 1)][static_cast<size_t>(j + 1)]
                                  [static_cast<size_t>(deg[static_cast<size_t>(n)][static_cast<size_t>(i)]
                                                           [static_cast<size_t>(p)])];
                    if (lhs != rhs) rep.add("ss", name("s_i s_j = s_{j+1} s_i", n, i, j, p));
                }

    // d_i s_j mixed identities
    for (long n = 0; n + 1 <= nv.n_max; ++n)
        for (long j = 0; j <= n; ++j)
            for (long i = 0; i <= n + 1; ++i)
                for (long p = 0; p < nv.level_size(n); ++p) {
                    long sj = deg[static_cast<size_t>(n)][static_cast<size_t>(j)][static_cast<size_t>(p)];
                    long lhs = face[static_cast<size_t>(n + 1)][static_cast<size_t>(i)]
                                   [static_cast<size_t>(sj)];
                    long rhs;
                    if (i == j || i == j + 1) {
                        rhs = p;
                    } else if (i < j) {
                        long di = face[static_cast<size_t>(n)][static_cast<size_t>(i)]
                                      [static_cast<size_t>(p)];
                        rhs = deg[static_cast<size_t>(n - 1)][static_cast<size_t>(j - 1)]
                                 [static_cast<size_t>(di)];
                    } else {
                        long di = face[static_cast<size_t>(n)][static_cast<size_t>(i - 1)]
                                      [static_cast<size_t>(p)];
                        rhs = deg[static_cast<size_t>(n - 1)][static_cast<size_t>(j)]
                                 [static_cast<size_t>(di)];
                    }
                    if (lhs != rhs) rep.add("ds", name("d_i s_j", n, i, j, p));
                }
    return rep;
}

std::vector<std::vector<long>> induced_simplicial_map(const EtaleFunctor& f, const Nerve& dom,
                                                      const Nerve& cod) {
    ValidationReport rep = validate_functor(f);
    if (!rep.ok()) throw ValidationError("induced_simplicial_map: invalid functor:\n" + rep.to_string());
    if (dom.n_max > cod.n_max)
        throw ValidationError("induced_simplicial_map: codomain nerve is too shallow");

    std::vector<std::vector<long>> out(static_cast<size_t>(dom.n_max) + 1);
    for (long n = 0; n <= dom.n_max; ++n) {
        auto& arr = out[static_cast<size_t>(n)];
        for (const auto& t : dom.levels[static_cast<size_t>(n)]) {
            std::vector<long> img;
            img.reserve(t.size());
            for (long a : t) img.push_back(f.arrow_map[static_cast<size_t>(a)]);
            long idx = cod.index_of(n, img);
            if (idx < 0) throw ValidationError("induced_simplicial_map: image tuple missing");
            arr.push_back(idx);
        }
    }
    return out;
}

}  // namespace ghom
