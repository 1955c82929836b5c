#include "ghom/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ghom {

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) os << v.axiom << ": " << v.detail << "\n";
    return os.str();
}

std::optional<long> FiniteGroupoid::compose_lookup(long a, long b) const {
    auto it = std::lower_bound(compose.begin(), compose.end(), std::array<long, 3>{a, b, -1},
                               [](const std::array<long, 3>& x, const std::array<long, 3>& y) {
                                   return x[0] != y[0] ? x[0] < y[0] : x[1] < y[1];
                               });
    if (it != compose.end() && (*it)[0] == a && (*it)[1] == b) return (*it)[2];
    return std::nullopt;
}

long FiniteGroupoid::product(long a, long b) const {
    auto p = compose_lookup(a, b);
    if (!p) throw ValidationError("product: pair not composable");
    return *p;
}

bool FiniteGroupoid::is_unit(long a) const {
    return std::binary_search(units.begin(), units.end(), a);
}

long FiniteGroupoid::unit_position(long unit_arrow) const {
    auto it = std::lower_bound(units.begin(), units.end(), unit_arrow);
    if (it == units.end() || *it != unit_arrow) return -1;
    return static_cast<long>(it - units.begin());
}

void FiniteGroupoid::sort_compose_table() {
    std::sort(compose.begin(), compose.end(),
              [](const std::array<long, 3>& x, const std::array<long, 3>& y) {
                  return x[0] != y[0] ? x[0] < y[0] : x[1] < y[1];
              });
}

namespace {

std::string arrow_str(long a) { return std::to_string(a); }

bool in_range(long a, long m) { return a >= 0 && a < m; }

}  // namespace

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
    ValidationReport rep;
    long m = g.arrow_count;

    // Structural checks come first; axiom checks assume indices are sane.
    bool structural_ok = true;
    auto structural = [&](bool cond, const std::string& detail) {
        if (!cond) {
            rep.add("structure", detail);
            structural_ok = false;
        }
    };
    structural(std::is_sorted(g.units.begin(), g.units.end()) &&
                   std::adjacent_find(g.units.begin(), g.units.end()) == g.units.end(),
               "units must be sorted and unique");
    for (long u : g.units) structural(in_range(u, m), "unit index out of range: " + arrow_str(u));
    structural(static_cast<long>(g.source.size()) == m, "source array length mismatch");
    structural(static_cast<long>(g.range.size()) == m, "range array length mismatch");
    structural(static_cast<long>(g.inverse.size()) == m, "inverse array length mismatch");
    if (!structural_ok) return rep;
    for (long a = 0; a < m; ++a) {
        structural(in_range(g.source[a], m) && g.is_unit(g.source[a]),
                   "source of " + arrow_str(a) + " is not a unit arrow");
        structural(in_range(g.range[a], m) && g.is_unit(g.range[a]),
                   "range of " + arrow_str(a) + " is not a unit arrow");
        structural(in_range(g.inverse[a], m), "inverse of " + arrow_str(a) + " out of range");
    }
    std::set<std::pair<long, long>> keys;
    for (const auto& e : g.compose) {
        structural(in_range(e[0], m) && in_range(e[1], m) && in_range(e[2], m),
                   "composition entry out of range");
        structural(keys.insert({e[0], e[1]}).second,
                   "duplicate composition entry (" + arrow_str(e[0]) + "," + arrow_str(e[1]) + ")");
    }
    if (!structural_ok) return rep;

    // Domain of composition: defined exactly on pairs with s(a) = r(b).
    for (const auto& e : g.compose)
        if (g.source[e[0]] != g.range[e[1]])
            rep.add("composition-domain", "table defines non-composable pair (" + arrow_str(e[0]) +
                                              "," + arrow_str(e[1]) + ")");
    for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b)
            if (g.source[a] == g.range[b] && !g.compose_lookup(a, b))
                rep.add("composition-domain", "composable pair (" + arrow_str(a) + "," +
                                                  arrow_str(b) + ") missing from the table");

    for (long x : g.units)
        if (g.range[x] != x || g.source[x] != x)
            rep.add("G1", "unit " + arrow_str(x) + " has r or s not equal to itself");

    for (long a = 0; a < m; ++a) {
        auto left = g.compose_lookup(g.range[a], a);
        auto right = g.compose_lookup(a, g.source[a]);
        if (!left || *left != a || !right || *right != a)
            rep.add("G2", "unit laws fail at arrow " + arrow_str(a));
    }

    for (long a = 0; a < m; ++a) {
        long inv = g.inverse[a];
        if (g.range[inv] != g.source[a] || g.source[inv] != g.range[a])
            rep.add("G3", "inverse of " + arrow_str(a) + " has wrong endpoints");
    }

    for (long a = 0; a < m; ++a) {
        long inv = g.inverse[a];
        auto p1 = g.compose_lookup(inv, a);
        auto p2 = g.compose_lookup(a, inv);
        if (!p1 || *p1 != g.source[a] || !p2 || *p2 != g.range[a])
            rep.add("G4", "inverse laws fail at arrow " + arrow_str(a));
    }

    for (const auto& e : g.compose) {
        if (g.range[e[2]] != g.range[e[0]] || g.source[e[2]] != g.source[e[1]])
            rep.add("G5", "endpoints of product (" + arrow_str(e[0]) + "," + arrow_str(e[1]) +
                              ") are wrong");
    }

    for (const auto& e : g.compose) {
        long a = e[0], b = e[1], ab = e[2];
        for (long c = 0; c < m; ++c) {
            if (g.source[b] != g.range[c]) continue;
            auto bc = g.compose_lookup(b, c);
            auto ab_c = g.compose_lookup(ab, c);
            if (!bc || !ab_c) continue;  // reported by the domain check
            auto a_bc = g.compose_lookup(a, *bc);
            if (!a_bc) continue;
            if (*ab_c != *a_bc)
                rep.add("G6", "associativity fails on triple (" + arrow_str(a) + "," +
                                  arrow_str(b) + "," + arrow_str(c) + ")");
        }
    }
    return rep;
}

FiniteGroupoid derive_structure(long arrows, const std::vector<std::array<long, 3>>& compose,
                                const std::vector<long>& inverse) {
    if (static_cast<long>(inverse.size()) != arrows)
        throw ValidationError("derive_structure: inverse array length mismatch");
    for (long a = 0; a < arrows; ++a)
        if (!in_range(inverse[a], arrows))
            throw ValidationError("derive_structure: inverse out of range at " + arrow_str(a));
    for (const auto& e : compose)
        if (!in_range(e[0], arrows) || !in_range(e[1], arrows) || !in_range(e[2], arrows))
            throw ValidationError("derive_structure: composition entry out of range");

    FiniteGroupoid g;
    g.arrow_count = arrows;
    g.compose = compose;
    g.inverse = inverse;
    g.sort_compose_table();

    // (G1') involution.
    for (long a = 0; a < arrows; ++a)
        if (inverse[inverse[a]] != a)
            throw ValidationError("G1': inverse is not an involution at arrow " + arrow_str(a));

    // (G3') every (a, a^{-1}) is composable.
    for (long a = 0; a < arrows; ++a)
        if (!g.compose_lookup(a, inverse[a]))
            throw ValidationError("G3': (" + arrow_str(a) + ", inverse) not composable");

    // (G4') cancellation.
    for (const auto& e : g.compose) {
        long a = e[0], b = e[1], ab = e[2];
        auto left = g.compose_lookup(inverse[a], ab);
        if (!left || *left != b)
            throw ValidationError("G4': left cancellation fails on (" + arrow_str(a) + "," +
                                  arrow_str(b) + ")");
        auto right = g.compose_lookup(ab, inverse[b]);
        if (!right || *right != a)
            throw ValidationError("G4': right cancellation fails on (" + arrow_str(a) + "," +
                                  arrow_str(b) + ")");
    }

    // (G2') domain control and associativity.
    for (const auto& e : g.compose) {
        long a = e[0], b = e[1], ab = e[2];
        for (long c = 0; c < arrows; ++c) {
            if (!g.compose_lookup(b, c)) continue;
            long bc = *g.compose_lookup(b, c);
            auto p1 = g.compose_lookup(ab, c);
            auto p2 = g.compose_lookup(a, bc);
            if (!p1 || !p2)
                throw ValidationError("G2': composable triple not closed at (" + arrow_str(a) +
                                      "," + arrow_str(b) + "," + arrow_str(c) + ")");
            if (*p1 != *p2)
                throw ValidationError("G2': associativity fails on (" + arrow_str(a) + "," +
                                      arrow_str(b) + "," + arrow_str(c) + ")");
        }
    }

    // Units and endpoint maps are derived data.
    g.source.resize(static_cast<size_t>(arrows));
    g.range.resize(static_cast<size_t>(arrows));
    std::set<long> unit_set;
    for (long a = 0; a < arrows; ++a) {
        g.range[a] = g.product(a, inverse[a]);
        g.source[a] = g.product(inverse[a], a);
        unit_set.insert(g.range[a]);
        unit_set.insert(g.source[a]);
    }
    g.units.assign(unit_set.begin(), unit_set.end());

    // Derived domain of composition must agree with source-range matching.
    for (long a = 0; a < arrows; ++a)
        for (long b = 0; b < arrows; ++b) {
            bool match = g.source[a] == g.range[b];
            bool defined = g.compose_lookup(a, b).has_value();
            if (match != defined)
                throw ValidationError(
                    "derive_structure: composable set disagrees with source-range matching at (" +
                    arrow_str(a) + "," + arrow_str(b) + ")");
        }

    ValidationReport rep = validate_groupoid(g);
    if (!rep.ok()) throw ValidationError("derive_structure: derived groupoid invalid:\n" + rep.to_string());
    return g;
}

namespace {

void check_group_table(const std::vector<std::vector<long>>& table, long& identity) {
    long n = static_cast<long>(table.size());
    if (n == 0) throw ValidationError("group: empty multiplication table");
    for (const auto& row : table)
        if (static_cast<long>(row.size()) != n) throw ValidationError("group: table is not square");
    for (const auto& row : table)
        for (long v : row)
            if (!in_range(v, n)) throw ValidationError("group: table entry out of range");
    identity = -1;
    for (long e = 0; e < n; ++e) {
        bool is_id = true;
        for (long a = 0; a < n; ++a)
            if (table[static_cast<size_t>(e)][static_cast<size_t>(a)] != a ||
                table[static_cast<size_t>(a)][static_cast<size_t>(e)] != a)
                is_id = false;
        if (is_id) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw ValidationError("group: table has no identity element");
    for (long a = 0; a < n; ++a) {
        bool has_inv = false;
        for (long b = 0; b < n; ++b)
            if (table[static_cast<size_t>(a)][static_cast<size_t>(b)] == identity &&
                table[static_cast<size_t>(b)][static_cast<size_t>(a)] == identity)
                has_inv = true;
        if (!has_inv) throw ValidationError("group: element " + std::to_string(a) + " has no inverse");
    }
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b)
            for (long c = 0; c < n; ++c) {
                long ab = table[static_cast<size_t>(a)][static_cast<size_t>(b)];
                long bc = table[static_cast<size_t>(b)][static_cast<size_t>(c)];
                if (table[static_cast<size_t>(ab)][static_cast<size_t>(c)] !=
                    table[static_cast<size_t>(a)][static_cast<size_t>(bc)])
                    throw ValidationError("group: table is not associative");
            }
}

}  // namespace

FiniteGroupoid group_groupoid(const std::vector<std::vector<long>>& table) {
    long identity;
    check_group_table(table, identity);
    long n = static_cast<long>(table.size());
    FiniteGroupoid g;
    g.arrow_count = n;
    g.units = {identity};
    g.source.assign(static_cast<size_t>(n), identity);
    g.range.assign(static_cast<size_t>(n), identity);
    g.inverse.resize(static_cast<size_t>(n));
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) {
            g.compose.push_back({a, b, table[static_cast<size_t>(a)][static_cast<size_t>(b)]});
            if (table[static_cast<size_t>(a)][static_cast<size_t>(b)] == identity) g.inverse[a] = b;
        }
    g.sort_compose_table();
    return g;
}

FiniteGroupoid pair_groupoid(long n) {
    // Arrow (i, j) gets index i*n + j; lexicographic in (i, j).
    FiniteGroupoid g;
    g.arrow_count = n * n;
    for (long i = 0; i < n; ++i) g.units.push_back(i * n + i);
    g.source.resize(static_cast<size_t>(n * n));
    g.range.resize(static_cast<size_t>(n * n));
    g.inverse.resize(static_cast<size_t>(n * n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            long a = i * n + j;
            g.range[a] = i * n + i;
            g.source[a] = j * n + j;
            g.inverse[a] = j * n + i;
            for (long k = 0; k < n; ++k) g.compose.push_back({a, j * n + k, i * n + k});
        }
    g.sort_compose_table();
    return g;
}

FiniteGroupoid unit_groupoid(long n) {
    FiniteGroupoid g;
    g.arrow_count = n;
    g.source.resize(static_cast<size_t>(n));
    g.range.resize(static_cast<size_t>(n));
    g.inverse.resize(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        g.units.push_back(i);
        g.source[i] = g.range[i] = g.inverse[i] = i;
        g.compose.push_back({i, i, i});
    }
    return g;
}

FiniteGroupoid transformation_groupoid(const std::vector<std::vector<long>>& group_table,
                                       const std::vector<std::vector<long>>& action) {
    long identity;
    check_group_table(group_table, identity);
    long ng = static_cast<long>(group_table.size());
    if (static_cast<long>(action.size()) != ng)
        throw ValidationError("transformation: action must have one row per group element");
    long nx = action.empty() ? 0 : static_cast<long>(action[0].size());
    if (nx == 0) throw ValidationError("transformation: empty point set");
    for (const auto& row : action) {
        if (static_cast<long>(row.size()) != nx)
            throw ValidationError("transformation: ragged action table");
        for (long v : row)
            if (!in_range(v, nx)) throw ValidationError("transformation: action value out of range");
    }
    auto act = [&](long gidx, long x) { return action[static_cast<size_t>(gidx)][static_cast<size_t>(x)]; };
    for (long x = 0; x < nx; ++x)
        if (act(identity, x) != x)
            throw ValidationError("transformation: identity does not act trivially at point " +
                                  std::to_string(x));
    for (long h = 0; h < ng; ++h)
        for (long k = 0; k < ng; ++k)
            for (long x = 0; x < nx; ++x) {
                long hk = group_table[static_cast<size_t>(h)][static_cast<size_t>(k)];
                if (act(h, act(k, x)) != act(hk, x))
                    throw ValidationError("transformation: action is not compatible with the group law");
            }

    // Arrow (g, x) with r = g.x and s = x; index g*nx + x.
    FiniteGroupoid g;
    g.arrow_count = ng * nx;
    g.source.resize(static_cast<size_t>(ng * nx));
    g.range.resize(static_cast<size_t>(ng * nx));
    g.inverse.resize(static_cast<size_t>(ng * nx));
    for (long x = 0; x < nx; ++x) g.units.push_back(identity * nx + x);
    std::sort(g.units.begin(), g.units.end());
    auto arrow = [&](long gi, long x) { return gi * nx + x; };
    for (long gi = 0; gi < ng; ++gi)
        for (long x = 0; x < nx; ++x) {
            long a = arrow(gi, x);
            g.source[a] = arrow(identity, x);
            g.range[a] = arrow(identity, act(gi, x));
            long ginv = -1;
            for (long b = 0; b < ng; ++b)
                if (group_table[static_cast<size_t>(gi)][static_cast<size_t>(b)] == identity) ginv = b;
            g.inverse[a] = arrow(ginv, act(gi, x));
            for (long h = 0; h < ng; ++h) {
                // (h, g.x) . (g, x) = (hg, x)
                long hg = group_table[static_cast<size_t>(h)][static_cast<size_t>(gi)];
                g.compose.push_back({arrow(h, act(gi, x)), a, arrow(hg, x)});
            }
        }
    g.sort_compose_table();
    return g;
}

FiniteGroupoid equivalence_relation_groupoid(long n, const std::vector<std::vector<long>>& partition) {
    std::vector<long> block(static_cast<size_t>(n), -1);
    for (size_t b = 0; b < partition.size(); ++b)
        for (long x : partition[b]) {
            if (!in_range(x, n)) throw ValidationError("equivalence_relation: point out of range");
            if (block[static_cast<size_t>(x)] != -1)
                throw ValidationError("equivalence_relation: point in two blocks");
            block[static_cast<size_t>(x)] = static_cast<long>(b);
        }
    for (long x = 0; x < n; ++x)
        if (block[static_cast<size_t>(x)] == -1)
            throw ValidationError("equivalence_relation: point " + std::to_string(x) + " not covered");

    // Arrows are related pairs (i, j), lexicographic.
    std::vector<std::pair<long, long>> arrows;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (block[static_cast<size_t>(i)] == block[static_cast<size_t>(j)]) arrows.push_back({i, j});
    std::map<std::pair<long, long>, long> index;
    for (size_t k = 0; k < arrows.size(); ++k) index[arrows[k]] = static_cast<long>(k);

    FiniteGroupoid g;
    g.arrow_count = static_cast<long>(arrows.size());
    g.source.resize(arrows.size());
    g.range.resize(arrows.size());
    g.inverse.resize(arrows.size());
    for (size_t k = 0; k < arrows.size(); ++k) {
        auto [i, j] = arrows[k];
        if (i == j) g.units.push_back(static_cast<long>(k));
        g.range[k] = index[{i, i}];
        g.source[k] = index[{j, j}];
        g.inverse[k] = index[{j, i}];
        for (long l = 0; l < n; ++l)
            if (block[static_cast<size_t>(j)] == block[static_cast<size_t>(l)])
                g.compose.push_back({static_cast<long>(k), index[{j, l}], index[{i, l}]});
    }
    std::sort(g.units.begin(), g.units.end());
    g.sort_compose_table();
    return g;
}

FiniteGroupoid group_bundle_groupoid(const std::vector<std::vector<std::vector<long>>>& tables) {
    std::vector<FiniteGroupoid> parts;
    parts.reserve(tables.size());
    for (const auto& t : tables) parts.push_back(group_groupoid(t));
    return disjoint_union(parts);
}

FiniteGroupoid disjoint_union(const std::vector<FiniteGroupoid>& parts) {
    FiniteGroupoid g;
    long offset = 0;
    for (const FiniteGroupoid& p : parts) {
        for (long u : p.units) g.units.push_back(u + offset);
        for (long a = 0; a < p.arrow_count; ++a) {
            g.source.push_back(p.source[a] + offset);
            g.range.push_back(p.range[a] + offset);
            g.inverse.push_back(p.inverse[a] + offset);
        }
        for (const auto& e : p.compose) g.compose.push_back({e[0] + offset, e[1] + offset, e[2] + offset});
        offset += p.arrow_count;
    }
    g.arrow_count = offset;
    std::sort(g.units.begin(), g.units.end());
    g.sort_compose_table();
    return g;
}

std::vector<std::vector<long>> orbits(const FiniteGroupoid& g) {
    long nu = static_cast<long>(g.units.size());
    std::vector<long> parent(static_cast<size_t>(nu));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long(long)> find = [&](long x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (long a = 0; a < g.arrow_count; ++a) {
        long i = g.unit_position(g.source[a]);
        long j = g.unit_position(g.range[a]);
        long ri = find(i), rj = find(j);
        if (ri != rj) parent[static_cast<size_t>(std::max(ri, rj))] = std::min(ri, rj);
    }
    std::map<long, std::vector<long>> blocks;
    for (long i = 0; i < nu; ++i) blocks[find(i)].push_back(i);
    std::vector<std::vector<long>> out;
    for (auto& [root, blk] : blocks) out.push_back(std::move(blk));
    return out;
}

bool is_saturated(const FiniteGroupoid& g, const std::vector<long>& unit_positions) {
    std::set<long> sel(unit_positions.begin(), unit_positions.end());
    for (const auto& blk : orbits(g)) {
        bool any = false, all = true;
        for (long u : blk) {
            if (sel.count(u))
                any = true;
            else
                all = false;
        }
        if (any && !all) return false;
    }
    return true;
}

FiniteGroupoid materialize_subgroupoid(const FiniteGroupoid& g, const std::vector<long>& arrows,
                                       std::vector<long>* arrow_map) {
    std::vector<long> sel = arrows;
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    std::vector<long> new_index(static_cast<size_t>(g.arrow_count), -1);
    for (size_t k = 0; k < sel.size(); ++k) new_index[static_cast<size_t>(sel[k])] = static_cast<long>(k);

    auto inside = [&](long a) { return new_index[static_cast<size_t>(a)] >= 0; };
    for (long a : sel) {
        if (!inside(g.inverse[a]))
            throw ValidationError("subgroupoid: not closed under inversion at arrow " + arrow_str(a));
        if (!inside(g.source[a]) || !inside(g.range[a]))
            throw ValidationError("subgroupoid: missing unit for arrow " + arrow_str(a));
    }

    FiniteGroupoid s;
    s.arrow_count = static_cast<long>(sel.size());
    for (long u : g.units)
        if (inside(u)) s.units.push_back(new_index[static_cast<size_t>(u)]);
    for (long a : sel) {
        s.source.push_back(new_index[static_cast<size_t>(g.source[a])]);
        s.range.push_back(new_index[static_cast<size_t>(g.range[a])]);
        s.inverse.push_back(new_index[static_cast<size_t>(g.inverse[a])]);
    }
    for (const auto& e : g.compose)
        if (inside(e[0]) && inside(e[1])) {
            if (!inside(e[2]))
                throw ValidationError("subgroupoid: not closed under composition at (" +
                                      arrow_str(e[0]) + "," + arrow_str(e[1]) + ")");
            s.compose.push_back({new_index[static_cast<size_t>(e[0])], new_index[static_cast<size_t>(e[1])],
                                 new_index[static_cast<size_t>(e[2])]});
        }
    s.sort_compose_table();
    if (arrow_map) *arrow_map = sel;
    return s;
}

Reduction reduction(const FiniteGroupoid& g, const std::vector<long>& unit_positions) {
    std::set<long> sel_units;
    for (long p : unit_positions) {
        if (p < 0 || p >= static_cast<long>(g.units.size()))
            throw ValidationError("reduction: unit position out of range");
        sel_units.insert(g.units[static_cast<size_t>(p)]);
    }
    std::vector<long> arrows;
    for (long a = 0; a < g.arrow_count; ++a)
        if (sel_units.count(g.source[a]) && sel_units.count(g.range[a])) arrows.push_back(a);

    Reduction red;
    red.groupoid = materialize_subgroupoid(g, arrows, &red.arrow_map);

    // Full means r(s^{-1}(U)) is the whole unit space: every orbit meets U.
    std::set<long> sel_pos(unit_positions.begin(), unit_positions.end());
    red.full = true;
    for (const auto& blk : orbits(g)) {
        bool meets = false;
        for (long u : blk)
            if (sel_pos.count(u)) meets = true;
        if (!meets) red.full = false;
    }
    return red;
}

IsotropyResult isotropy(const FiniteGroupoid& g) {
    std::vector<long> iso;
    for (long a = 0; a < g.arrow_count; ++a)
        if (g.source[a] == g.range[a]) iso.push_back(a);
    IsotropyResult res;
    res.subgroupoid = materialize_subgroupoid(g, iso, &res.arrow_map);
    res.principal = static_cast<long>(iso.size()) == static_cast<long>(g.units.size());
    res.minimal = orbits(g).size() <= 1;
    return res;
}

FiniteGroupoid quotient_by_normal_isotropy(const FiniteGroupoid& g,
                                           const std::vector<long>& normal_arrows) {
    std::set<long> nset(normal_arrows.begin(), normal_arrows.end());
    for (long a : nset)
        if (!in_range(a, g.arrow_count))
            throw ValidationError("quotient: normal subgroupoid arrow out of range");
    // Wide: contains every unit.
    for (long u : g.units)
        if (!nset.count(u)) throw ValidationError("quotient: subgroupoid is not wide");
    // Isotropy only.
    for (long a : nset)
        if (g.source[a] != g.range[a])
            throw ValidationError("quotient: subgroupoid contains a non-isotropy arrow " + arrow_str(a));
    // Closed under composition and inverses.
    for (long a : nset) {
        if (!nset.count(g.inverse[a]))
            throw ValidationError("quotient: subgroupoid not closed under inverses");
        for (long b : nset)
            if (g.source[a] == g.range[b] && !nset.count(g.product(a, b)))
                throw ValidationError("quotient: subgroupoid not closed under composition");
    }
    // Normal: gamma N_{s(gamma)} gamma^{-1} inside N_{r(gamma)}.
    for (long a = 0; a < g.arrow_count; ++a)
        for (long narr : nset) {
            if (g.range[narr] != g.source[a]) continue;
            long conj = g.product(g.product(a, narr), g.inverse[a]);
            if (!nset.count(conj))
                throw ValidationError("quotient: subgroupoid is not normal (witness arrow " +
                                      arrow_str(a) + ")");
        }

    // Double cosets N_{r} gamma N_{s}; the class representative is the
    // smallest member, which pins the arrow order of the quotient.
    std::vector<long> cls(static_cast<size_t>(g.arrow_count), -1);
    std::vector<long> reps;
    for (long a = 0; a < g.arrow_count; ++a) {
        if (cls[static_cast<size_t>(a)] != -1) continue;
        std::vector<long> members;
        for (long n1 : nset) {
            if (g.range[n1] != g.range[a] || g.source[n1] != g.range[a]) continue;
            long left = g.product(n1, a);
            for (long n2 : nset) {
                if (g.range[n2] != g.source[a] || g.source[n2] != g.source[a]) continue;
                members.push_back(g.product(left, n2));
            }
        }
        long rep = static_cast<long>(reps.size());
        for (long marr : members) cls[static_cast<size_t>(marr)] = rep;
        reps.push_back(a);
    }

    FiniteGroupoid q;
    q.arrow_count = static_cast<long>(reps.size());
    q.source.resize(reps.size());
    q.range.resize(reps.size());
    q.inverse.resize(reps.size());
    auto class_of = [&](long a) { return cls[static_cast<size_t>(a)]; };
    for (size_t k = 0; k < reps.size(); ++k) {
        long a = reps[k];
        q.source[k] = class_of(g.source[a]);
        q.range[k] = class_of(g.range[a]);
        q.inverse[k] = class_of(g.inverse[a]);
    }
    for (long u : g.units) q.units.push_back(class_of(u));
    std::sort(q.units.begin(), q.units.end());
    q.units.erase(std::unique(q.units.begin(), q.units.end()), q.units.end());
    std::set<std::pair<long, long>> seen;
    for (const auto& e : g.compose) {
        long ca = class_of(e[0]), cb = class_of(e[1]);
        if (q.source[static_cast<size_t>(ca)] != q.range[static_cast<size_t>(cb)]) continue;
        if (seen.insert({ca, cb}).second) q.compose.push_back({ca, cb, class_of(e[2])});
    }
    q.sort_compose_table();

    ValidationReport rep = validate_groupoid(q);
    if (!rep.ok())
        throw ValidationError("quotient: resulting table is not a groupoid:\n" + rep.to_string());
    return q;
}

FiniteGroupoid relabel(const FiniteGroupoid& g, const std::vector<long>& perm) {
    FiniteGroupoid r;
    r.arrow_count = g.arrow_count;
    r.source.resize(static_cast<size_t>(g.arrow_count));
    r.range.resize(static_cast<size_t>(g.arrow_count));
    r.inverse.resize(static_cast<size_t>(g.arrow_count));
    for (long a = 0; a < g.arrow_count; ++a) {
        long na = perm[static_cast<size_t>(a)];
        r.source[static_cast<size_t>(na)] = perm[static_cast<size_t>(g.source[a])];
        r.range[static_cast<size_t>(na)] = perm[static_cast<size_t>(g.range[a])];
        r.inverse[static_cast<size_t>(na)] = perm[static_cast<size_t>(g.inverse[a])];
    }
    for (long u : g.units) r.units.push_back(perm[static_cast<size_t>(u)]);
    std::sort(r.units.begin(), r.units.end());
    for (const auto& e : g.compose)
        r.compose.push_back({perm[static_cast<size_t>(e[0])], perm[static_cast<size_t>(e[1])],
                             perm[static_cast<size_t>(e[2])]});
    r.sort_compose_table();
    return r;
}

EtaleFunctor identity_functor(const FiniteGroupoid& g) {
    EtaleFunctor f;
    f.domain = g;
    f.codomain = g;
    f.arrow_map.resize(static_cast<size_t>(g.arrow_count));
    std::iota(f.arrow_map.begin(), f.arrow_map.end(), 0);
    f.unit_map.resize(g.units.size());
    std::iota(f.unit_map.begin(), f.unit_map.end(), 0);
    return f;
}

EtaleFunctor compose(const EtaleFunctor& outer, const EtaleFunctor& inner) {
    if (!(outer.domain == inner.codomain)) throw ValidationError("functor compose: endpoint mismatch");
    EtaleFunctor f;
    f.domain = inner.domain;
    f.codomain = outer.codomain;
    for (long a : inner.arrow_map) f.arrow_map.push_back(outer.arrow_map[static_cast<size_t>(a)]);
    for (long u : inner.unit_map) f.unit_map.push_back(outer.unit_map[static_cast<size_t>(u)]);
    return f;
}

ValidationReport validate_functor(const EtaleFunctor& f) {
    ValidationReport rep;
    const FiniteGroupoid& d = f.domain;
    const FiniteGroupoid& c = f.codomain;
    if (static_cast<long>(f.arrow_map.size()) != d.arrow_count) {
        rep.add("structure", "arrow_map length mismatch");
        return rep;
    }
    if (f.unit_map.size() != d.units.size()) {
        rep.add("structure", "unit_map length mismatch");
        return rep;
    }
    for (long v : f.arrow_map)
        if (!in_range(v, c.arrow_count)) {
            rep.add("structure", "arrow_map value out of range");
            return rep;
        }
    for (long v : f.unit_map)
        if (v < 0 || v >= static_cast<long>(c.units.size())) {
            rep.add("structure", "unit_map value out of range");
            return rep;
        }

    // (F1) units map to units, consistently with the arrow map.
    for (size_t i = 0; i < d.units.size(); ++i) {
        long img = f.arrow_map[static_cast<size_t>(d.units[i])];
        if (!c.is_unit(img))
            rep.add("F1", "unit " + arrow_str(d.units[i]) + " maps to non-unit " + arrow_str(img));
        else if (c.unit_position(img) != f.unit_map[i])
            rep.add("F1", "unit_map disagrees with arrow_map at unit position " + std::to_string(i));
    }
    // (F2) intertwines r and s.
    for (long a = 0; a < d.arrow_count; ++a) {
        long img = f.arrow_map[static_cast<size_t>(a)];
        long su = f.arrow_map[static_cast<size_t>(d.source[a])];
        long ru = f.arrow_map[static_cast<size_t>(d.range[a])];
        if (c.source[img] != su || c.range[img] != ru)
            rep.add("F2", "endpoints not intertwined at arrow " + arrow_str(a));
    }
    // (F3) preserves composition.
    for (const auto& e : d.compose) {
        long fa = f.arrow_map[static_cast<size_t>(e[0])];
        long fb = f.arrow_map[static_cast<size_t>(e[1])];
        auto p = c.compose_lookup(fa, fb);
        if (!p || *p != f.arrow_map[static_cast<size_t>(e[2])])
            rep.add("F3", "composition not preserved on pair (" + arrow_str(e[0]) + "," +
                              arrow_str(e[1]) + ")");
    }
    return rep;
}

EtaleFunctor inclusion_functor(const FiniteGroupoid& g, const FiniteGroupoid& sub,
                               const std::vector<long>& arrow_map) {
    EtaleFunctor f;
    f.domain = sub;
    f.codomain = g;
    f.arrow_map = arrow_map;
    for (long u : sub.units)
        f.unit_map.push_back(g.unit_position(arrow_map[static_cast<size_t>(u)]));
    return f;
}

}  // namespace ghom
