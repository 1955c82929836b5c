#include "ghom/fg_ab_group.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "ghom/common.hpp"

namespace ghom {

FgAbGroup FgAbGroup::cyclic(const Int& m) {
    assert(m >= 2);
    FgAbGroup g;
    g.torsion.push_back(m);
    return g;
}

FgAbGroup FgAbGroup::canonical(long free_rank, std::vector<Int> factors) {
    for (const Int& d : factors)
        if (d == 0) throw Error("FgAbGroup: factor 0 is not a torsion order; use free_rank");
    // Pairwise gcd/lcm passes converge to a divisor chain without factoring.
    std::vector<Int> t;
    for (Int& d : factors) {
        d = abs_int(d);
        if (d != 1) t.push_back(d);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = i + 1; j < t.size(); ++j) {
                if (t[j] % t[i] == 0) continue;
                Int g = gcd_int(t[i], t[j]);
                Int l = t[i] / g * t[j];
                t[i] = g;
                t[j] = l;
                changed = true;
            }
        std::erase(t, Int(1));
    }
    std::sort(t.begin(), t.end());
    FgAbGroup g;
    g.free_rank = free_rank;
    g.torsion = std::move(t);
    return g;
}

Int FgAbGroup::gen_order(long i) const {
    if (i < static_cast<long>(torsion.size())) return torsion[static_cast<size_t>(i)];
    return 0;
}

std::optional<Int> FgAbGroup::order() const {
    if (free_rank > 0) return std::nullopt;
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
}

std::string FgAbGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h) {
    // Z^a (x) Z^b = Z^{ab};  Z (x) Z/e = Z/e;  Z/d (x) Z/e = Z/gcd(d,e).
    std::vector<Int> factors;
    for (const Int& d : g.torsion)
        for (long j = 0; j < h.free_rank; ++j) factors.push_back(d);
    for (const Int& e : h.torsion)
        for (long i = 0; i < g.free_rank; ++i) factors.push_back(e);
    for (const Int& d : g.torsion)
        for (const Int& e : h.torsion) factors.push_back(gcd_int(d, e));
    return FgAbGroup::canonical(g.free_rank * h.free_rank, std::move(factors));
}

FgAbGroup tor1(const FgAbGroup& g, const FgAbGroup& h) {
    // Tor vanishes against free parts; Tor(Z/d, Z/e) = Z/gcd(d,e).
    std::vector<Int> factors;
    for (const Int& d : g.torsion)
        for (const Int& e : h.torsion) factors.push_back(gcd_int(d, e));
    return FgAbGroup::canonical(0, std::move(factors));
}

FgAbGroup hom_group(const FgAbGroup& g, const FgAbGroup& h) {
    // Hom(Z, X) = X;  Hom(Z/d, Z) = 0;  Hom(Z/d, Z/e) = Z/gcd(d,e).
    std::vector<Int> factors;
    for (long i = 0; i < g.free_rank; ++i)
        for (const Int& e : h.torsion) factors.push_back(e);
    for (const Int& d : g.torsion)
        for (const Int& e : h.torsion) factors.push_back(gcd_int(d, e));
    return FgAbGroup::canonical(g.free_rank * h.free_rank, std::move(factors));
}

FgAbGroup ext1(const FgAbGroup& g, const FgAbGroup& h) {
    // Ext(Z, X) = 0;  Ext(Z/d, Z) = Z/d;  Ext(Z/d, Z/e) = Z/gcd(d,e).
    std::vector<Int> factors;
    for (const Int& d : g.torsion)
        for (long j = 0; j < h.free_rank; ++j) factors.push_back(d);
    for (const Int& d : g.torsion)
        for (const Int& e : h.torsion) factors.push_back(gcd_int(d, e));
    return FgAbGroup::canonical(0, std::move(factors));
}

FgAbGroup direct_sum(const std::vector<FgAbGroup>& parts) {
    long rank = 0;
    std::vector<Int> factors;
    for (const FgAbGroup& p : parts) {
        rank += p.free_rank;
        factors.insert(factors.end(), p.torsion.begin(), p.torsion.end());
    }
    return FgAbGroup::canonical(rank, std::move(factors));
}

IntMatrix relation_matrix(const FgAbGroup& g) {
    long n = g.ngens();
    long k = static_cast<long>(g.torsion.size());
    IntMatrix rel(n, k);
    for (long i = 0; i < k; ++i) rel.at(i, i) = g.torsion[static_cast<size_t>(i)];
    return rel;
}

std::vector<Int> reduce_coords(const FgAbGroup& g, std::vector<Int> x) {
    assert(static_cast<long>(x.size()) == g.ngens());
    for (size_t i = 0; i < g.torsion.size(); ++i) x[i] = fmod_pos(x[i], g.torsion[i]);
    return x;
}

}  // namespace ghom
