#include "ghom/convolution.hpp"

#include <set>

namespace ghom {

GroupoidFunction zero_function(const FiniteGroupoid& g) {
    return {g, std::vector<Int>(static_cast<size_t>(g.arrow_count))};
}

GroupoidFunction characteristic(const FiniteGroupoid& g, const std::vector<long>& arrows) {
    GroupoidFunction f = zero_function(g);
    for (long a : arrows) f.values[static_cast<size_t>(a)] = 1;
    return f;
}

GroupoidFunction convolve(const FiniteGroupoid& g, const GroupoidFunction& f1,
                          const GroupoidFunction& f2) {
    if (!(f1.groupoid == g) || !(f2.groupoid == g))
        throw ValidationError("convolve: functions live on a different groupoid");
    GroupoidFunction out = zero_function(g);
    for (long gamma = 0; gamma < g.arrow_count; ++gamma) {
        Int acc = 0;
        for (long h = 0; h < g.arrow_count; ++h) {
            if (g.source[h] != g.range[gamma]) continue;
            const Int& a = f1.values[static_cast<size_t>(g.inverse[h])];
            if (a == 0) continue;
            acc += a * f2.values[static_cast<size_t>(g.product(h, gamma))];
        }
        out.values[static_cast<size_t>(gamma)] = acc;
    }
    return out;
}

GroupoidFunction local_unit(const FiniteGroupoid& g) { return characteristic(g, g.units); }

CoeffFunction zero_coeff_function(const FgAbGroup& a, long size) {
    return {a, std::vector<std::vector<Int>>(static_cast<size_t>(size),
                                             std::vector<Int>(static_cast<size_t>(a.ngens())))};
}

CoeffFunction scalar_pair(const GroupoidFunction& f, const CoeffFunction& zeta) {
    return scalar_pair(f.values, zeta);
}

CoeffFunction scalar_pair(const std::vector<Int>& f, const CoeffFunction& zeta) {
    if (f.size() != zeta.values.size()) throw ValidationError("scalar_pair: index-set mismatch");
    CoeffFunction out = zeta;
    for (size_t x = 0; x < f.size(); ++x) {
        for (Int& v : out.values[x]) v *= f[x];
        out.values[x] = reduce_coords(out.coeff, out.values[x]);
    }
    return out;
}

std::vector<Int> pushforward_values(const std::vector<long>& map, long codomain_size,
                                    const std::vector<Int>& values) {
    std::vector<Int> out(static_cast<size_t>(codomain_size));
    for (size_t x = 0; x < map.size(); ++x) out[static_cast<size_t>(map[x])] += values[x];
    return out;
}

CoeffFunction pushforward_values(const std::vector<long>& map, long codomain_size,
                                 const CoeffFunction& zeta) {
    CoeffFunction out = zero_coeff_function(zeta.coeff, codomain_size);
    for (size_t x = 0; x < map.size(); ++x) {
        auto& dst = out.values[static_cast<size_t>(map[x])];
        for (size_t i = 0; i < dst.size(); ++i) dst[i] += zeta.values[x][i];
    }
    for (auto& v : out.values) v = reduce_coords(out.coeff, v);
    return out;
}

long distinct_value_count(const GroupoidFunction& f) {
    std::set<Int> seen(f.values.begin(), f.values.end());
    return static_cast<long>(seen.size());
}

long distinct_value_count(const CoeffFunction& zeta) {
    std::set<std::vector<Int>> seen(zeta.values.begin(), zeta.values.end());
    return static_cast<long>(seen.size());
}

}  // namespace ghom
