#pragma once

#include <string>
#include <vector>

#include "ghom/common.hpp"
#include "ghom/fg_ab_group.hpp"

namespace ghom {

// Coefficient group for homology: Z, Z/m (m >= 2), or a general f.g.
// abelian group. Direct chain-level computation is reserved for Z and
// prime fields; everything else goes through the UCT.
struct CoefficientSpec {
    enum class Kind { Integers, Mod, Group };
    Kind kind = Kind::Integers;
    Int modulus = 0;
    FgAbGroup fg;

    static CoefficientSpec integers() { return {}; }
    static CoefficientSpec mod(const Int& m) {
        if (m < 2) throw ValidationError("coefficients: modulus must be >= 2");
        CoefficientSpec c;
        c.kind = Kind::Mod;
        c.modulus = m;
        return c;
    }
    static CoefficientSpec group(FgAbGroup g) {
        CoefficientSpec c;
        c.kind = Kind::Group;
        c.fg = std::move(g);
        return c;
    }

    bool is_integers() const { return kind == Kind::Integers; }
    bool is_prime_field() const { return kind == Kind::Mod && is_prime(modulus); }

    FgAbGroup as_group() const {
        switch (kind) {
            case Kind::Integers: return FgAbGroup::free_group(1);
            case Kind::Mod: return FgAbGroup::cyclic(modulus);
            case Kind::Group: return fg;
        }
        return {};
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::Integers: return "Z";
            case Kind::Mod: return "Z/" + modulus.get_str();
            case Kind::Group: return fg.to_string();
        }
        return "";
    }
};

struct HomologyResult {
    CoefficientSpec coeff;
    std::vector<FgAbGroup> groups;  // groups[n] for n = 0..max computed degree

    long max_degree() const { return static_cast<long>(groups.size()) - 1; }
};

}  // namespace ghom
