#pragma once

#include <gmpxx.h>

#include <cassert>
#include <utility>

namespace ghom {

// Exact arbitrary-precision integer. All arithmetic in the library goes
// through this type; nothing is allowed to overflow silently.
using Int = mpz_class;

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline int sign(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

// Floor division: remainder in [0, |b|).
inline std::pair<Int, Int> fdivmod(const Int& a, const Int& b) {
    assert(b != 0);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {q, r};
}

inline Int fmod_pos(const Int& a, const Int& b) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Quotient rounded to nearest; the tie q with smaller remainder magnitude
// is chosen deterministically by rounding halves down.
inline Int rounded_quotient(const Int& a, const Int& b) {
    auto [q, r] = fdivmod(a, b);
    Int babs = abs_int(b);
    if (2 * r > babs) q += 1;
    return q;
}

inline bool is_prime(const Int& m) {
    if (m < 2) return false;
    return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

inline bool fits_long(const Int& a) { return a.fits_slong_p(); }

inline long to_long(const Int& a) {
    assert(fits_long(a));
    return a.get_si();
}

}  // namespace ghom
