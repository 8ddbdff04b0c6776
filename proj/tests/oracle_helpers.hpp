#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "padicdyn/padic.hpp"

// Test-only oracles, deliberately independent of the library's modular
// representation: exact big-rational iteration of the map and brute-force
// residue scans. They exist to cross-check the p-adic arithmetic path, so
// they must never call into it.
namespace oracles {

// v_p of a nonzero rational.
inline long rational_val(const mpq_class& x, const mpz_class& p) {
    mpz_class tmp;
    long v = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), mpq_class(x).get_num().get_mpz_t(), p.get_mpz_t()));
    v -= static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), mpq_class(x).get_den().get_mpz_t(), p.get_mpz_t()));
    return v;
}

// Exact orbit of f(x) = a / x^2 in Q. Numerator/denominator sizes double
// per step, so keep n small (<= 12).
inline std::vector<mpq_class> rational_orbit(const mpq_class& a, const mpq_class& x0, int n) {
    std::vector<mpq_class> orbit{x0};
    mpq_class x = x0;
    for (int i = 0; i < n; ++i) {
        x = a / (x * x);
        x.canonicalize();
        orbit.push_back(x);
    }
    return orbit;
}

// The library value of a rational, for comparing an exact rational oracle
// against a modular computation.
inline padicdyn::PAdicNumber to_padic(const mpq_class& x, const padicdyn::PAdicContext& ctx) {
    return padicdyn::PAdicNumber::from_rational(x.get_num(), x.get_den(), ctx);
}

// Brute-force count of solutions of x^k = 1 mod p.
inline long count_unity_mod_p(unsigned long k, unsigned long p) {
    long count = 0;
    for (unsigned long r = 1; r < p; ++r) {
        mpz_class pw;
        mpz_class base(r), mod(p);
        mpz_powm_ui(pw.get_mpz_t(), base.get_mpz_t(), k, mod.get_mpz_t());
        if (pw == 1) ++count;
    }
    return count;
}

// Brute-force solutions of x^3 = a mod m (small m such as p^2).
inline std::vector<unsigned long> cube_roots_mod(unsigned long a, unsigned long m) {
    std::vector<unsigned long> roots;
    for (unsigned long r = 0; r < m; ++r) {
        if ((r * r % m) * r % m == a % m) roots.push_back(r);
    }
    return roots;
}

} // namespace oracles
