#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "padicdyn/padic.hpp"
#include "padicdyn/polynomial.hpp"

namespace padicdyn {

enum class EquationTag { CubeRootOfA, RootOfUnity };

/// Solutions of one of the two root equations, canonically sorted by
/// (valuation, unit). `count` is the number of roots found; for roots of
/// unity at odd p this always equals gcd(k, p-1).
struct RootSet {
    EquationTag tag;
    std::string equation;
    std::vector<PAdicNumber> roots;
    long count = 0;
};

/// Quadratically convergent lift of a simple root mod p to a root mod p^N
/// (correct digits double per step). Requires poly(seed) = 0 mod p and
/// poly'(seed) != 0 mod p; the latter failing raises not_liftable_error --
/// callers must handle primes dividing the derivative (x^3 - a at p = 3 is
/// the standing example).
PAdicNumber hensel_lift(const Polynomial& poly, const mpz_class& seed, const PAdicContext& ctx);

/// All solutions of x^3 = a lying in Q_p. Empty when v(a) is not divisible
/// by 3 or the unit part is a cubic non-residue. At p = 3 the simple-root
/// condition fails identically (3 divides the derivative), so the exact
/// layer refuses with not_liftable_error and callers fall back to norm-level
/// statements.
RootSet cube_roots(const PAdicNumber& a);

/// The k-th roots of unity in Q_p: exactly gcd(k, p-1) of them for odd p,
/// found by lifting each solution of x^gcd = 1 mod p. For p = 2 the only
/// torsion is {1, -1}: k odd gives {1}, k even {1, -1}.
RootSet roots_of_unity(const mpz_class& k, const PAdicContext& ctx);

/// The Teichmueller representative: the unique (p-1)-th root of unity in Z_p
/// congruent to the given nonzero residue mod p.
PAdicNumber teichmuller(const mpz_class& residue, const PAdicContext& ctx);

} // namespace padicdyn
