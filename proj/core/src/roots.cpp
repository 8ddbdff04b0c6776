#include "padicdyn/roots.hpp"

#include <algorithm>

namespace padicdyn {

namespace {

mpz_class mod_inverse(const mpz_class& a, const mpz_class& mod) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) {
        throw internal_error("value not invertible in lifting step");
    }
    return r;
}

void sort_roots(std::vector<PAdicNumber>& roots) {
    std::sort(roots.begin(), roots.end(), canonical_less);
}

} // namespace

PAdicNumber hensel_lift(const Polynomial& poly, const mpz_class& seed, const PAdicContext& ctx) {
    const mpz_class& p = ctx.prime();
    mpz_class x = seed % p;
    if (x < 0) x += p;
    if (poly.eval_mod(x, p) != 0) {
        throw domain_error("seed is not a root of " + poly.describe() + " mod p");
    }
    if (poly.derivative_eval_mod(x, p) == 0) {
        throw not_liftable_error("derivative of " + poly.describe() +
                                 " vanishes mod p at the seed: root is not simple");
    }

    int digits = 1;
    while (digits < ctx.precision()) {
        digits = std::min(2 * digits, ctx.precision());
        mpz_class mod = ctx.prime_power(digits);
        mpz_class fv = poly.eval_mod(x, mod);
        mpz_class dv = poly.derivative_eval_mod(x, mod);
        x = (x - fv * mod_inverse(dv, mod)) % mod;
        if (x < 0) x += mod;
    }

    if (poly.eval_mod(x, ctx.modulus()) != 0) {
        throw internal_error("lifted root fails verification mod p^N");
    }
    if (x == 0) return PAdicNumber::zero(ctx);
    if (x % p == 0) {
        // Root divisible by p (possible only for the generic family): split
        // off the valuation; the residual digits are all that is known.
        mpz_class stripped;
        unsigned long v =
            mpz_remove(stripped.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        return PAdicNumber::from_parts(ctx, mpz_class(v), stripped,
                                       ctx.precision() - static_cast<int>(v));
    }
    return PAdicNumber::from_parts(ctx, 0, x, ctx.precision());
}

RootSet cube_roots(const PAdicNumber& a) {
    if (!a.is_nonzero()) throw domain_error("cube roots of zero (or near-zero) coefficient");
    const PAdicContext& ctx = a.context();
    const mpz_class& p = ctx.prime();

    RootSet out{EquationTag::CubeRootOfA, "x^3 = a", {}, 0};
    if (a.valuation() % 3 != 0) {
        return out; // roots would need fractional valuation: none in Q_p
    }
    if (p == 3) {
        throw not_liftable_error(
            "x^3 - a has no simple roots mod 3 (3 divides the derivative); "
            "use the norm-level layer for p = 3");
    }
    mpz_class target_val = a.valuation() / 3;
    Polynomial poly = Polynomial::cube_minus(a.unit());
    for (mpz_class r = 1; r < p; ++r) {
        mpz_class cube;
        mpz_powm_ui(cube.get_mpz_t(), r.get_mpz_t(), 3, p.get_mpz_t());
        if (cube == a.unit() % p) {
            PAdicNumber unit_root = hensel_lift(poly, r, ctx);
            out.roots.push_back(
                PAdicNumber::from_parts(ctx, target_val, unit_root.unit(), ctx.precision()));
        }
    }
    sort_roots(out.roots);
    out.count = static_cast<long>(out.roots.size());
    return out;
}

RootSet roots_of_unity(const mpz_class& k, const PAdicContext& ctx) {
    if (k < 1) throw domain_error("roots of unity need exponent k >= 1");
    const mpz_class& p = ctx.prime();
    RootSet out{EquationTag::RootOfUnity, "x^" + k.get_str() + " = 1", {}, 0};

    if (p == 2) {
        out.roots.push_back(PAdicNumber::one(ctx));
        if (k % 2 == 0 && ctx.precision() >= 2) {
            out.roots.push_back(-PAdicNumber::one(ctx));
        }
        sort_roots(out.roots);
        out.count = static_cast<long>(out.roots.size());
        return out;
    }

    // Torsion in Z_p* is the (p-1)-group, so x^k = 1 and x^g = 1 have the
    // same solutions for g = gcd(k, p-1); g is coprime to p, which keeps
    // every mod-p root simple for the lift.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), mpz_class(p - 1).get_mpz_t());
    Polynomial poly = Polynomial::unity(g);
    for (mpz_class r = 1; r < p; ++r) {
        mpz_class pw;
        mpz_powm(pw.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t());
        if (pw == 1) {
            out.roots.push_back(hensel_lift(poly, r, ctx));
        }
    }
    sort_roots(out.roots);
    out.count = static_cast<long>(out.roots.size());

    // Verification closure: every emitted root satisfies the original
    // equation to full precision.
    Polynomial original = Polynomial::unity(k);
    for (const PAdicNumber& root : out.roots) {
        if (original.eval_mod(root.unit(), ctx.modulus()) != 0) {
            throw internal_error("root of unity fails x^k = 1 mod p^N");
        }
    }
    return out;
}

PAdicNumber teichmuller(const mpz_class& residue, const PAdicContext& ctx) {
    const mpz_class& p = ctx.prime();
    mpz_class r = residue % p;
    if (r < 0) r += p;
    if (r == 0) throw domain_error("Teichmueller lift of a residue divisible by p");
    if (p == 2) return PAdicNumber::one(ctx);
    return hensel_lift(Polynomial::unity(p - 1), r, ctx);
}

} // namespace padicdyn
