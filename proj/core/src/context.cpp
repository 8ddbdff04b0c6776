#include "padicdyn/context.hpp"

namespace padicdyn {

namespace {

// Single Miller-Rabin round for witness a; n odd, n - 1 = d * 2^s.
bool mr_round(const mpz_class& n, const mpz_class& d, unsigned long s, const mpz_class& a) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (long q : small) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Witness set exact below 3.317e24 (Sorenson-Webster); beyond that we
    // refuse rather than silently degrade to a probabilistic answer.
    static const mpz_class limit("3317044064679887385961981");
    if (n >= limit) {
        throw domain_error("primality check limited to n < 3.3e24");
    }
    mpz_class d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (long a : small) {
        if (!mr_round(n, d, s, mpz_class(a))) return false;
    }
    return true;
}

PAdicContext::PAdicContext(const mpz_class& prime, int precision)
    : prime_(prime), precision_(precision) {
    if (precision < 1) {
        throw domain_error("precision must be >= 1");
    }
    if (!is_prime(prime)) {
        throw domain_error("context modulus base " + prime.get_str() + " is not prime");
    }
    mpz_pow_ui(modulus_.get_mpz_t(), prime_.get_mpz_t(),
               static_cast<unsigned long>(precision_));
    mpz_class pm1 = prime_ - 1;
    mpz_pow_ui(unit_group_order_.get_mpz_t(), prime_.get_mpz_t(),
               static_cast<unsigned long>(precision_ - 1));
    unit_group_order_ *= pm1;
}

mpz_class PAdicContext::prime_power(int k) const {
    if (k < 0 || k > precision_) {
        throw internal_error("prime_power exponent out of range");
    }
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), prime_.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

} // namespace padicdyn
