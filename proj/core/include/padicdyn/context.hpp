#pragma once

#include <gmpxx.h>

#include "padicdyn/errors.hpp"

namespace padicdyn {

/// Fixed arithmetic environment: the prime p and the number N of base-p unit
/// digits carried by every value. Immutable once constructed; all operations
/// on values require matching contexts.
class PAdicContext {
public:
    /// Throws domain_error unless `prime` passes a deterministic
    /// Miller-Rabin check and `precision >= 1`.
    PAdicContext(const mpz_class& prime, int precision);

    const mpz_class& prime() const { return prime_; }
    int precision() const { return precision_; }

    /// p^N, the working modulus for unit digits.
    const mpz_class& modulus() const { return modulus_; }

    /// p^(N-1)(p-1), the order of the unit group (Z/p^N)*. Exponents of
    /// units reduce modulo this; valuations never do.
    const mpz_class& unit_group_order() const { return unit_group_order_; }

    /// p^k for 0 <= k <= N.
    mpz_class prime_power(int k) const;

    bool operator==(const PAdicContext& other) const {
        return prime_ == other.prime_ && precision_ == other.precision_;
    }

private:
    mpz_class prime_;
    int precision_;
    mpz_class modulus_;
    mpz_class unit_group_order_;
};

/// Deterministic primality check (Miller-Rabin with the fixed witness set
/// {2,...,37}, exact for all n < 3.3e24; larger inputs are rejected).
bool is_prime(const mpz_class& n);

} // namespace padicdyn
