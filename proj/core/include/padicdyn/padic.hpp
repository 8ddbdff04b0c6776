#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>

#include "padicdyn/context.hpp"
#include "padicdyn/radius.hpp"

namespace padicdyn {

/// An exact element of Q_p at finite precision: p^valuation * unit, with the
/// unit carried modulo p^known_digits. The representation is (valuation,
/// unit), not a digit stream, so multiplication, inversion and powering are
/// precision-stable; only addition can consume digits through cancellation.
///
/// Three states exist and are never conflated:
///   - NonZero:         p^v * u with u a unit known to `known_digits` digits.
///   - Zero:            the exact zero, norm 0.
///   - ZeroAtPrecision: cancellation consumed every known digit. All that is
///     known is |x| <= p^(-bound). Detecting this state is how periodicity
///     and convergence are established, so it must stay auditable and is
///     reported as a flagged norm, never as an exact zero.
///
/// Values are immutable; all operations are pure and safe to share across
/// threads.
class PAdicNumber {
public:
    enum class State { NonZero, Zero, ZeroAtPrecision };

    /// Canonical representation of num/den. Exact: known_digits = N.
    static PAdicNumber from_rational(const mpz_class& num, const mpz_class& den,
                                     const PAdicContext& ctx);
    static PAdicNumber from_integer(const mpz_class& n, const PAdicContext& ctx);
    static PAdicNumber zero(const PAdicContext& ctx);
    static PAdicNumber one(const PAdicContext& ctx);

    /// p^valuation * unit with `digits` guaranteed digits. The unit is
    /// reduced mod p^digits and must be coprime to p.
    static PAdicNumber from_parts(const PAdicContext& ctx, const mpz_class& valuation,
                                  const mpz_class& unit, int digits);

    const PAdicContext& context() const { return *ctx_; }
    State state() const { return state_; }
    bool is_zero() const { return state_ == State::Zero; }
    bool is_zero_at_precision() const { return state_ == State::ZeroAtPrecision; }
    bool is_nonzero() const { return state_ == State::NonZero; }

    /// Exponent of p (NonZero only).
    const mpz_class& valuation() const;
    /// Unit part in [1, p^known_digits), coprime to p (NonZero only).
    const mpz_class& unit() const;
    /// Digits guaranteed after cancellation, in [1, N] (NonZero only).
    int known_digits() const;
    /// For ZeroAtPrecision: the exponent A with |x| <= p^(-A).
    const mpz_class& norm_bound_exponent() const;

    /// |x|_p = p^(-valuation), exact; 0 for zero; an upper-bound-only radius
    /// for a value hidden below precision.
    Radius norm() const;

    /// Residue mod p; requires valuation 0.
    mpz_class residue() const;

    PAdicNumber operator-() const;
    PAdicNumber operator+(const PAdicNumber& other) const;
    PAdicNumber operator-(const PAdicNumber& other) const;
    PAdicNumber operator*(const PAdicNumber& other) const;
    PAdicNumber operator/(const PAdicNumber& other) const;

    /// Representation equality: same state, valuation, digits and unit.
    bool identical(const PAdicNumber& other) const;

    std::string str() const;

private:
    PAdicNumber(std::shared_ptr<const PAdicContext> ctx, State state,
                mpz_class valuation, mpz_class unit, int digits);

    std::shared_ptr<const PAdicContext> ctx_;
    State state_;
    mpz_class valuation_; // NonZero: v; ZeroAtPrecision: bound exponent A
    mpz_class unit_;
    int known_digits_ = 0;
};

/// Multiplicative inverse; rejects zero and zero-at-precision inputs.
PAdicNumber inv(const PAdicNumber& x);

/// x^k with big-integer k. The unit exponent reduces modulo the unit-group
/// order; the valuation scales by the full k, so closed-form iterates with
/// exponents far beyond native range stay exact.
PAdicNumber pow(const PAdicNumber& x, const mpz_class& k);

/// |x - y|_p. A result indistinguishable from 0 at the current precision
/// comes back flagged (upper_bound_only); the caller decides what that means.
Radius distance(const PAdicNumber& x, const PAdicNumber& y);

/// True when x - y has no visible nonzero digit (exactly zero or zero at
/// precision). This is the working notion of "equal" for iterates.
bool equal_at_precision(const PAdicNumber& x, const PAdicNumber& y);

/// Strict order by (valuation, unit), used to canonicalize root sets and
/// cycle starting points so emitted reports are deterministic.
bool canonical_less(const PAdicNumber& a, const PAdicNumber& b);

/// p-adic valuation of a nonzero rational, as used by test oracles and
/// from_rational itself.
mpz_class rational_valuation(const mpz_class& num, const mpz_class& den, const mpz_class& p);

} // namespace padicdyn
