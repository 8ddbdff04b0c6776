#pragma once

#include <gmpxx.h>

#include <string>

#include "padicdyn/errors.hpp"

namespace padicdyn {

/// An exact ultrametric radius p^(-e) with rational exponent e. Rational
/// exponents represent norms of algebraic elements (cube roots, sqrt(3)
/// scalings) that have no representative in Q_p itself; all comparisons are
/// exact exponent arithmetic, never floating point.
///
/// Ordering: a larger radius means a smaller exponent. Multiplication adds
/// exponents. Two special states exist: the zero radius (norm of 0) and the
/// infinite radius (used for trajectory limits only).
///
/// A radius may additionally be flagged `upper_bound_only`, meaning the true
/// value is <= p^(-e) but cancellation exhausted the known digits, so it is
/// indistinguishable from 0 at working precision. Callers must check the
/// flag before trusting an equality comparison.
class Radius {
public:
    /// Exact radius p^(-exponent).
    static Radius from_exponent(const mpz_class& prime, const mpq_class& exponent);
    static Radius from_exponent(const mpz_class& prime, long num, long den = 1);
    static Radius zero(const mpz_class& prime);
    static Radius infinite(const mpz_class& prime);
    /// "<= p^(-exponent)": value hidden below working precision.
    static Radius upper_bound(const mpz_class& prime, const mpz_class& exponent);

    const mpz_class& prime() const { return prime_; }
    const mpq_class& exponent() const { return exponent_; }
    bool is_zero() const { return zero_; }
    bool is_infinite() const { return infinite_; }
    bool upper_bound_only() const { return upper_bound_only_; }

    /// True when the exponent is an integer, i.e. the radius is attained by
    /// elements of Q_p.
    bool is_integral() const;

    Radius operator*(const Radius& other) const;
    /// Radius raised to an integer power (exponent scales).
    Radius pow(const mpz_class& k) const;

    /// Total order on exact radii. Comparing an upper-bound-only radius is a
    /// logic error; callers must branch on the flag first.
    bool operator==(const Radius& other) const;
    bool operator<(const Radius& other) const;
    bool operator<=(const Radius& other) const { return *this < other || *this == other; }
    bool operator>(const Radius& other) const { return !(*this <= other); }
    bool operator>=(const Radius& other) const { return !(*this < other); }
    bool operator!=(const Radius& other) const { return !(*this == other); }

    /// Rendering like "7^-2", "7^(1/3)", "0", "inf"; exact, for logs and the
    /// pretty output format.
    std::string str() const;

private:
    Radius(mpz_class prime, mpq_class exponent, bool zero, bool infinite, bool bound);

    mpz_class prime_;
    mpq_class exponent_; // radius is p^(-exponent_)
    bool zero_ = false;
    bool infinite_ = false;
    bool upper_bound_only_ = false;
};

/// Canonicalized rational num/den (GMP does not canonicalize on construction).
mpq_class make_rational(const mpz_class& num, const mpz_class& den);

} // namespace padicdyn
