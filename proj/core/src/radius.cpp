#include "padicdyn/radius.hpp"

#include <sstream>

namespace padicdyn {

mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

Radius::Radius(mpz_class prime, mpq_class exponent, bool zero, bool infinite, bool bound)
    : prime_(std::move(prime)),
      exponent_(std::move(exponent)),
      zero_(zero),
      infinite_(infinite),
      upper_bound_only_(bound) {}

Radius Radius::from_exponent(const mpz_class& prime, const mpq_class& exponent) {
    mpq_class e = exponent;
    e.canonicalize();
    return Radius(prime, e, false, false, false);
}

Radius Radius::from_exponent(const mpz_class& prime, long num, long den) {
    return from_exponent(prime, make_rational(mpz_class(num), mpz_class(den)));
}

Radius Radius::zero(const mpz_class& prime) {
    return Radius(prime, mpq_class(0), true, false, false);
}

Radius Radius::infinite(const mpz_class& prime) {
    return Radius(prime, mpq_class(0), false, true, false);
}

Radius Radius::upper_bound(const mpz_class& prime, const mpz_class& exponent) {
    return Radius(prime, mpq_class(exponent), false, false, true);
}

bool Radius::is_integral() const {
    return !zero_ && !infinite_ && exponent_.get_den() == 1;
}

Radius Radius::operator*(const Radius& other) const {
    if (prime_ != other.prime_) throw domain_error("radius product across primes");
    if (zero_ || other.zero_) return zero(prime_);
    if (infinite_ || other.infinite_) return infinite(prime_);
    if (upper_bound_only_ || other.upper_bound_only_) {
        mpq_class e = exponent_ + other.exponent_;
        if (e.get_den() != 1) throw internal_error("upper-bound radius with fractional exponent");
        return upper_bound(prime_, e.get_num());
    }
    return from_exponent(prime_, exponent_ + other.exponent_);
}

Radius Radius::pow(const mpz_class& k) const {
    if (zero_) {
        if (k <= 0) throw domain_error("zero radius to nonpositive power");
        return *this;
    }
    if (infinite_) {
        if (k <= 0) throw domain_error("infinite radius to nonpositive power");
        return *this;
    }
    if (upper_bound_only_) throw domain_error("pow of an upper-bound-only radius");
    return from_exponent(prime_, exponent_ * mpq_class(k));
}

bool Radius::operator==(const Radius& other) const {
    if (prime_ != other.prime_) throw domain_error("radius comparison across primes");
    if (upper_bound_only_ || other.upper_bound_only_) {
        throw domain_error("comparison on a radius only known as an upper bound");
    }
    if (zero_ || other.zero_) return zero_ == other.zero_;
    if (infinite_ || other.infinite_) return infinite_ == other.infinite_;
    return exponent_ == other.exponent_;
}

bool Radius::operator<(const Radius& other) const {
    if (prime_ != other.prime_) throw domain_error("radius comparison across primes");
    if (upper_bound_only_ || other.upper_bound_only_) {
        throw domain_error("comparison on a radius only known as an upper bound");
    }
    if (zero_) return !other.zero_;
    if (other.zero_) return false;
    if (other.infinite_) return !infinite_;
    if (infinite_) return false;
    return exponent_ > other.exponent_; // larger exponent = smaller radius
}

std::string Radius::str() const {
    if (zero_) return "0";
    if (infinite_) return "inf";
    std::ostringstream os;
    if (upper_bound_only_) os << "<=";
    mpq_class e = -exponent_;
    os << prime_.get_str() << "^";
    if (e.get_den() == 1) {
        os << e.get_num().get_str();
    } else {
        os << "(" << e.get_num().get_str() << "/" << e.get_den().get_str() << ")";
    }
    return os.str();
}

} // namespace padicdyn
