#include "padicdyn/padic.hpp"

#include <sstream>
#include <utility>

namespace padicdyn {

namespace {

void require_same_context(const PAdicNumber& x, const PAdicNumber& y) {
    if (!(x.context() == y.context())) {
        throw domain_error("operands belong to different p-adic contexts");
    }
}

// v_p(n) for n != 0, stripping the power of p in place.
unsigned long strip_prime(mpz_class& n, const mpz_class& p) {
    mpz_class stripped;
    unsigned long v = mpz_remove(stripped.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    n = stripped;
    return v;
}

} // namespace

PAdicNumber::PAdicNumber(std::shared_ptr<const PAdicContext> ctx, State state,
                         mpz_class valuation, mpz_class unit, int digits)
    : ctx_(std::move(ctx)),
      state_(state),
      valuation_(std::move(valuation)),
      unit_(std::move(unit)),
      known_digits_(digits) {}

PAdicNumber PAdicNumber::zero(const PAdicContext& ctx) {
    return PAdicNumber(std::make_shared<PAdicContext>(ctx), State::Zero, 0, 0, 0);
}

PAdicNumber PAdicNumber::one(const PAdicContext& ctx) {
    return from_parts(ctx, 0, 1, ctx.precision());
}

PAdicNumber PAdicNumber::from_parts(const PAdicContext& ctx, const mpz_class& valuation,
                                    const mpz_class& unit, int digits) {
    if (digits < 1 || digits > ctx.precision()) {
        throw domain_error("known digits out of range [1, N]");
    }
    mpz_class mod = ctx.prime_power(digits);
    mpz_class u = unit % mod;
    if (u < 0) u += mod;
    if (u % ctx.prime() == 0) {
        throw domain_error("unit part must be coprime to p");
    }
    return PAdicNumber(std::make_shared<PAdicContext>(ctx), State::NonZero, valuation, u, digits);
}

PAdicNumber PAdicNumber::from_rational(const mpz_class& num, const mpz_class& den,
                                       const PAdicContext& ctx) {
    if (den == 0) throw domain_error("rational with zero denominator");
    if (num == 0) return zero(ctx);
    mpz_class n = num, d = den;
    long v = static_cast<long>(strip_prime(n, ctx.prime()));
    v -= static_cast<long>(strip_prime(d, ctx.prime()));
    const mpz_class& mod = ctx.modulus();
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0) {
        throw internal_error("denominator not invertible after stripping p");
    }
    mpz_class u = (n * dinv) % mod;
    if (u < 0) u += mod;
    return from_parts(ctx, mpz_class(v), u, ctx.precision());
}

PAdicNumber PAdicNumber::from_integer(const mpz_class& n, const PAdicContext& ctx) {
    return from_rational(n, 1, ctx);
}

const mpz_class& PAdicNumber::valuation() const {
    if (state_ != State::NonZero) throw domain_error("valuation of a (near-)zero value");
    return valuation_;
}

const mpz_class& PAdicNumber::unit() const {
    if (state_ != State::NonZero) throw domain_error("unit part of a (near-)zero value");
    return unit_;
}

int PAdicNumber::known_digits() const {
    if (state_ != State::NonZero) throw domain_error("known_digits of a (near-)zero value");
    return known_digits_;
}

const mpz_class& PAdicNumber::norm_bound_exponent() const {
    if (state_ != State::ZeroAtPrecision) {
        throw domain_error("norm bound exponent only exists for zero-at-precision values");
    }
    return valuation_;
}

Radius PAdicNumber::norm() const {
    switch (state_) {
        case State::Zero:
            return Radius::zero(ctx_->prime());
        case State::ZeroAtPrecision:
            return Radius::upper_bound(ctx_->prime(), valuation_);
        case State::NonZero:
        default:
            return Radius::from_exponent(ctx_->prime(), mpq_class(valuation_));
    }
}

mpz_class PAdicNumber::residue() const {
    if (state_ != State::NonZero || valuation_ != 0) {
        throw domain_error("residue requires a unit (valuation 0)");
    }
    return unit_ % ctx_->prime();
}

PAdicNumber PAdicNumber::operator-() const {
    if (state_ != State::NonZero) return *this;
    mpz_class mod = ctx_->prime_power(known_digits_);
    return PAdicNumber(ctx_, State::NonZero, valuation_, mod - unit_, known_digits_);
}

PAdicNumber PAdicNumber::operator+(const PAdicNumber& other) const {
    require_same_context(*this, other);
    if (state_ == State::Zero) return other;
    if (other.state_ == State::Zero) return *this;

    // Zero-at-precision operands: |x| <= p^-A acts as an O(p^A) error term.
    if (state_ == State::ZeroAtPrecision && other.state_ == State::ZeroAtPrecision) {
        mpz_class bound = valuation_ < other.valuation_ ? valuation_ : other.valuation_;
        return PAdicNumber(ctx_, State::ZeroAtPrecision, bound, 0, 0);
    }
    if (state_ == State::ZeroAtPrecision) return other + *this;
    if (other.state_ == State::ZeroAtPrecision) {
        const mpz_class& bound = other.valuation_;
        if (valuation_ >= bound) {
            return PAdicNumber(ctx_, State::ZeroAtPrecision, bound, 0, 0);
        }
        mpz_class digits_limit = bound - valuation_;
        int d = known_digits_;
        if (digits_limit < d) d = static_cast<int>(digits_limit.get_si());
        mpz_class u = unit_ % ctx_->prime_power(d);
        return PAdicNumber(ctx_, State::NonZero, valuation_, u, d);
    }

    const PAdicNumber& lo = (valuation_ <= other.valuation_) ? *this : other;
    const PAdicNumber& hi = (valuation_ <= other.valuation_) ? other : *this;

    if (lo.valuation_ < hi.valuation_) {
        // Distinct norms: no leading cancellation, |sum| = max norm exactly.
        mpz_class abs_lo = lo.valuation_ + lo.known_digits_;
        mpz_class abs_hi = hi.valuation_ + hi.known_digits_;
        mpz_class abs = abs_lo < abs_hi ? abs_lo : abs_hi;
        int d = static_cast<int>(mpz_class(abs - lo.valuation_).get_si());
        mpz_class mod = ctx_->prime_power(d);
        mpz_class delta = hi.valuation_ - lo.valuation_;
        mpz_class u = lo.unit_;
        if (delta < d) {
            mpz_class shift;
            mpz_pow_ui(shift.get_mpz_t(), ctx_->prime().get_mpz_t(),
                       delta.get_ui());
            u = (u + shift * hi.unit_) % mod;
        } else {
            u %= mod;
        }
        return PAdicNumber(ctx_, State::NonZero, lo.valuation_, u, d);
    }

    // Equal valuations: cancellation possible, track it digit-exactly.
    int dmin = std::min(lo.known_digits_, hi.known_digits_);
    mpz_class mod = ctx_->prime_power(dmin);
    mpz_class s = (lo.unit_ + hi.unit_) % mod;
    mpz_class abs = lo.valuation_ + dmin;
    if (s == 0) {
        return PAdicNumber(ctx_, State::ZeroAtPrecision, abs, 0, 0);
    }
    unsigned long t = strip_prime(s, ctx_->prime());
    int d = dmin - static_cast<int>(t);
    s %= ctx_->prime_power(d);
    return PAdicNumber(ctx_, State::NonZero, lo.valuation_ + static_cast<long>(t), s, d);
}

PAdicNumber PAdicNumber::operator-(const PAdicNumber& other) const {
    return *this + (-other);
}

PAdicNumber PAdicNumber::operator*(const PAdicNumber& other) const {
    require_same_context(*this, other);
    if (state_ == State::Zero || other.state_ == State::Zero) return zero(*ctx_);
    if (state_ == State::ZeroAtPrecision || other.state_ == State::ZeroAtPrecision) {
        // |xy| <= p^-(A + v) (or A1 + A2 when both are bounds).
        mpz_class bound = valuation_ + other.valuation_;
        return PAdicNumber(ctx_, State::ZeroAtPrecision, bound, 0, 0);
    }
    int d = std::min(known_digits_, other.known_digits_);
    mpz_class u = (unit_ * other.unit_) % ctx_->prime_power(d);
    return PAdicNumber(ctx_, State::NonZero, valuation_ + other.valuation_, u, d);
}

PAdicNumber PAdicNumber::operator/(const PAdicNumber& other) const {
    return *this * inv(other);
}

bool PAdicNumber::identical(const PAdicNumber& other) const {
    if (!(context() == other.context()) || state_ != other.state_) return false;
    switch (state_) {
        case State::Zero:
            return true;
        case State::ZeroAtPrecision:
            return valuation_ == other.valuation_;
        case State::NonZero:
        default:
            return valuation_ == other.valuation_ && known_digits_ == other.known_digits_ &&
                   unit_ == other.unit_;
    }
}

std::string PAdicNumber::str() const {
    std::ostringstream os;
    switch (state_) {
        case State::Zero:
            os << "0";
            break;
        case State::ZeroAtPrecision:
            os << "O(" << ctx_->prime().get_str() << "^" << valuation_.get_str() << ")";
            break;
        case State::NonZero:
            os << ctx_->prime().get_str() << "^" << valuation_.get_str() << " * " << unit_.get_str()
               << " (" << known_digits_ << " digits)";
            break;
    }
    return os.str();
}

PAdicNumber inv(const PAdicNumber& x) {
    if (x.is_zero()) throw domain_error("inverse of zero");
    if (x.is_zero_at_precision()) {
        throw domain_error("inverse of a value indistinguishable from zero at precision");
    }
    const PAdicContext& ctx = x.context();
    mpz_class mod = ctx.prime_power(x.known_digits());
    mpz_class u;
    if (mpz_invert(u.get_mpz_t(), x.unit().get_mpz_t(), mod.get_mpz_t()) == 0) {
        throw internal_error("unit not invertible");
    }
    return PAdicNumber::from_parts(ctx, -x.valuation(), u, x.known_digits());
}

PAdicNumber pow(const PAdicNumber& x, const mpz_class& k) {
    const PAdicContext& ctx = x.context();
    if (x.is_zero()) {
        if (k > 0) return PAdicNumber::zero(ctx);
        if (k == 0) return PAdicNumber::one(ctx);
        throw domain_error("negative power of zero");
    }
    if (x.is_zero_at_precision()) {
        throw domain_error("power of a value indistinguishable from zero at precision");
    }
    if (k == 0) return PAdicNumber::one(ctx);

    int d = x.known_digits();
    // Unit-group order at the known precision; exponents of units live mod
    // this, while the valuation takes the full big-integer k.
    mpz_class order = ctx.prime_power(d - 1) * (ctx.prime() - 1);
    mpz_class kred = k % order;
    if (kred < 0) kred += order;
    mpz_class mod = ctx.prime_power(d);
    mpz_class u;
    mpz_powm(u.get_mpz_t(), x.unit().get_mpz_t(), kred.get_mpz_t(), mod.get_mpz_t());
    return PAdicNumber::from_parts(ctx, x.valuation() * k, u, d);
}

Radius distance(const PAdicNumber& x, const PAdicNumber& y) {
    require_same_context(x, y);
    return (x - y).norm();
}

bool equal_at_precision(const PAdicNumber& x, const PAdicNumber& y) {
    PAdicNumber d = x - y;
    return !d.is_nonzero();
}

bool canonical_less(const PAdicNumber& a, const PAdicNumber& b) {
    if (a.is_nonzero() != b.is_nonzero()) return !a.is_nonzero();
    if (!a.is_nonzero()) return false;
    if (a.valuation() != b.valuation()) return a.valuation() < b.valuation();
    return a.unit() < b.unit();
}

mpz_class rational_valuation(const mpz_class& num, const mpz_class& den, const mpz_class& p) {
    if (num == 0 || den == 0) throw domain_error("valuation of zero rational");
    mpz_class n = num, d = den, tmp;
    long v = static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    v -= static_cast<long>(mpz_remove(tmp.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t()));
    return mpz_class(v);
}

} // namespace padicdyn
