#include "padicdyn/polynomial.hpp"

#include "padicdyn/errors.hpp"

namespace padicdyn {

Polynomial::Polynomial(Kind kind, mpz_class param, std::vector<mpz_class> coeffs,
                       std::string label)
    : kind_(kind), param_(std::move(param)), coeffs_(std::move(coeffs)), label_(std::move(label)) {}

Polynomial Polynomial::cube_minus(const mpz_class& a) {
    return Polynomial(Kind::CubeMinus, a, {}, "x^3 - a");
}

Polynomial Polynomial::unity(const mpz_class& k) {
    if (k < 1) throw domain_error("unity exponent must be >= 1");
    return Polynomial(Kind::Unity, k, {}, "x^" + k.get_str() + " - 1");
}

Polynomial Polynomial::dense(std::vector<mpz_class> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) throw domain_error("zero polynomial");
    return Polynomial(Kind::Dense, 0, std::move(coeffs), "dense");
}

namespace {

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

mpz_class reduce(const mpz_class& x, const mpz_class& mod) {
    mpz_class r = x % mod;
    if (r < 0) r += mod;
    return r;
}

} // namespace

mpz_class Polynomial::eval_mod(const mpz_class& x, const mpz_class& mod) const {
    switch (kind_) {
        case Kind::CubeMinus:
            return reduce(powm(x, 3, mod) - param_, mod);
        case Kind::Unity:
            return reduce(powm(x, param_, mod) - 1, mod);
        case Kind::Dense: {
            mpz_class acc = 0;
            for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
                acc = reduce(acc * x + *it, mod);
            }
            return acc;
        }
    }
    return 0;
}

mpz_class Polynomial::derivative_eval_mod(const mpz_class& x, const mpz_class& mod) const {
    switch (kind_) {
        case Kind::CubeMinus:
            return reduce(3 * powm(x, 2, mod), mod);
        case Kind::Unity:
            return reduce(param_ * powm(x, param_ - 1, mod), mod);
        case Kind::Dense: {
            mpz_class acc = 0;
            for (std::size_t i = coeffs_.size(); i-- > 1;) {
                acc = reduce(acc * x + mpz_class(i) * coeffs_[i], mod);
            }
            return acc;
        }
    }
    return 0;
}

} // namespace padicdyn
