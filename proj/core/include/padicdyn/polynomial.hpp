#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace padicdyn {

/// Integer-coefficient polynomial descriptor for root lifting. Two sparse
/// families cover everything the dynamics needs (x^3 - a and x^k - 1, where
/// k may be far too large for a dense table), plus a generic dense form.
class Polynomial {
public:
    static Polynomial cube_minus(const mpz_class& a);
    static Polynomial unity(const mpz_class& k);
    /// coeffs[i] is the coefficient of x^i.
    static Polynomial dense(std::vector<mpz_class> coeffs);

    mpz_class eval_mod(const mpz_class& x, const mpz_class& mod) const;
    mpz_class derivative_eval_mod(const mpz_class& x, const mpz_class& mod) const;

    const std::string& describe() const { return label_; }

private:
    enum class Kind { CubeMinus, Unity, Dense };

    Polynomial(Kind kind, mpz_class param, std::vector<mpz_class> coeffs, std::string label);

    Kind kind_;
    mpz_class param_; // a for CubeMinus, k for Unity
    std::vector<mpz_class> coeffs_;
    std::string label_;
};

} // namespace padicdyn
