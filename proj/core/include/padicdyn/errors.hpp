#pragma once

#include <stdexcept>
#include <string>

namespace padicdyn {

/// Base class for all mathematical domain violations raised by this library.
/// The CLI maps these to exit code 1.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// A simple-root hypothesis failed: the polynomial derivative vanishes mod p
/// at the seed, so the quadratic lifting step cannot proceed.
class not_liftable_error : public domain_error {
public:
    explicit not_liftable_error(const std::string& what) : domain_error(what) {}
};

/// Period m = 2 admits no solutions other than fixed points, so a search for
/// 2-periodic orbits is rejected up front.
class period_rejected_error : public domain_error {
public:
    explicit period_rejected_error(const std::string& what) : domain_error(what) {}
};

/// A bound evaluation was requested outside the contraction regime r < alpha.
class out_of_regime_error : public domain_error {
public:
    explicit out_of_regime_error(const std::string& what) : domain_error(what) {}
};

/// A sphere radius cannot be realized by any element of Q_p (the exponent is
/// not an integer), so sampling on it is impossible at the exact layer.
class sampling_unsupported_error : public domain_error {
public:
    explicit sampling_unsupported_error(const std::string& what) : domain_error(what) {}
};

/// Internal consistency failure: a number-theoretic guarantee the code relies
/// on was violated. Indicates a bug, not a caller error.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace padicdyn
