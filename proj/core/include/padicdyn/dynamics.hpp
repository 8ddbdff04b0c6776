#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "padicdyn/norm_geometry.hpp"
#include "padicdyn/padic.hpp"
#include "padicdyn/roots.hpp"

namespace padicdyn {

enum class StabilityCharacter { Attracting, Indifferent };

const char* to_string(StabilityCharacter c);

/// One application of the map: x -> a * x^-2, exact (valuation v(a) - 2v(x),
/// no digit loss). Requires the coefficient exactly and q = 2.
PAdicNumber step(const MapParams& params, const PAdicNumber& x);

/// The n-fold composite in closed form: a^((1 - (-2)^n)/3) * x^((-2)^n).
/// Equal to n-fold step() exactly, at the cost of two modular
/// exponentiations. The exponent (1 - (-2)^n)/3 is an integer for every n;
/// the divisibility is asserted on every call as a refactoring guard.
PAdicNumber iterate_closed_form(const MapParams& params, const PAdicNumber& x, int n);

/// Fixed points (the cube roots of a) with their common multiplier -2.
/// When the roots do not exist in Q_p -- nonresidue unit, valuation not
/// divisible by 3, or the p = 3 lifting obstruction -- the exact list is
/// empty and the distance statement is carried at the norm layer only.
struct FixedPointReport {
    RootSet fixed_points;
    bool exact_roots_available = false;
    std::string unavailable_reason;            // set when !exact_roots_available
    std::optional<PAdicNumber> multiplier;     // -2, when an exact context exists
    Radius multiplier_norm;                    // |2|_p: 1/2 iff p = 2, else 1
    StabilityCharacter character;              // Attracting iff p = 2, never repelling
    Radius pairwise_distance;                  // alpha for p != 3; exponent v(a)/3 + 1/2 for p = 3
};

FixedPointReport fixed_point_analysis(const MapParams& params);

/// Search for m-periodic points built from roots of unity: candidates are
/// a^(1/3) * theta over the (2^m - 1)-th roots of unity for even m, and
/// a^(1/3) / theta over the (2^m + 1)-th roots for odd m. A candidate is
/// admissible when its unity part is distinct mod p from every cube root of
/// unity (valuation-0 elements are at distance 1 exactly when their residues
/// differ), which is the unit-distance condition to all fixed points.
struct PeriodicSearchResult {
    int m = 0;
    bool even = false;
    mpz_class unity_order;                        // 2^m - 1 or 2^m + 1
    RootSet candidates;
    std::vector<PAdicNumber> admissible;          // non-fixed members passing the condition
    std::vector<std::vector<PAdicNumber>> cycles; // partition of admissible, canonical order
    Radius multiplier_norm;                       // |2|_p^m
    StabilityCharacter character;
    bool exact_available = false;                 // false: norm-layer-only report
    std::string note;
};

/// m = 2 is rejected up front (period_rejected_error): the degree equation
/// has no solutions beyond the fixed points. m < 1 is a domain error.
PeriodicSearchResult find_periodic(const MapParams& params, int m);

/// |(f^m)'| at any m-periodic point: |2|_p^m.
Radius cycle_multiplier_norm(int m, const PAdicContext& ctx);
StabilityCharacter cycle_character(const PAdicContext& ctx);

/// Contraction bound for phi = f^m around an m-periodic point: evaluates
/// term_n = |(1/n!) * prod_{s<n} ((-2)^m - s)|_p * (r/alpha)^(n-1) by exact
/// valuation arithmetic on the integer product over n!, and reports the max.
/// For p = 2 (attracting) the max runs over n >= 1 and certifies the ball
/// is in the basin when Q < 1; for p >= 3 (indifferent) it runs over n >= 2
/// and certifies a Siegel disk when S < |phi'|_p. The max stabilizes at a
/// finite cutoff because every coefficient is an integer (norm <= 1) while
/// the geometric factor (r/alpha)^(n-1) decreases strictly.
enum class BoundKind { BasinQ, SiegelS };

struct BoundReport {
    int m = 0;
    Radius ratio;            // r/alpha, must be < 1
    BoundKind kind;
    Radius value;            // the achieved max
    Radius derivative_norm;  // |phi'|_p = |2|_p^m
    bool satisfied = false;
    int n_cutoff = 0;        // first n from which no later term can raise the max
};

BoundReport attraction_bound(int m, const Radius& r_over_alpha, const PAdicContext& ctx);

} // namespace padicdyn
