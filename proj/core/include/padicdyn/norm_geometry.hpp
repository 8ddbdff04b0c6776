#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "padicdyn/padic.hpp"
#include "padicdyn/radius.hpp"

namespace padicdyn {

/// The map x -> a / x^q. The coefficient may be held exactly (a in Q_p) or
/// by valuation only: every statement at the norm layer depends on a through
/// |a|_p alone, so a valuation-only coefficient is enough to drive the whole
/// radius-level analysis, including over extensions of Q_p.
class MapParams {
public:
    /// Valuation-only coefficient.
    MapParams(const mpz_class& prime, const mpz_class& a_valuation, int q);
    /// Exact coefficient; the valuation is read off it.
    MapParams(const PAdicNumber& a, int q);

    const mpz_class& prime() const { return prime_; }
    const mpz_class& a_valuation() const { return a_valuation_; }
    const std::optional<PAdicNumber>& a_exact() const { return a_exact_; }
    int q() const { return q_; }

    /// The invariant-sphere radius: exponent v(a)/(q+1).
    Radius invariant_radius() const;

    /// The exact coefficient, required by the exact-layer dynamics (q = 2).
    const PAdicNumber& require_exact_quadratic() const;

private:
    mpz_class prime_;
    mpz_class a_valuation_;
    std::optional<PAdicNumber> a_exact_;
    int q_;
};

/// Outer position of a sphere S_r(0) relative to the invariant sphere.
enum class OuterRegion { Inside, OnSphere, Outside };

/// Long-run shape of the radius sequence r_n.
enum class TrajectoryClass {
    CollapseEvenEscapeOdd, // r < alpha, q >= 2: even radii -> 0, odd -> inf
    EscapeEvenCollapseOdd, // r > alpha, q >= 2: even radii -> inf, odd -> 0
    InvariantSphere,       // r = alpha: every iterate stays on S_alpha(0)
    PeriodTwo,             // q = 1, r != alpha: radii alternate r, |a|/r
};

struct RadiusTrajectory {
    Radius initial;
    std::vector<Radius> terms; // terms[n-1] is the radius after n steps
    TrajectoryClass classification;
};

/// Exact radius recurrence: the image of S_r(0) after n steps has exponent
/// e_n = (1 - (-q)^n) * v(a)/(q+1) + (-q)^n * e_0, computed in big-rational
/// arithmetic. Valid over the full algebraic completion since it only sees
/// norms.
RadiusTrajectory radius_iterate(const MapParams& params, const Radius& r, int n_max);

/// Position of the starting sphere. r = 0 is rejected: the map is undefined
/// at 0. For q >= 2 the label carries the full trichotomy (inside: even
/// iterates collapse, odd escape; outside: mirrored; on-sphere: invariant).
OuterRegion classify_start(const MapParams& params, const Radius& r);

/// Region of the image sphere f(S_r(0)), whose radius is |a|_p / r^q.
struct BallMapping {
    Radius image_radius;
    OuterRegion image_region;
};
BallMapping ball_mapping_check(const MapParams& params, const Radius& r);

/// Witness that no point off the invariant sphere can be m-periodic: the
/// exponent after m steps provably differs from the starting exponent.
struct OffSpherePeriodicWitness {
    bool excluded;      // always true when the precondition r != alpha holds
    mpq_class e_start;  // starting exponent
    mpq_class e_m;      // exponent after m steps
};
OffSpherePeriodicWitness no_off_sphere_periodic(const MapParams& params, const Radius& r, int m);

/// CSV rendering of a radius trajectory, columns n,num,den (exponent of the
/// radius after n steps as num/den). Row 0 is the starting radius.
std::string trajectory_csv(const RadiusTrajectory& traj);

const char* to_string(OuterRegion region);
const char* to_string(TrajectoryClass cls);

} // namespace padicdyn
