#include "padicdyn/norm_geometry.hpp"

#include <sstream>

namespace padicdyn {

MapParams::MapParams(const mpz_class& prime, const mpz_class& a_valuation, int q)
    : prime_(prime), a_valuation_(a_valuation), q_(q) {
    if (q < 1) throw domain_error("map exponent q must be >= 1");
    if (!is_prime(prime)) throw domain_error("map prime is not prime");
}

MapParams::MapParams(const PAdicNumber& a, int q)
    : prime_(a.context().prime()), q_(q) {
    if (q < 1) throw domain_error("map exponent q must be >= 1");
    if (!a.is_nonzero()) throw domain_error("map coefficient a must be nonzero");
    a_valuation_ = a.valuation();
    a_exact_ = a;
}

Radius MapParams::invariant_radius() const {
    return Radius::from_exponent(prime_, make_rational(a_valuation_, q_ + 1));
}

const PAdicNumber& MapParams::require_exact_quadratic() const {
    if (q_ != 2) throw domain_error("exact-layer dynamics are defined for q = 2 only");
    if (!a_exact_) {
        throw domain_error("operation requires the coefficient a exactly, not only |a|_p");
    }
    return *a_exact_;
}

namespace {

void require_positive_radius(const Radius& r) {
    if (r.is_zero()) throw domain_error("the map is undefined at 0");
    if (r.is_infinite() || r.upper_bound_only()) {
        throw domain_error("radius must be a positive exact value");
    }
}

// e_n = (1 - (-q)^n) * v(a)/(q+1) + (-q)^n * e_0
mpq_class exponent_after(const mpz_class& a_val, int q, const mpq_class& e0, int n) {
    mpz_class sign_pow; // (-q)^n
    mpz_class base = -mpz_class(q);
    mpz_pow_ui(sign_pow.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    mpq_class alpha_e = make_rational(a_val, q + 1);
    return (mpq_class(1) - mpq_class(sign_pow)) * alpha_e + mpq_class(sign_pow) * e0;
}

} // namespace

RadiusTrajectory radius_iterate(const MapParams& params, const Radius& r, int n_max) {
    require_positive_radius(r);
    if (n_max < 1) throw domain_error("n_max must be >= 1");

    RadiusTrajectory traj{r, {}, TrajectoryClass::InvariantSphere};
    traj.terms.reserve(static_cast<std::size_t>(n_max));
    const mpq_class e0 = r.exponent();
    for (int n = 1; n <= n_max; ++n) {
        traj.terms.push_back(Radius::from_exponent(
            params.prime(), exponent_after(params.a_valuation(), params.q(), e0, n)));
    }

    const Radius alpha = params.invariant_radius();
    if (r == alpha) {
        traj.classification = TrajectoryClass::InvariantSphere;
    } else if (params.q() == 1) {
        traj.classification = TrajectoryClass::PeriodTwo;
    } else if (r < alpha) {
        traj.classification = TrajectoryClass::CollapseEvenEscapeOdd;
    } else {
        traj.classification = TrajectoryClass::EscapeEvenCollapseOdd;
    }
    return traj;
}

OuterRegion classify_start(const MapParams& params, const Radius& r) {
    require_positive_radius(r);
    const Radius alpha = params.invariant_radius();
    if (r < alpha) return OuterRegion::Inside;
    if (r == alpha) return OuterRegion::OnSphere;
    return OuterRegion::Outside;
}

BallMapping ball_mapping_check(const MapParams& params, const Radius& r) {
    require_positive_radius(r);
    // |f(x)|_p = |a|_p / r^q, i.e. exponent v(a) - q * e(r).
    mpq_class e = mpq_class(params.a_valuation()) - mpq_class(params.q()) * r.exponent();
    Radius image = Radius::from_exponent(params.prime(), e);
    return BallMapping{image, classify_start(params, image)};
}

OffSpherePeriodicWitness no_off_sphere_periodic(const MapParams& params, const Radius& r, int m) {
    require_positive_radius(r);
    if (m < 1) throw domain_error("period m must be >= 1");
    const Radius alpha = params.invariant_radius();
    if (r == alpha) {
        throw domain_error("exclusion witness requires r != alpha (the sphere is invariant)");
    }
    mpq_class e0 = r.exponent();
    mpq_class em = exponent_after(params.a_valuation(), params.q(), e0, m);
    bool excluded = (em != e0);
    if (!excluded && params.q() >= 2) {
        // e_m = alpha_e + (-q)^m (e_0 - alpha_e) can only equal e_0 when
        // e_0 = alpha_e, excluded above.
        throw internal_error("exponent recurrence returned a fixed radius off the sphere");
    }
    return OffSpherePeriodicWitness{excluded, e0, em};
}

std::string trajectory_csv(const RadiusTrajectory& traj) {
    std::ostringstream os;
    os << "n,num,den\n";
    os << "0," << traj.initial.exponent().get_num().get_str() << ","
       << traj.initial.exponent().get_den().get_str() << "\n";
    for (std::size_t i = 0; i < traj.terms.size(); ++i) {
        os << (i + 1) << "," << traj.terms[i].exponent().get_num().get_str() << ","
           << traj.terms[i].exponent().get_den().get_str() << "\n";
    }
    return os.str();
}

const char* to_string(OuterRegion region) {
    switch (region) {
        case OuterRegion::Inside: return "INSIDE";
        case OuterRegion::OnSphere: return "ON_SPHERE";
        case OuterRegion::Outside: return "OUTSIDE";
    }
    return "?";
}

const char* to_string(TrajectoryClass cls) {
    switch (cls) {
        case TrajectoryClass::CollapseEvenEscapeOdd: return "COLLAPSE_EVEN_ESCAPE_ODD";
        case TrajectoryClass::EscapeEvenCollapseOdd: return "ESCAPE_EVEN_COLLAPSE_ODD";
        case TrajectoryClass::InvariantSphere: return "INVARIANT_SPHERE";
        case TrajectoryClass::PeriodTwo: return "PERIOD_TWO";
    }
    return "?";
}

} // namespace padicdyn
