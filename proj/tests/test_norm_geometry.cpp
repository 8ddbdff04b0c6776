#include "doctest.h"

#include "padicdyn/json_io.hpp"
#include "padicdyn/norm_geometry.hpp"
#include "padicdyn/rng.hpp"

using namespace padicdyn;

TEST_CASE("radius algebra: order, product, powers") {
    Radius r1 = Radius::from_exponent(7, 2);      // 7^-2
    Radius r2 = Radius::from_exponent(7, 1, 3);   // 7^-(1/3)
    CHECK(r1 < r2); // larger exponent = smaller radius
    CHECK(r1 * r2 == Radius::from_exponent(7, 7, 3));
    CHECK(r1.pow(3) == Radius::from_exponent(7, 6));
    CHECK(r1.pow(-1) == Radius::from_exponent(7, -2));
    CHECK(Radius::zero(7) < r1);
    CHECK(r1 < Radius::infinite(7));
    CHECK(r1.is_integral());
    CHECK_FALSE(r2.is_integral());
    CHECK(r2.str() == "7^(-1/3)");

    Radius bound = Radius::upper_bound(7, 5);
    CHECK_THROWS_AS((void)(bound == r1), domain_error);
    CHECK_THROWS_AS((void)(bound < r1), domain_error);
    CHECK_THROWS_AS(Radius::from_exponent(7, 1) * Radius::from_exponent(5, 1), domain_error);
}

TEST_CASE("map params validate inputs and expose alpha") {
    CHECK_THROWS_AS(MapParams(7, 1, 0), domain_error);
    CHECK_THROWS_AS(MapParams(6, 1, 2), domain_error);
    MapParams params(7, 1, 2);
    CHECK(params.invariant_radius() == Radius::from_exponent(7, 1, 3));
    MapParams general(5, -4, 3);
    CHECK(general.invariant_radius() == Radius::from_exponent(5, -1, 1));
}

TEST_CASE("radius recurrence: frozen exponent sequence") {
    // v(a)=1, q=2, start on the unit sphere.
    MapParams params(5, 1, 2);
    RadiusTrajectory traj = radius_iterate(params, Radius::from_exponent(5, 0), 3);
    CHECK(traj.terms[0] == Radius::from_exponent(5, 1));  // r_1 = p^-1
    CHECK(traj.terms[1] == Radius::from_exponent(5, -1)); // r_2 = p
    CHECK(traj.terms[2] == Radius::from_exponent(5, 3));  // r_3 = p^-3
    CHECK(traj.classification == TrajectoryClass::EscapeEvenCollapseOdd);
}

TEST_CASE("the invariant sphere stays put") {
    MapParams params(7, 2, 2);
    Radius alpha = params.invariant_radius();
    RadiusTrajectory traj = radius_iterate(params, alpha, 20);
    for (const Radius& r : traj.terms) CHECK(r == alpha);
    CHECK(traj.classification == TrajectoryClass::InvariantSphere);
}

TEST_CASE("q = 1 makes every sphere two-periodic") {
    MapParams params(7, 3, 1);
    Radius r = Radius::from_exponent(7, 5);
    RadiusTrajectory traj = radius_iterate(params, r, 4);
    CHECK(traj.terms[1] == r);
    CHECK(traj.terms[3] == r);
    CHECK(traj.terms[0] == traj.terms[2]);
    CHECK(traj.classification == TrajectoryClass::PeriodTwo);
}

TEST_CASE("start classification trichotomy") {
    MapParams unit(7, 0, 2);
    CHECK(classify_start(unit, Radius::from_exponent(7, 1)) == OuterRegion::Inside);
    CHECK(classify_start(unit, unit.invariant_radius()) == OuterRegion::OnSphere);

    MapParams neg(7, -3, 2); // alpha = p
    CHECK(classify_start(neg, Radius::from_exponent(7, 0)) == OuterRegion::Inside);

    CHECK_THROWS_AS(classify_start(unit, Radius::zero(7)), domain_error);
}

TEST_CASE("sphere images cross the invariant sphere") {
    MapParams params(7, 0, 2);
    // inside -> outside
    BallMapping inner = ball_mapping_check(params, Radius::from_exponent(7, 2));
    CHECK(inner.image_region == OuterRegion::Outside);
    // on -> on
    BallMapping on = ball_mapping_check(params, params.invariant_radius());
    CHECK(on.image_region == OuterRegion::OnSphere);
    // outside -> inside, exponent 0 - 2*(-1) = 2
    BallMapping outer = ball_mapping_check(params, Radius::from_exponent(7, -1));
    CHECK(outer.image_radius == Radius::from_exponent(7, 2));
    CHECK(outer.image_region == OuterRegion::Inside);
}

TEST_CASE("no periodic radii off the invariant sphere") {
    MapParams params(7, 0, 2);
    OffSpherePeriodicWitness w = no_off_sphere_periodic(params, Radius::from_exponent(7, 1), 3);
    CHECK(w.excluded);
    CHECK(w.e_m == -8);

    // m = 1 generic: e_1 = v(a) - 2 e_0 != e_0 whenever e_0 != v(a)/3.
    OffSpherePeriodicWitness w1 = no_off_sphere_periodic(params, Radius::from_exponent(7, 2), 1);
    CHECK(w1.excluded);
    CHECK(w1.e_m == -4);

    CHECK_THROWS_AS(no_off_sphere_periodic(params, params.invariant_radius(), 3), domain_error);
}

TEST_CASE("recurrence agrees with one-step ball mapping") {
    SplitMix64 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        long va = static_cast<long>(rng.below(13)) - 6;
        int q = 1 + static_cast<int>(rng.below(3));
        long num = static_cast<long>(rng.below(13)) - 6;
        long den = 1 + static_cast<long>(rng.below(3));
        MapParams params(11, va, q);
        Radius r = Radius::from_exponent(11, make_rational(num, den));
        RadiusTrajectory traj = radius_iterate(params, r, 50);
        Radius prev = r;
        for (int n = 0; n < 50; ++n) {
            BallMapping step = ball_mapping_check(params, prev);
            CHECK(step.image_radius == traj.terms[static_cast<std::size_t>(n)]);
            prev = step.image_radius;
        }
    }
}

TEST_CASE("off-sphere exponents diverge monotonically by parity") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        long va = static_cast<long>(rng.below(7)) - 3;
        int q = 2 + static_cast<int>(rng.below(2));
        long num = static_cast<long>(rng.below(7)) - 3;
        long den = 1 + static_cast<long>(rng.below(3));
        MapParams params(13, va, q);
        mpq_class e0 = make_rational(num, den);
        mpq_class alpha_e = make_rational(va, q + 1);
        if (e0 == alpha_e) continue;

        RadiusTrajectory traj = radius_iterate(params, Radius::from_exponent(13, e0), 12);
        auto exp_at = [&](int n) { return traj.terms[static_cast<std::size_t>(n - 1)].exponent(); };
        for (int n = 3; n <= 12; ++n) {
            mpq_class prev = exp_at(n - 2) - alpha_e;
            mpq_class cur = exp_at(n) - alpha_e;
            CHECK(abs(cur) > abs(prev)); // same-parity deviation grows strictly
            CHECK(sgn(exp_at(n) - alpha_e) == -sgn(exp_at(n - 1) - alpha_e));
        }
    }
}

TEST_CASE("trajectory csv emitter") {
    MapParams params(5, 1, 2);
    RadiusTrajectory traj = radius_iterate(params, Radius::from_exponent(5, 0), 2);
    CHECK(trajectory_csv(traj) == "n,num,den\n0,0,1\n1,1,1\n2,-1,1\n");

    json j = to_json(traj);
    CHECK(j["classification"] == "ESCAPE_EVEN_COLLAPSE_ODD");
    CHECK(j["terms"].size() == 2);
}
