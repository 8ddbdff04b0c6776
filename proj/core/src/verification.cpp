#include "padicdyn/verification.hpp"

#include <algorithm>
#include <sstream>

namespace padicdyn {

const char* to_string(RegionLabel::Inner inner) {
    switch (inner) {
        case RegionLabel::Inner::None: return "NONE";
        case RegionLabel::Inner::NearFixed: return "NEAR_FIXED";
        case RegionLabel::Inner::Equidistant: return "EQUIDISTANT";
        case RegionLabel::Inner::Undecided: return "UNDECIDED";
    }
    return "?";
}

mpz_class random_unit(const PAdicContext& ctx, SplitMix64& rng) {
    const mpz_class& p = ctx.prime();
    // Digits drawn low to high; the leading digit is nonzero so the result
    // is a unit. p is assumed to fit the generator's 64-bit draws, which
    // covers every desk-scale prime.
    unsigned long pl = p.get_ui();
    mpz_class u = 1 + rng.below(pl - 1);
    mpz_class scale = p;
    for (int i = 1; i < ctx.precision(); ++i) {
        u += scale * mpz_class(rng.below(pl));
        scale *= p;
    }
    return u;
}

PAdicNumber sample_at_distance(const PAdicNumber& center, const mpz_class& e, SplitMix64& rng) {
    const PAdicContext& ctx = center.context();
    PAdicNumber gamma =
        PAdicNumber::from_parts(ctx, e, random_unit(ctx, rng), ctx.precision());
    return center + gamma;
}

RegionLabel label_point(const MapParams& params, const PAdicNumber& x,
                        const FixedPointReport& fps) {
    if (!fps.exact_roots_available) {
        throw domain_error("labeling requires exact fixed points");
    }
    if (!x.is_nonzero()) throw domain_error("the map is undefined at 0");

    const Radius alpha = params.invariant_radius();
    Radius r = x.norm();
    if (r < alpha) return RegionLabel{OuterRegion::Inside, RegionLabel::Inner::None, -1, {}};
    if (r > alpha) return RegionLabel{OuterRegion::Outside, RegionLabel::Inner::None, -1, {}};

    RegionLabel label{OuterRegion::OnSphere, RegionLabel::Inner::None, -1, {}};
    int near_count = 0;
    for (std::size_t i = 0; i < fps.fixed_points.roots.size(); ++i) {
        Radius d = distance(x, fps.fixed_points.roots[i]);
        if (d.upper_bound_only() || d.is_zero()) {
            // Indistinguishable from the fixed point itself: certainly near
            // it, with rho known only as an upper bound (or exactly 0).
            label.inner = RegionLabel::Inner::NearFixed;
            label.fixed_index = static_cast<int>(i);
            label.rho = d;
            ++near_count;
            continue;
        }
        if (d < alpha) {
            label.inner = RegionLabel::Inner::NearFixed;
            label.fixed_index = static_cast<int>(i);
            label.rho = d;
            ++near_count;
        } else if (d > alpha) {
            throw internal_error("on-sphere point beyond distance alpha from a fixed point");
        }
    }
    if (near_count > 1) {
        throw internal_error("point within distance < alpha of two fixed points");
    }
    if (near_count == 0) label.inner = RegionLabel::Inner::Equidistant;
    return label;
}

namespace {

std::string radius_or_flag(const Radius& r) {
    return r.str();
}

const PAdicNumber& fixed_point_or_throw(const FixedPointReport& fps, int index) {
    if (!fps.exact_roots_available) {
        throw domain_error("suite requires exact fixed points");
    }
    if (index < 0 || static_cast<std::size_t>(index) >= fps.fixed_points.roots.size()) {
        throw domain_error("fixed point index out of range");
    }
    return fps.fixed_points.roots[static_cast<std::size_t>(index)];
}

} // namespace

VerificationReport check_sphere_invariance(const MapParams& params, int fixed_index,
                                           const Radius& rho, int samples, int n_steps,
                                           std::uint64_t seed) {
    FixedPointReport fps = fixed_point_analysis(params);
    const PAdicNumber& center = fixed_point_or_throw(fps, fixed_index);
    const PAdicContext& ctx = center.context();
    const mpz_class& p = ctx.prime();
    const Radius alpha = params.invariant_radius();

    VerificationReport rep;
    rep.theorem = "sphere-invariance";
    rep.seed = seed;
    rep.samples = samples;
    rep.n_steps = n_steps;

    if (rho.upper_bound_only() || rho.is_infinite()) {
        throw domain_error("rho must be an exact radius");
    }
    if (rho.is_zero()) {
        // Degenerate sphere: the center itself must stay fixed.
        PAdicNumber y = center;
        for (int n = 1; n <= n_steps; ++n) {
            y = step(params, y);
            if (!equal_at_precision(y, center)) {
                rep.failures.push_back({0, n, "fixed point moved"});
            }
        }
        rep.pass = rep.failures.empty();
        return rep;
    }
    if (!(rho < alpha)) throw domain_error("sphere check requires rho < alpha");
    if (!rho.is_integral()) {
        throw sampling_unsupported_error(
            "rho is not an integral power of p: no Q_p point realizes it");
    }

    const mpz_class e0 = rho.exponent().get_num();
    for (int s = 0; s < samples; ++s) {
        SplitMix64 rng(SplitMix64::subseed(seed, static_cast<std::uint64_t>(s)));
        PAdicNumber y = sample_at_distance(center, e0, rng);
        for (int n = 1; n <= n_steps; ++n) {
            y = step(params, y);
            Radius d = distance(y, center);
            Radius expected =
                (p == 2) ? Radius::from_exponent(p, mpq_class(e0 + n)) : rho;
            if (d.upper_bound_only()) {
                ++rep.undecided;
                rep.failures.push_back(
                    {s, n, "distance undecidable at precision: " + radius_or_flag(d)});
                break;
            }
            if (d != expected) {
                rep.failures.push_back({s, n, "expected " + expected.str() + ", observed " +
                                                  d.str()});
                break;
            }
        }
    }
    rep.pass = rep.failures.empty() && rep.undecided == 0;
    return rep;
}

VerificationReport check_basin_p2(const MapParams& params, int samples, int n_steps,
                                  std::uint64_t seed) {
    if (params.prime() != 2) throw domain_error("basin suite is the p = 2 statement");
    FixedPointReport fps = fixed_point_analysis(params);
    const PAdicNumber& root = fixed_point_or_throw(fps, 0);
    const PAdicContext& ctx = root.context();
    const int threshold = ctx.precision() / 2;
    if (n_steps < threshold - 2) {
        throw domain_error(
            "n_steps cannot witness convergence below the 2^-(N/2) threshold; "
            "need at least N/2 - 2 steps");
    }

    VerificationReport rep;
    rep.theorem = "basin-p2";
    rep.seed = seed;
    rep.samples = samples;
    rep.n_steps = n_steps;
    rep.observations.push_back(
        "no Q_2 unit is equidistant from the fixed point; equidistant samples: 0");

    for (int s = 0; s < samples; ++s) {
        SplitMix64 rng(SplitMix64::subseed(seed, static_cast<std::uint64_t>(s)));
        // Start strictly inside distance alpha/2: the halving rate is exact
        // from the first step there.
        long e0 = 2 + static_cast<long>(rng.below(9));
        PAdicNumber y = sample_at_distance(root, e0, rng);
        long expected_exp = e0;
        bool converged = false;
        bool broke = false;
        for (int n = 1; n <= n_steps; ++n) {
            y = step(params, y);
            expected_exp += 1;
            Radius d = distance(y, root);
            if (d.upper_bound_only()) {
                ++rep.undecided;
                rep.failures.push_back(
                    {s, n, "distance undecidable at precision: " + radius_or_flag(d)});
                broke = true;
                break;
            }
            if (d != Radius::from_exponent(2, expected_exp)) {
                rep.failures.push_back({s, n, "expected 2^-" + std::to_string(expected_exp) +
                                                  ", observed " + d.str()});
                broke = true;
                break;
            }
            if (expected_exp >= threshold) {
                converged = true; // below 2^-(N/2)
                break;
            }
        }
        if (!converged && !broke) {
            rep.failures.push_back({s, -1, "did not reach the convergence threshold"});
        }
    }
    rep.pass = rep.failures.empty() && rep.undecided == 0;
    return rep;
}

VerificationReport check_siegel(const MapParams& params, int samples, int n_steps,
                                std::uint64_t seed) {
    if (params.prime() < 3) throw domain_error("Siegel suite is the p >= 3 statement");
    FixedPointReport fps = fixed_point_analysis(params);
    if (!fps.exact_roots_available) throw domain_error("suite requires exact fixed points");

    VerificationReport rep;
    rep.theorem = "siegel-disks";
    rep.seed = seed;
    rep.samples = 0;
    rep.n_steps = n_steps;

    std::uint64_t stream = 0;
    for (std::size_t j = 0; j < fps.fixed_points.roots.size(); ++j) {
        for (long e = 1; e <= 3; ++e) {
            Radius rho = Radius::from_exponent(params.prime(), e);
            VerificationReport inner = check_sphere_invariance(
                params, static_cast<int>(j), rho, samples,
                n_steps, SplitMix64::subseed(seed, stream++));
            rep.samples += inner.samples;
            rep.undecided += inner.undecided;
            for (Counterexample& c : inner.failures) {
                c.what = "fixed point " + std::to_string(j) + ", rho exponent " +
                         std::to_string(e) + ": " + c.what;
                rep.failures.push_back(std::move(c));
            }
        }
    }
    rep.pass = rep.failures.empty() && rep.undecided == 0;
    return rep;
}

VerificationReport check_partition(const MapParams& params, int samples, std::uint64_t seed) {
    FixedPointReport fps = fixed_point_analysis(params);
    if (!fps.exact_roots_available) throw domain_error("suite requires exact fixed points");
    const Radius alpha = params.invariant_radius();
    if (!alpha.is_integral()) {
        throw sampling_unsupported_error("alpha is not an integral power of p");
    }
    const PAdicContext& ctx = fps.fixed_points.roots.front().context();

    VerificationReport rep;
    rep.theorem = "sphere-partition";
    rep.seed = seed;
    rep.samples = samples;
    rep.n_steps = 0;

    int near = 0, equi = 0;
    for (int s = 0; s < samples; ++s) {
        SplitMix64 rng(SplitMix64::subseed(seed, static_cast<std::uint64_t>(s)));
        PAdicNumber x = PAdicNumber::from_parts(ctx, alpha.exponent().get_num(),
                                                random_unit(ctx, rng), ctx.precision());
        RegionLabel label = label_point(params, x, fps);
        if (label.outer != OuterRegion::OnSphere) {
            rep.failures.push_back({s, 0, "sample left the invariant sphere"});
            continue;
        }
        switch (label.inner) {
            case RegionLabel::Inner::NearFixed: {
                ++near;
                for (std::size_t j = 0; j < fps.fixed_points.roots.size(); ++j) {
                    if (static_cast<int>(j) == label.fixed_index) continue;
                    Radius d = distance(x, fps.fixed_points.roots[j]);
                    if (d.upper_bound_only() || d != alpha) {
                        rep.failures.push_back(
                            {s, 0, "near one fixed point but not at distance alpha from another"});
                    }
                }
                break;
            }
            case RegionLabel::Inner::Equidistant:
                ++equi;
                break;
            default:
                ++rep.undecided;
                break;
        }
    }
    rep.observations.push_back("near_fixed: " + std::to_string(near));
    rep.observations.push_back("equidistant: " + std::to_string(equi));
    rep.pass = rep.failures.empty() && rep.undecided == 0;
    return rep;
}

VerificationReport check_equidistant_exits(const MapParams& params, int samples, int n_steps,
                                           std::uint64_t seed) {
    FixedPointReport fps = fixed_point_analysis(params);
    if (!fps.exact_roots_available) throw domain_error("suite requires exact fixed points");
    const Radius alpha = params.invariant_radius();
    if (!alpha.is_integral()) {
        throw sampling_unsupported_error("alpha is not an integral power of p");
    }
    const PAdicContext& ctx = fps.fixed_points.roots.front().context();

    VerificationReport rep;
    rep.theorem = "equidistant-exit";
    rep.seed = seed;
    rep.samples = samples;
    rep.n_steps = n_steps;

    int exited = 0, stayed = 0;
    for (int s = 0; s < samples; ++s) {
        SplitMix64 rng(SplitMix64::subseed(seed, static_cast<std::uint64_t>(s)));
        // Rejection-sample an equidistant starting point from the unit
        // stream; the acceptance chance per draw is bounded away from 0.
        std::optional<PAdicNumber> start;
        for (int attempt = 0; attempt < 256; ++attempt) {
            PAdicNumber x = PAdicNumber::from_parts(ctx, alpha.exponent().get_num(),
                                                    random_unit(ctx, rng), ctx.precision());
            if (label_point(params, x, fps).inner == RegionLabel::Inner::Equidistant) {
                start = x;
                break;
            }
        }
        if (!start) {
            rep.failures.push_back({s, 0, "could not sample an equidistant point"});
            continue;
        }
        EquidistantOutcome out = track_equidistant(params, *start, n_steps);
        if (!out.exited) {
            ++stayed;
            continue;
        }
        ++exited;
        if (!out.invariant_after_exit) {
            rep.failures.push_back({s, out.exit_step, "exit sphere drifted afterwards"});
            continue;
        }
        if (out.exit_radius->upper_bound_only()) {
            ++rep.undecided;
            continue;
        }
        if (!(*out.exit_radius < alpha)) {
            rep.failures.push_back({s, out.exit_step, "exit radius not below alpha"});
            continue;
        }
        // Independent recomputation of the exit distance via the closed form.
        PAdicNumber at_exit = iterate_closed_form(params, *start, out.exit_step);
        Radius d = distance(
            at_exit, fps.fixed_points.roots[static_cast<std::size_t>(out.fixed_index)]);
        if (d.upper_bound_only() || d != *out.exit_radius) {
            rep.failures.push_back({s, out.exit_step, "closed-form exit distance disagrees"});
        }
    }
    rep.observations.push_back("exited: " + std::to_string(exited));
    rep.observations.push_back("still_equidistant_at_horizon: " + std::to_string(stayed));
    rep.pass = rep.failures.empty() && rep.undecided == 0;
    return rep;
}

VerificationReport check_off_sphere_exclusion(const mpz_class& prime, int samples, int max_m,
                                              std::uint64_t seed) {
    if (max_m < 1) throw domain_error("max_m must be >= 1");
    VerificationReport rep;
    rep.theorem = "off-sphere-periodic-exclusion";
    rep.seed = seed;
    rep.samples = samples;
    rep.n_steps = max_m;

    for (int s = 0; s < samples; ++s) {
        SplitMix64 rng(SplitMix64::subseed(seed, static_cast<std::uint64_t>(s)));
        long va = static_cast<long>(rng.below(13)) - 6;
        int q = 2 + static_cast<int>(rng.below(2));
        long num = static_cast<long>(rng.below(13)) - 6;
        long den = 1 + static_cast<long>(rng.below(3));
        int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_m)));
        MapParams params(prime, va, q);
        mpq_class e0 = make_rational(num, den);
        if (e0 == make_rational(va, q + 1)) continue; // the invariant sphere is excluded
        OffSpherePeriodicWitness w =
            no_off_sphere_periodic(params, Radius::from_exponent(prime, e0), m);
        if (!w.excluded) {
            rep.failures.push_back({s, m, "radius returned to its starting exponent"});
        }
    }
    rep.pass = rep.failures.empty();
    return rep;
}

std::vector<VerificationReport> default_verification_suite(std::uint64_t seed, int samples,
                                                           int n_steps, int precision) {
    std::vector<VerificationReport> reports;
    auto subseed = [&](std::uint64_t idx) { return SplitMix64::subseed(seed, 1000 + idx); };

    PAdicContext c2(2, precision), c7(7, precision), c31(31, precision);
    MapParams m2(PAdicNumber::one(c2), 2);
    MapParams m7(PAdicNumber::one(c7), 2);
    MapParams m31(PAdicNumber::one(c31), 2);

    // Each suite runs on its own derived stream, but the report records the
    // master seed: `verify --seed S --suite <name>` is the reproduction path.
    auto named = [seed](VerificationReport rep, const std::string& name) {
        rep.theorem = name;
        rep.seed = seed;
        return rep;
    };

    reports.push_back(named(
        check_sphere_invariance(m7, 0, Radius::from_exponent(7, 1), samples, n_steps, subseed(0)),
        "sphere-invariance-p7-rho-1"));
    reports.push_back(named(
        check_sphere_invariance(m7, 1, Radius::from_exponent(7, 2), samples, n_steps, subseed(1)),
        "sphere-invariance-p7-rho-2"));
    // p = 2 rate law, strictly inside distance alpha/2 where it is provable:
    // at rho = alpha/2 the first step contracts faster than the nominal rate.
    int p2_steps = std::min(n_steps, precision / 2);
    reports.push_back(named(
        check_sphere_invariance(m2, 0, Radius::from_exponent(2, 2), samples, p2_steps, subseed(2)),
        "sphere-rate-p2-rho-2"));
    reports.push_back(named(
        check_sphere_invariance(m2, 0, Radius::from_exponent(2, 3), samples, p2_steps, subseed(3)),
        "sphere-rate-p2-rho-3"));
    reports.push_back(named(
        check_basin_p2(m2, samples, std::max(n_steps, precision / 2), subseed(4)), "basin-p2"));
    reports.push_back(named(check_siegel(m7, samples, n_steps, subseed(5)), "siegel-p7"));
    reports.push_back(named(check_siegel(m31, samples, n_steps, subseed(6)), "siegel-p31"));
    reports.push_back(
        named(check_partition(m7, 50 * samples, subseed(7)), "sphere-partition-p7"));
    reports.push_back(named(check_equidistant_exits(m7, samples, n_steps, subseed(8)),
                            "equidistant-exit-p7"));
    reports.push_back(named(check_off_sphere_exclusion(7, 50 * samples, 8, subseed(9)),
                            "off-sphere-periodic-exclusion"));
    return reports;
}

EquidistantOutcome track_equidistant(const MapParams& params, const PAdicNumber& x, int n_steps) {
    FixedPointReport fps = fixed_point_analysis(params);
    RegionLabel start = label_point(params, x, fps);
    if (start.inner != RegionLabel::Inner::Equidistant) {
        throw domain_error("tracked point must start equidistant from all fixed points");
    }
    const Radius alpha = params.invariant_radius();

    EquidistantOutcome out;
    out.steps_checked = n_steps;
    PAdicNumber y = x;
    for (int n = 1; n <= n_steps; ++n) {
        y = step(params, y);
        RegionLabel label = label_point(params, y, fps);
        if (label.inner == RegionLabel::Inner::Equidistant) continue;
        if (label.inner != RegionLabel::Inner::NearFixed) {
            throw internal_error("equidistant trajectory left the sphere");
        }
        out.exited = true;
        out.exit_step = n;
        out.fixed_index = label.fixed_index;
        out.exit_radius = label.rho;

        // After the exit the orbit must stay on the sphere of radius mu
        // around that fixed point.
        const PAdicNumber& target = fps.fixed_points.roots[static_cast<std::size_t>(label.fixed_index)];
        out.invariant_after_exit = true;
        if (!out.exit_radius->upper_bound_only() && !out.exit_radius->is_zero()) {
            for (int k = n + 1; k <= n_steps; ++k) {
                y = step(params, y);
                Radius d = distance(y, target);
                if (d.upper_bound_only() || d != *out.exit_radius) {
                    out.invariant_after_exit = false;
                    break;
                }
            }
        }
        return out;
    }
    return out; // still equidistant after n_steps; no claim beyond horizon
}

} // namespace padicdyn
