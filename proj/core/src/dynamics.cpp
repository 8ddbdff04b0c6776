#include "padicdyn/dynamics.hpp"

#include <algorithm>

namespace padicdyn {

const char* to_string(StabilityCharacter c) {
    return c == StabilityCharacter::Attracting ? "ATTRACTING" : "INDIFFERENT";
}

PAdicNumber step(const MapParams& params, const PAdicNumber& x) {
    const PAdicNumber& a = params.require_exact_quadratic();
    if (!x.is_nonzero()) throw domain_error("the map is undefined at 0");
    return a * pow(x, mpz_class(-2));
}

namespace {

mpz_class minus_two_to(int n) {
    mpz_class e;
    mpz_class base = -2;
    mpz_pow_ui(e.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
    return e;
}

} // namespace

PAdicNumber iterate_closed_form(const MapParams& params, const PAdicNumber& x, int n) {
    const PAdicNumber& a = params.require_exact_quadratic();
    if (!x.is_nonzero()) throw domain_error("the map is undefined at 0");
    if (n < 0) throw domain_error("iteration count must be >= 0");
    if (n == 0) return x;

    mpz_class x_exp = minus_two_to(n);
    mpz_class a_num = 1 - x_exp;
    if (a_num % 3 != 0) {
        throw internal_error("(1 - (-2)^n) not divisible by 3; exponent arithmetic is broken");
    }
    mpz_class a_exp = a_num / 3;
    return pow(a, a_exp) * pow(x, x_exp);
}

namespace {

FixedPointReport fixedpoint_report_skeleton(const MapParams& params) {
    const mpz_class& p = params.prime();
    FixedPointReport rep{
        RootSet{EquationTag::CubeRootOfA, "x^3 = a", {}, 0},
        false,
        "",
        std::nullopt,
        Radius::from_exponent(p, p == 2 ? 1 : 0),
        p == 2 ? StabilityCharacter::Attracting : StabilityCharacter::Indifferent,
        Radius::from_exponent(p, make_rational(params.a_valuation(), 3)),
    };
    if (p == 3) {
        // Fixed points pairwise at distance alpha * |3|^(1/2): exponent
        // v(a)/3 + 1/2, realized only in a ramified extension.
        rep.pairwise_distance = Radius::from_exponent(
            p, make_rational(params.a_valuation(), 3) + make_rational(1, 2));
    }
    return rep;
}

} // namespace

FixedPointReport fixed_point_analysis(const MapParams& params) {
    if (params.q() != 2) throw domain_error("fixed-point analysis is defined for q = 2");
    FixedPointReport rep = fixedpoint_report_skeleton(params);

    if (!params.a_exact()) {
        rep.unavailable_reason = "coefficient given by valuation only";
        return rep;
    }
    const PAdicNumber& a = *params.a_exact();
    rep.multiplier = PAdicNumber::from_rational(-2, 1, a.context());
    try {
        rep.fixed_points = cube_roots(a);
    } catch (const not_liftable_error& e) {
        rep.unavailable_reason = e.what();
        return rep;
    }
    if (rep.fixed_points.roots.empty()) {
        rep.unavailable_reason = "a has no cube root in Q_p";
        return rep;
    }
    rep.exact_roots_available = true;

    // Cross-check the distance law on the exact roots.
    const Radius alpha = params.invariant_radius();
    for (std::size_t i = 0; i < rep.fixed_points.roots.size(); ++i) {
        for (std::size_t j = i + 1; j < rep.fixed_points.roots.size(); ++j) {
            Radius d = distance(rep.fixed_points.roots[i], rep.fixed_points.roots[j]);
            if (d.upper_bound_only() || d != alpha) {
                throw internal_error("fixed-point distance deviates from alpha");
            }
        }
    }
    return rep;
}

PeriodicSearchResult find_periodic(const MapParams& params, int m) {
    if (params.q() != 2) throw domain_error("periodic search is defined for q = 2");
    if (m < 1) throw domain_error("period m must be >= 1");
    if (m == 2) {
        throw period_rejected_error(
            "period m = 2 admits no solutions except the fixed points; "
            "2-periodic orbits do not exist for this map");
    }

    const mpz_class& p = params.prime();
    const bool even = (m % 2 == 0);
    mpz_class two_m;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, static_cast<unsigned long>(m));
    const mpz_class unity_order = even ? mpz_class(two_m - 1) : mpz_class(two_m + 1);
    const std::string equation =
        even ? ("x = a^(1/3) * t, t^" + unity_order.get_str() + " = 1")
             : ("x = a^(1/3) / t, t^" + unity_order.get_str() + " = 1");

    PeriodicSearchResult res{
        m,
        even,
        unity_order,
        RootSet{EquationTag::RootOfUnity, equation, {}, 0},
        {},
        {},
        Radius::from_exponent(p, p == 2 ? m : 0),
        p == 2 ? StabilityCharacter::Attracting : StabilityCharacter::Indifferent,
        false,
        "",
    };

    if (!params.a_exact()) {
        res.note = "coefficient given by valuation only; norm-layer report";
        return res;
    }
    const PAdicNumber& a = *params.a_exact();
    const PAdicContext& ctx = a.context();

    RootSet cube;
    try {
        cube = cube_roots(a);
    } catch (const not_liftable_error& e) {
        res.note = e.what();
        return res;
    }
    if (cube.roots.empty()) {
        res.note = "a has no cube root in Q_p; norm-layer report";
        return res;
    }
    res.exact_available = true;

    // Base point a^(1/3): the canonical (smallest) cube root. The candidate
    // set does not depend on this choice because 3 divides the unity order
    // of the matching parity.
    const PAdicNumber& base = cube.roots.front();

    RootSet unity = roots_of_unity(unity_order, ctx);
    RootSet cube_unity = roots_of_unity(3, ctx);

    for (const PAdicNumber& theta : unity.roots) {
        res.candidates.roots.push_back(even ? base * theta : base / theta);
    }
    std::sort(res.candidates.roots.begin(), res.candidates.roots.end(), canonical_less);
    res.candidates.count = static_cast<long>(res.candidates.roots.size());

    // Admissibility: the unity part of the candidate must be distinct mod p
    // from every cube root of unity. Valuation-0 elements are at distance 1
    // exactly when their residues differ, so this decides the unit-distance
    // condition to all fixed points.
    for (const PAdicNumber& cand : res.candidates.roots) {
        PAdicNumber t = cand / base;
        bool admissible = true;
        for (const PAdicNumber& w : cube_unity.roots) {
            if (t.residue() == w.residue()) {
                admissible = false;
                break;
            }
        }
        if (admissible) res.admissible.push_back(cand);
    }

    // Assemble cycles: orbits of step() over the admissible set. Picking the
    // globally smallest unvisited member first makes every cycle start at
    // its own minimum and orders the cycles deterministically.
    std::vector<bool> used(res.admissible.size(), false);
    auto find_index = [&](const PAdicNumber& v) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < res.admissible.size(); ++i) {
            if (res.admissible[i].identical(v)) return static_cast<std::ptrdiff_t>(i);
        }
        return -1;
    };
    for (std::size_t i = 0; i < res.admissible.size(); ++i) {
        if (used[i]) continue;
        std::vector<PAdicNumber> cycle;
        PAdicNumber y = res.admissible[i];
        while (true) {
            std::ptrdiff_t idx = find_index(y);
            if (idx < 0) throw internal_error("orbit left the admissible set");
            if (used[idx]) {
                if (static_cast<std::size_t>(idx) != i) {
                    throw internal_error("orbit entered a foreign cycle");
                }
                break;
            }
            used[idx] = true;
            cycle.push_back(res.admissible[idx]);
            if (cycle.size() > static_cast<std::size_t>(m)) {
                throw internal_error("orbit failed to close within m steps");
            }
            y = step(params, y);
        }
        if (m % static_cast<int>(cycle.size()) != 0) {
            throw internal_error("cycle length does not divide m");
        }
        res.cycles.push_back(std::move(cycle));
    }

    // Invariant: every admissible point is genuinely m-periodic and sits at
    // distance alpha from every fixed point.
    const Radius alpha = params.invariant_radius();
    for (const PAdicNumber& x : res.admissible) {
        if (!equal_at_precision(iterate_closed_form(params, x, m), x)) {
            throw internal_error("admissible candidate is not m-periodic at precision");
        }
        for (const PAdicNumber& fp : cube.roots) {
            Radius d = distance(x, fp);
            if (d.upper_bound_only() || d != alpha) {
                throw internal_error(
                    "admissible candidate is not at distance alpha from a fixed point");
            }
        }
    }
    return res;
}

Radius cycle_multiplier_norm(int m, const PAdicContext& ctx) {
    if (m < 0) throw domain_error("cycle length must be >= 0");
    return Radius::from_exponent(ctx.prime(), ctx.prime() == 2 ? m : 0);
}

StabilityCharacter cycle_character(const PAdicContext& ctx) {
    return ctx.prime() == 2 ? StabilityCharacter::Attracting : StabilityCharacter::Indifferent;
}

BoundReport attraction_bound(int m, const Radius& r_over_alpha, const PAdicContext& ctx) {
    if (m < 1) throw domain_error("cycle length must be >= 1");
    if (r_over_alpha.is_zero() || r_over_alpha.is_infinite() || r_over_alpha.upper_bound_only()) {
        throw domain_error("r/alpha must be a positive exact radius");
    }
    const mpq_class ratio_exp = r_over_alpha.exponent();
    if (ratio_exp <= 0) {
        throw out_of_regime_error("bound requires r < alpha (ratio exponent must be positive)");
    }
    const mpz_class& p = ctx.prime();
    const BoundKind kind = (p == 2) ? BoundKind::BasinQ : BoundKind::SiegelS;
    const int n_min = (kind == BoundKind::BasinQ) ? 1 : 2;

    mpz_class big_e = minus_two_to(m); // phi(x) ~ x^((-2)^m): derivative coefficients
    mpz_class vprod = 0;               // v_p(prod_{s<n} (E - s))
    mpz_class vfact = 0;               // v_p(n!)
    bool have_best = false;
    mpq_class best;                    // min over eligible n of term exponents
    int cutoff = 0;

    for (int n = 1;; ++n) {
        if (big_e > 0 && mpz_class(n) > big_e) {
            // Polynomial case (even m): all higher derivatives vanish.
            cutoff = n;
            break;
        }
        mpz_class factor = big_e - (n - 1);
        if (factor == 0) throw internal_error("zero factor slipped past the degree cap");
        mpz_class tmp;
        vprod += static_cast<long>(
            mpz_remove(tmp.get_mpz_t(), factor.get_mpz_t(), p.get_mpz_t()));
        vfact += static_cast<long>(
            mpz_remove(tmp.get_mpz_t(), mpz_class(n).get_mpz_t(), p.get_mpz_t()));

        mpq_class coeff_val(vprod - vfact); // >= 0: the coefficient is an integer
        if (coeff_val < 0) throw internal_error("coefficient valuation went negative");
        mpq_class term_exp = coeff_val + mpq_class(n - 1) * ratio_exp;

        if (n >= n_min && (!have_best || term_exp < best)) {
            best = term_exp;
            have_best = true;
        }
        // Once the geometric factor alone exceeds the achieved max, no later
        // term can lower the exponent below it.
        if (have_best && mpq_class(n) * ratio_exp > best) {
            cutoff = n + 1;
            break;
        }
    }

    if (!have_best) throw internal_error("no bound term was evaluated");
    return BoundReport{
        m,
        r_over_alpha,
        kind,
        Radius::from_exponent(p, best),
        cycle_multiplier_norm(m, ctx),
        best > 0, // Q < 1, or S < |phi'|_p = 1 for odd p
        cutoff,
    };
}

} // namespace padicdyn
