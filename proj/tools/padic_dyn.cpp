// padic-dyn: command-line front end for the exact p-adic dynamics library.
// Subcommands map one-to-one onto library operations (see README for the
// traceability table). All output goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 domain error, 2 verification failure, 3 usage.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "padicdyn/json_io.hpp"
#include "padicdyn/verification.hpp"

using namespace padicdyn;

namespace {

struct Options {
    std::string prime;
    int precision = 64;
    std::string a;
    int q = 2;
    int m = 0;
    std::string radius;
    std::string x;
    std::string k;
    int steps = -1;
    int samples = 20;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string suite;
};

mpz_class parse_mpz(const std::string& text, const std::string& what) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(what, "not an integer: " + text);
    }
}

mpq_class parse_mpq(const std::string& text, const std::string& what) {
    try {
        mpq_class v(text);
        if (v.get_den() == 0) {
            throw domain_error("zero denominator in " + what + ": " + text);
        }
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError(what, "not a rational num/den: " + text);
    }
}

mpz_class require_prime(const Options& opt) {
    if (opt.prime.empty()) throw CLI::ValidationError("--prime", "required for this subcommand");
    return parse_mpz(opt.prime, "--prime");
}

PAdicContext make_context(const Options& opt) {
    return PAdicContext(require_prime(opt), opt.precision);
}

// The coefficient: "n/m" (exact) or "v:k" (valuation-only).
MapParams parse_map_params(const Options& opt, const PAdicContext& ctx) {
    if (opt.a.empty()) throw CLI::ValidationError("--a", "required for this subcommand");
    if (opt.a.rfind("v:", 0) == 0) {
        return MapParams(ctx.prime(), parse_mpz(opt.a.substr(2), "--a"), opt.q);
    }
    mpq_class a = parse_mpq(opt.a, "--a");
    return MapParams(PAdicNumber::from_rational(a.get_num(), a.get_den(), ctx), opt.q);
}

Radius parse_radius(const Options& opt, const mpz_class& prime) {
    if (opt.radius.empty()) {
        throw CLI::ValidationError("--radius", "required for this subcommand");
    }
    return Radius::from_exponent(prime, parse_mpq(opt.radius, "--radius"));
}

PAdicNumber parse_x(const Options& opt, const PAdicContext& ctx) {
    if (opt.x.empty()) throw CLI::ValidationError("--x", "required for this subcommand");
    mpq_class v = parse_mpq(opt.x, "--x");
    return PAdicNumber::from_rational(v.get_num(), v.get_den(), ctx);
}

void emit(const json& j, const Options& opt) {
    if (opt.format == "pretty") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

void require_json(const Options& opt, const std::string& cmd) {
    if (opt.format == "csv") {
        throw CLI::ValidationError("--format", "csv is not defined for " + cmd);
    }
}

int cmd_norm(const Options& opt) {
    require_json(opt, "norm");
    if (!opt.a.empty() && opt.a.rfind("v:", 0) == 0) {
        mpz_class p = require_prime(opt);
        Radius r = Radius::from_exponent(p, mpq_class(parse_mpz(opt.a.substr(2), "--a")));
        emit(json{{"norm", to_json(r)}}, opt);
        return 0;
    }
    PAdicContext ctx = make_context(opt);
    if (opt.a.empty()) throw CLI::ValidationError("--a", "required for norm");
    mpq_class v = parse_mpq(opt.a, "--a");
    PAdicNumber x = PAdicNumber::from_rational(v.get_num(), v.get_den(), ctx);
    emit(json{{"value", to_json(x)}, {"norm", to_json(x.norm())}}, opt);
    return 0;
}

int cmd_roots(const Options& opt) {
    require_json(opt, "roots");
    PAdicContext ctx = make_context(opt);
    RootSet set = [&] {
        if (!opt.k.empty()) return roots_of_unity(parse_mpz(opt.k, "--k"), ctx);
        MapParams params = parse_map_params(opt, ctx);
        if (!params.a_exact()) {
            throw domain_error("cube roots need the coefficient exactly, not only |a|_p");
        }
        return cube_roots(*params.a_exact());
    }();
    emit(to_json(set), opt);
    return 0;
}

int cmd_fixed_points(const Options& opt) {
    require_json(opt, "fixed-points");
    PAdicContext ctx = make_context(opt);
    MapParams params = parse_map_params(opt, ctx);
    emit(to_json(fixed_point_analysis(params)), opt);
    return 0;
}

int cmd_iterate(const Options& opt) {
    PAdicContext ctx = make_context(opt);
    MapParams params = parse_map_params(opt, ctx);
    int n = opt.steps < 0 ? 10 : opt.steps;
    if (n < 1) throw CLI::ValidationError("--steps", "must be >= 1");

    if (!opt.x.empty()) {
        // Exact orbit via the closed form (tested equal to stepping).
        PAdicNumber x = parse_x(opt, ctx);
        if (opt.format == "csv") {
            RadiusTrajectory traj = radius_iterate(params, x.norm(), n);
            std::cout << trajectory_csv(traj);
            return 0;
        }
        json terms = json::array();
        for (int i = 1; i <= n; ++i) {
            PAdicNumber y = iterate_closed_form(params, x, i);
            terms.push_back(
                {{"n", i}, {"value", to_json(y)}, {"norm", to_json(y.norm())}});
        }
        emit(json{{"start", to_json(x)}, {"terms", terms}}, opt);
        return 0;
    }

    RadiusTrajectory traj = radius_iterate(params, parse_radius(opt, ctx.prime()), n);
    if (opt.format == "csv") {
        std::cout << trajectory_csv(traj);
        return 0;
    }
    emit(to_json(traj), opt);
    return 0;
}

int cmd_classify(const Options& opt) {
    require_json(opt, "classify");
    PAdicContext ctx = make_context(opt);
    MapParams params = parse_map_params(opt, ctx);

    if (!opt.x.empty()) {
        PAdicNumber x = parse_x(opt, ctx);
        FixedPointReport fps = fixed_point_analysis(params);
        emit(to_json(label_point(params, x, fps)), opt);
        return 0;
    }

    Radius r = parse_radius(opt, ctx.prime());
    OuterRegion region = classify_start(params, r);
    BallMapping image = ball_mapping_check(params, r);
    int n = opt.steps < 0 ? 0 : opt.steps;
    RadiusTrajectory traj = radius_iterate(params, r, n > 0 ? n : 1);

    json j;
    j["region"] = to_string(region);
    j["classification"] = to_string(traj.classification);
    switch (traj.classification) {
        case TrajectoryClass::InvariantSphere:
            j["even_limit"] = "alpha";
            j["odd_limit"] = "alpha";
            break;
        case TrajectoryClass::CollapseEvenEscapeOdd:
            j["even_limit"] = "zero";
            j["odd_limit"] = "infinity";
            break;
        case TrajectoryClass::EscapeEvenCollapseOdd:
            j["even_limit"] = "infinity";
            j["odd_limit"] = "zero";
            break;
        case TrajectoryClass::PeriodTwo:
            j["even_limit"] = "period-2";
            j["odd_limit"] = "period-2";
            break;
    }
    j["alpha"] = to_json(params.invariant_radius());
    j["image"] = to_json(image);
    if (n > 0) j["trajectory"] = to_json(traj);
    emit(j, opt);
    return 0;
}

int cmd_periodic(const Options& opt) {
    require_json(opt, "periodic");
    PAdicContext ctx = make_context(opt);
    MapParams params = parse_map_params(opt, ctx);
    if (opt.m == 0) throw CLI::ValidationError("--m", "required for periodic");
    emit(to_json(find_periodic(params, opt.m)), opt);
    return 0;
}

int cmd_bound(const Options& opt) {
    require_json(opt, "bound");
    PAdicContext ctx = make_context(opt);
    if (opt.m == 0) throw CLI::ValidationError("--m", "required for bound");
    Radius ratio = parse_radius(opt, ctx.prime());
    emit(to_json(attraction_bound(opt.m, ratio, ctx)), opt);
    return 0;
}

int cmd_verify(const Options& opt) {
    require_json(opt, "verify");
    int steps = opt.steps < 0 ? 50 : opt.steps;
    std::vector<VerificationReport> reports =
        default_verification_suite(opt.seed, opt.samples, steps, opt.precision);

    bool all_pass = true;
    json out = json::array();
    for (const VerificationReport& rep : reports) {
        if (!opt.suite.empty() && rep.theorem != opt.suite) continue;
        out.push_back(to_json(rep));
        all_pass = all_pass && rep.pass;
    }
    if (!opt.suite.empty() && out.empty()) {
        throw CLI::ValidationError("--suite", "unknown suite name: " + opt.suite);
    }
    emit(out, opt);
    return all_pass ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact p-adic dynamics of the map x -> a/x^q"};
    app.fallthrough();
    app.set_config("--config", "", "key=value configuration file; flags take precedence");
    app.require_subcommand(1);

    app.add_option("--prime", opt.prime, "prime p");
    app.add_option("--precision", opt.precision, "unit digits N")
        ->check(CLI::Range(8, 4096))
        ->capture_default_str();
    app.add_option("--a", opt.a, "map coefficient: rational n/m, or v:k for valuation-only");
    app.add_option("--q", opt.q, "map exponent q >= 1")->capture_default_str();
    app.add_option("--m", opt.m, "period / cycle length");
    app.add_option("--radius", opt.radius,
                   "radius as the exponent e of p^-e (integer or num/den)");
    app.add_option("--x", opt.x, "exact starting point, rational n/m");
    app.add_option("--k", opt.k, "root-of-unity order for `roots`");
    app.add_option("--steps", opt.steps, "iteration horizon");
    app.add_option("--samples", opt.samples, "samples per suite")->capture_default_str();
    app.add_option("--seed", opt.seed, "deterministic seed")->envname("PADIC_DYN_SEED");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    app.add_option("--suite", opt.suite, "run only the named verify suite");

    app.add_subcommand("norm", "canonical p-adic value and norm of a rational");
    app.add_subcommand("roots", "cube roots of a, or k-th roots of unity with --k");
    app.add_subcommand("fixed-points", "fixed points, multiplier and distances");
    app.add_subcommand("iterate", "orbit of --x (exact) or radius trajectory of --radius");
    app.add_subcommand("classify", "region and trajectory class of a point or sphere");
    app.add_subcommand("periodic", "m-periodic points from roots of unity");
    app.add_subcommand("bound", "basin/Siegel contraction bound for f^m");
    app.add_subcommand("verify", "run the theorem verification suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (app.got_subcommand("norm")) return cmd_norm(opt);
        if (app.got_subcommand("roots")) return cmd_roots(opt);
        if (app.got_subcommand("fixed-points")) return cmd_fixed_points(opt);
        if (app.got_subcommand("iterate")) return cmd_iterate(opt);
        if (app.got_subcommand("classify")) return cmd_classify(opt);
        if (app.got_subcommand("periodic")) return cmd_periodic(opt);
        if (app.got_subcommand("bound")) return cmd_bound(opt);
        if (app.got_subcommand("verify")) return cmd_verify(opt);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
