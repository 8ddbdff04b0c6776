#include "padicdyn/json_io.hpp"

namespace padicdyn {

json json_int(const mpz_class& v) {
    if (v.fits_slong_p()) return static_cast<long>(v.get_si());
    return v.get_str();
}

json to_json(const Radius& r) {
    json j;
    j["p"] = json_int(r.prime());
    if (r.is_zero()) {
        j["zero"] = true;
        return j;
    }
    if (r.is_infinite()) {
        j["infinite"] = true;
        return j;
    }
    j["num"] = json_int(r.exponent().get_num());
    j["den"] = json_int(r.exponent().get_den());
    if (r.upper_bound_only()) j["upper_bound_only"] = true;
    return j;
}

json to_json(const PAdicNumber& x) {
    json j;
    j["p"] = json_int(x.context().prime());
    switch (x.state()) {
        case PAdicNumber::State::Zero:
            j["zero"] = true;
            break;
        case PAdicNumber::State::ZeroAtPrecision:
            j["zero_at_precision"] = true;
            j["bound_exp"] = json_int(x.norm_bound_exponent());
            break;
        case PAdicNumber::State::NonZero:
            j["v"] = json_int(x.valuation());
            j["unit"] = x.unit().get_str();
            j["digits"] = x.known_digits();
            break;
    }
    return j;
}

json to_json(const RootSet& roots) {
    json j;
    j["equation"] = roots.equation;
    j["g"] = roots.count;
    j["roots"] = json::array();
    for (const PAdicNumber& r : roots.roots) j["roots"].push_back(to_json(r));
    return j;
}

json to_json(const RadiusTrajectory& traj) {
    json j;
    j["initial"] = to_json(traj.initial);
    j["classification"] = to_string(traj.classification);
    j["terms"] = json::array();
    for (const Radius& r : traj.terms) j["terms"].push_back(to_json(r));
    return j;
}

json to_json(const BallMapping& mapping) {
    json j;
    j["image_radius"] = to_json(mapping.image_radius);
    j["image_region"] = to_string(mapping.image_region);
    return j;
}

json to_json(const OffSpherePeriodicWitness& witness) {
    json j;
    j["excluded"] = witness.excluded;
    j["e_start"] = {{"num", json_int(witness.e_start.get_num())},
                    {"den", json_int(witness.e_start.get_den())}};
    j["e_m"] = {{"num", json_int(witness.e_m.get_num())},
                {"den", json_int(witness.e_m.get_den())}};
    return j;
}

json to_json(const FixedPointReport& report) {
    json j;
    j["fixed_points"] = to_json(report.fixed_points);
    j["exact_roots_available"] = report.exact_roots_available;
    if (!report.exact_roots_available) j["unavailable_reason"] = report.unavailable_reason;
    if (report.multiplier) j["multiplier"] = to_json(*report.multiplier);
    j["multiplier_norm"] = to_json(report.multiplier_norm);
    j["character"] = to_string(report.character);
    j["pairwise_distance"] = to_json(report.pairwise_distance);
    return j;
}

json to_json(const PeriodicSearchResult& result) {
    json j;
    j["m"] = result.m;
    j["parity"] = result.even ? "even" : "odd";
    j["unity_order"] = json_int(result.unity_order);
    j["candidates"] = to_json(result.candidates);
    j["admissible"] = json::array();
    for (const PAdicNumber& x : result.admissible) j["admissible"].push_back(to_json(x));
    j["cycles"] = json::array();
    for (const auto& cycle : result.cycles) {
        json c = json::array();
        for (const PAdicNumber& x : cycle) c.push_back(to_json(x));
        j["cycles"].push_back(std::move(c));
    }
    j["multiplier_norm"] = to_json(result.multiplier_norm);
    j["character"] = to_string(result.character);
    j["exact_available"] = result.exact_available;
    if (!result.note.empty()) j["note"] = result.note;
    return j;
}

json to_json(const BoundReport& report) {
    json j;
    j["m"] = report.m;
    j["ratio"] = to_json(report.ratio);
    j["kind"] = report.kind == BoundKind::BasinQ ? "Q" : "S";
    j["value"] = to_json(report.value);
    j["derivative_norm"] = to_json(report.derivative_norm);
    j["satisfied"] = report.satisfied;
    j["n_cutoff"] = report.n_cutoff;
    return j;
}

json to_json(const RegionLabel& label) {
    json j;
    j["outer"] = to_string(label.outer);
    if (label.outer == OuterRegion::OnSphere) {
        j["inner"] = to_string(label.inner);
        if (label.inner == RegionLabel::Inner::NearFixed) {
            j["fixed_index"] = label.fixed_index;
            if (label.rho) j["rho"] = to_json(*label.rho);
        }
    }
    return j;
}

json to_json(const VerificationReport& report) {
    json j;
    j["theorem"] = report.theorem;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    j["n_steps"] = report.n_steps;
    j["rng"] = report.rng;
    j["failures"] = json::array();
    for (const Counterexample& c : report.failures) {
        j["failures"].push_back({{"sample", c.sample}, {"step", c.step}, {"what", c.what}});
    }
    j["undecided"] = report.undecided;
    j["pass"] = report.pass;
    j["observations"] = report.observations;
    return j;
}

json to_json(const EquidistantOutcome& outcome) {
    json j;
    j["exited"] = outcome.exited;
    if (outcome.exited) {
        j["exit_step"] = outcome.exit_step;
        j["fixed_index"] = outcome.fixed_index;
        if (outcome.exit_radius) j["exit_radius"] = to_json(*outcome.exit_radius);
        j["invariant_after_exit"] = outcome.invariant_after_exit;
    }
    j["steps_checked"] = outcome.steps_checked;
    return j;
}

} // namespace padicdyn
