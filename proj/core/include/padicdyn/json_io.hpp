#pragma once

#include <nlohmann/json.hpp>

#include "padicdyn/dynamics.hpp"
#include "padicdyn/norm_geometry.hpp"
#include "padicdyn/verification.hpp"

namespace padicdyn {

/// All emitted JSON uses insertion-ordered objects and exact integer or
/// string payloads (never floating point), so identical inputs produce
/// byte-identical documents.
using json = nlohmann::ordered_json;

/// Big integers render as JSON numbers when they fit in 64 bits and as
/// decimal strings beyond that.
json json_int(const mpz_class& v);

json to_json(const Radius& r);
json to_json(const PAdicNumber& x);
json to_json(const RootSet& roots);
json to_json(const RadiusTrajectory& traj);
json to_json(const BallMapping& mapping);
json to_json(const OffSpherePeriodicWitness& witness);
json to_json(const FixedPointReport& report);
json to_json(const PeriodicSearchResult& result);
json to_json(const BoundReport& report);
json to_json(const RegionLabel& label);
json to_json(const VerificationReport& report);
json to_json(const EquidistantOutcome& outcome);

} // namespace padicdyn
