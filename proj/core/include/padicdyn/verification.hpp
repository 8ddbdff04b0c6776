#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicdyn/dynamics.hpp"
#include "padicdyn/rng.hpp"

namespace padicdyn {

/// Symbolic location of a point relative to the invariant sphere and, on the
/// sphere, relative to the fixed points: within distance rho < alpha of
/// exactly one fixed point, or equidistant (at distance alpha) from all of
/// them. Undecided is a first-class outcome reserved for the case where
/// cancellation exhausts the known digits; it is counted separately and
/// never passes silently as a confirmation.
struct RegionLabel {
    enum class Inner { None, NearFixed, Equidistant, Undecided };

    OuterRegion outer;
    Inner inner = Inner::None;
    int fixed_index = -1;               // NearFixed: index into the fixed-point set
    std::optional<Radius> rho;          // NearFixed: the exact distance (may be a bound)
};

/// Classify x. Requires the exact fixed points (report from
/// fixed_point_analysis with exact_roots_available).
RegionLabel label_point(const MapParams& params, const PAdicNumber& x,
                        const FixedPointReport& fps);

struct Counterexample {
    int sample = -1;
    int step = -1;
    std::string what;
};

/// Machine-checkable outcome of one theorem suite. Reproducible bit-for-bit
/// from (seed, parameters): the sampler is the named deterministic stream
/// and each sample derives its own sub-seed, so aggregation order cannot
/// matter.
struct VerificationReport {
    std::string theorem;
    std::uint64_t seed = 0;
    int samples = 0;
    int n_steps = 0;
    std::string rng = SplitMix64::name;
    std::vector<Counterexample> failures;
    int undecided = 0;
    bool pass = false;
    std::vector<std::string> observations;
};

/// Uniform unit of Z_p at full precision from the named stream.
mpz_class random_unit(const PAdicContext& ctx, SplitMix64& rng);

/// A point at distance exactly p^-e from `center`: center + p^e * unit.
PAdicNumber sample_at_distance(const PAdicNumber& center, const mpz_class& e, SplitMix64& rng);

/// Sphere invariance around fixed point `fixed_index` at radius rho < alpha:
/// for p >= 3 every iterate must stay at distance exactly rho; for p = 2 the
/// distance must be exactly 2^-n * rho at step n. rho must be an integral
/// power of p (sampling_unsupported_error otherwise). Counterexamples are
/// recorded per (sample, step) with the expected and observed radii.
VerificationReport check_sphere_invariance(const MapParams& params, int fixed_index,
                                           const Radius& rho, int samples, int n_steps,
                                           std::uint64_t seed);

/// Basin of the fixed point at p = 2: sampled points of the open unit-
/// distance ball around the root converge, the distance halving exactly at
/// every step, until it crosses the p^-(N/2) threshold. Sampled starting
/// radii are 2^-2 .. 2^-10: from distance alpha/2 the first step provably
/// contracts by more than one halving, so the exact per-step rate is only
/// asserted strictly inside. Q_2 carries no point equidistant from the
/// fixed point (units differ by an even number), which the report records
/// as an observation.
VerificationReport check_basin_p2(const MapParams& params, int samples, int n_steps,
                                  std::uint64_t seed);

/// Siegel behavior at p >= 3: spheres of radius p^-1, p^-2, p^-3 around each
/// fixed point are each invariant across n_steps.
VerificationReport check_siegel(const MapParams& params, int samples, int n_steps,
                                std::uint64_t seed);

/// Followed trajectory of a point equidistant from all fixed points: either
/// it exits at some step into a sphere of radius mu < alpha around one fixed
/// point and provably stays there (the sphere is invariant), or it is still
/// equidistant after n_steps. No claim is ever made beyond the horizon.
struct EquidistantOutcome {
    bool exited = false;
    int exit_step = -1;
    int fixed_index = -1;
    std::optional<Radius> exit_radius; // mu < alpha
    bool invariant_after_exit = false;
    int steps_checked = 0;
};

EquidistantOutcome track_equidistant(const MapParams& params, const PAdicNumber& x, int n_steps);

/// Partition of the invariant sphere: every sampled point receives exactly
/// one inner label, no label is undecidable, and a point near one fixed
/// point is at distance exactly alpha from the others.
VerificationReport check_partition(const MapParams& params, int samples, std::uint64_t seed);

/// Sampled equidistant points either exit into a sphere around a fixed
/// point that then never drifts, or stay equidistant to the horizon. Exits
/// are cross-checked through the closed-form iterate.
VerificationReport check_equidistant_exits(const MapParams& params, int samples, int n_steps,
                                           std::uint64_t seed);

/// Norm-layer exclusion of periodic radii off the invariant sphere, over
/// random (v(a), q, e0 != alpha exponent, m).
VerificationReport check_off_sphere_exclusion(const mpz_class& prime, int samples, int max_m,
                                              std::uint64_t seed);

/// The standard battery behind `verify`: sphere invariance and rate suites,
/// basin and Siegel checks, the sphere partition, equidistant-exit tracking
/// and the off-sphere exclusion, at fixed parameter choices. Deterministic
/// in (seed, samples, n_steps, precision).
std::vector<VerificationReport> default_verification_suite(std::uint64_t seed, int samples,
                                                           int n_steps, int precision);

const char* to_string(RegionLabel::Inner inner);

} // namespace padicdyn
