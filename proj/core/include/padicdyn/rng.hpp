#pragma once

#include <cstdint>

namespace padicdyn {

/// Deterministic 64-bit generator (SplitMix64). Reports that embed a seed
/// name this stream "splitmix64-v1"; the sequence is fixed for all time so
/// that seeded runs stay byte-for-byte reproducible across platforms.
/// std::uniform_int_distribution is implementation-defined and must not be
/// used anywhere reproducibility matters.
class SplitMix64 {
public:
    static constexpr const char* name = "splitmix64-v1";

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-enough draw in [0, bound). Plain modulo reduction: the bias is
    /// irrelevant for sampling test points and the result is reproducible.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Sub-seed for sample `index`, so per-sample work can run in any order
    /// (or in parallel) without changing the aggregate report.
    static std::uint64_t subseed(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

} // namespace padicdyn
