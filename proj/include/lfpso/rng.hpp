#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "lfpso/geometry.hpp"

namespace lfpso {

/// Seeded random stream with a pinned draw sequence.
///
/// The raw generator is std::mt19937_64, whose output sequence for a given
/// seed is fully specified by the C++ standard, so identical seeds produce
/// identical u64 sequences on every platform. Uniform doubles take the top
/// 53 bits of one u64 (value in [0,1)); normals come from one Box-Muller
/// pair per two uniforms, with the second variate cached. Child streams are
/// derived from (root seed, stream index) through splitmix64 so per-robot
/// streams stay independent of robot count and processing order.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    static std::uint64_t splitmix64(std::uint64_t x) noexcept {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    /// Stream `index` derived from `root`. Index 0 is the environment
    /// stream, robot i uses index i + 1.
    static RngStream child(std::uint64_t root, std::uint64_t index) {
        return RngStream(splitmix64(root + 0x632BE59BD9B4E019ULL * (index + 1)));
    }

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; consumes two uniforms per pair.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 == 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(kTwoPi * u2);
        has_cached_ = true;
        return r * std::cos(kTwoPi * u2);
    }

    /// Fair coin from one u64 draw.
    bool coin() { return (next_u64() & 1ULL) != 0; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace lfpso
