#pragma once

#include <cstdint>
#include <numbers>

#include <cmath>

namespace loewner {

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter) through the SplitMix64 finalizer, so output
/// is bitwise reproducible across platforms and safe to shard across
/// threads by stream.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))) {}

    /// Uniform in (0, 1).
    double uniform() {
        std::uint64_t u = mix(key_ + 0x9e3779b97f4a7c15ull * ++ctr_);
        return (double(u >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; draws are consumed in pairs.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace loewner
