#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace semdis {

/// Deterministic random source used by every seeded operation in the
/// library. The engine is std::mt19937_64 (bit-exact across platforms);
/// the distributions are implemented here rather than taken from
/// <random> so that sequences do not depend on the standard library
/// vendor.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, bound) via rejection sampling.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x = gen_();
        while (x >= limit) x = gen_();
        return x % bound;
    }

    /// Standard normal via Box-Muller; draws two uniforms per pair.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    /// Derives an independent child seed (splitmix64 finalizer over the
    /// base seed and stream index). Used to fan one --seed out to many
    /// generated series.
    static std::uint64_t derive(std::uint64_t base, std::uint64_t stream) {
        std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace semdis
