#pragma once

#include <cstdint>

namespace holes {

/// SplitMix64 (Steele, Lea and Flood). Small, seedable and splittable; the
/// output stream depends only on the seed.
class SplitMix64
{
public:
    static constexpr const char* algorithm = "splitmix64";

    explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        const std::uint64_t limit = -bound % bound;
        std::uint64_t x = next();
        while (x < limit)
            x = next();
        return x % bound;
    }

    /// An independent generator seeded from this stream.
    SplitMix64 split() noexcept { return SplitMix64(next()); }

    // UniformRandomBitGenerator interface
    using result_type = std::uint64_t;
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    result_type operator()() noexcept { return next(); }

private:
    std::uint64_t state_;
};

} // namespace holes
