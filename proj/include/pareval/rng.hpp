#ifndef PAREVAL_RNG_HPP
#define PAREVAL_RNG_HPP

#include <cstdint>

namespace pareval {

/// splitmix64: portable 64-bit mixing generator. Used instead of the
/// standard distributions so that seeded output is byte-identical across
/// platforms and standard-library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace pareval

#endif
