#pragma once

#include <concepts>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace rgvcs {

// Deterministic counter-based generator (splitmix64 core). Every
// (seed, stream) pair yields its own statistically independent sequence, so
// per-pixel streams can be evaluated in any order and from any thread while
// producing identical output.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : state_(derive(seed, stream)) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform bit.
    std::uint8_t bit() noexcept { return static_cast<std::uint8_t>(next_u64() >> 63); }

    // Unbiased uniform integer in [0, bound). bound == 1 consumes no draw.
    std::uint32_t uniform_below(std::uint32_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
        if (bound == 1) return 0;
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() / bound * bound;
        std::uint64_t r = next_u64();
        while (r >= limit) r = next_u64();
        return static_cast<std::uint32_t>(r % bound);
    }

private:
    static std::uint64_t mix(std::uint64_t x) noexcept {
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) noexcept {
        // Two mixing rounds keep nearby (seed, stream) pairs decorrelated.
        std::uint64_t a = mix(seed + 0x8E9FBC2C1A3B5D77ULL);
        std::uint64_t b = mix(stream + 0xD1B54A32D192ED03ULL);
        return mix(a ^ (b * 0x9E3779B97F4A7C15ULL));
    }

    std::uint64_t state_;
};

// Anything the bit-level sharing primitives need from a randomness provider.
// RandomSource is the production model; tests may substitute scripted sources.
template <typename R>
concept UniformSource = requires(R& r, std::uint32_t bound) {
    { r.bit() } -> std::convertible_to<std::uint8_t>;
    { r.uniform_below(bound) } -> std::convertible_to<std::uint32_t>;
};

}  // namespace rgvcs
