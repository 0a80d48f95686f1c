#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rgvcs/random_source.hpp"

namespace rgvcs {

// A share bit: 0 = transparent, 1 = opaque.
using Bit = std::uint8_t;

enum class Variant { chen_tsao, wu_sun, yan, shyu, grouped };

const char* variant_name(Variant v);
Variant variant_from_name(std::string_view name);  // throws std::invalid_argument

// Threshold parameters. For the grouped variant the shares are organized in
// groups of n_prime; traditional variants ignore n_prime (treated as n).
struct SchemeParams {
    int k = 2;
    int n_prime = 2;
    int n = 2;
    Variant variant = Variant::grouped;

    static SchemeParams traditional(Variant v, int k, int n);
    static SchemeParams grouped(int k, int n_prime, int n);

    // Effective group length: n_prime for grouped, n otherwise.
    int group_len() const { return variant == Variant::grouped ? n_prime : n; }

    void validate() const;  // throws std::invalid_argument

    bool operator==(const SchemeParams&) const = default;
};

// Group structure of the n share positions. Groups are complete (size n')
// except possibly the trailing one.
struct BitGroupLayout {
    int group_count = 1;
    std::vector<int> sizes;

    static BitGroupLayout of(const SchemeParams& params);

    // 1-based share index -> 1-based group index.
    int group_of(int share_index) const;

    bool operator==(const BitGroupLayout&) const = default;
};

// Pixel-wise OR, the stacking operation of the recovery phase.
inline Bit stack_bits(std::span<const Bit> bits) {
    if (bits.empty()) throw std::invalid_argument("stack_bits: empty bit list");
    Bit acc = 0;
    for (Bit b : bits) acc |= b;
    return acc;
}

// Unbiased Fisher-Yates shuffle driven by a UniformSource.
template <typename T, UniformSource Rng>
void shuffle_values(std::vector<T>& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::uint32_t j = rng.uniform_below(static_cast<std::uint32_t>(i));
        std::swap(values[i - 1], values[j]);
    }
}

// k-out-of-k sharing of a single secret bit: k-1 uniform bits plus a parity
// bit so that the XOR of all k bits equals s.
template <UniformSource Rng>
std::vector<Bit> share_pixel_kk(Bit s, int k, Rng& rng) {
    if (s > 1) throw std::invalid_argument("share_pixel_kk: secret bit must be 0 or 1");
    if (k < 2) throw std::invalid_argument("share_pixel_kk: k must be at least 2");
    std::vector<Bit> bits(static_cast<std::size_t>(k));
    Bit parity = s;
    for (int i = 0; i + 1 < k; ++i) {
        bits[static_cast<std::size_t>(i)] = rng.bit();
        parity ^= bits[static_cast<std::size_t>(i)];
    }
    bits[static_cast<std::size_t>(k - 1)] = parity;
    return bits;
}

// Extends the k base bits to n bits according to the variant's assignment
// rule. Returns the full pre-permutation sequence (first k entries = base).
template <UniformSource Rng>
std::vector<Bit> assign_remaining_bits(std::span<const Bit> base, Variant variant, int n,
                                       Rng& rng) {
    const int k = static_cast<int>(base.size());
    if (k < 2 || n < k) throw std::invalid_argument("assign_remaining_bits: need 2 <= k <= n");
    std::vector<Bit> bits(base.begin(), base.end());
    bits.resize(static_cast<std::size_t>(n));
    switch (variant) {
        case Variant::chen_tsao:
            for (int j = k + 1; j <= n; ++j) bits[static_cast<std::size_t>(j - 1)] = rng.bit();
            break;
        case Variant::wu_sun:
            for (int j = k + 1; j <= n; ++j)
                bits[static_cast<std::size_t>(j - 1)] = base[static_cast<std::size_t>(k - 1)];
            break;
        case Variant::yan:
            for (int j = k + 1; j <= n; ++j)
                bits[static_cast<std::size_t>(j - 1)] = bits[static_cast<std::size_t>(j - k - 1)];
            break;
        case Variant::shyu: {
            const int cyclic_end = n / k * k;
            for (int j = k + 1; j <= cyclic_end; ++j)
                bits[static_cast<std::size_t>(j - 1)] = bits[static_cast<std::size_t>(j - k - 1)];
            // Tail positions draw distinct base bits without replacement; the
            // first tail draw sees the full base set.
            std::vector<int> pool(static_cast<std::size_t>(k));
            std::iota(pool.begin(), pool.end(), 0);
            for (int j = cyclic_end + 1; j <= n; ++j) {
                const std::uint32_t pick =
                    rng.uniform_below(static_cast<std::uint32_t>(pool.size()));
                bits[static_cast<std::size_t>(j - 1)] = base[static_cast<std::size_t>(pool[pick])];
                pool.erase(pool.begin() + pick);
            }
            break;
        }
        case Variant::grouped:
            throw std::invalid_argument("assign_remaining_bits: grouped is not a bit-assignment rule");
    }
    return bits;
}

// Traditional (k,n) sharing of one secret bit: base bits, variant-specific
// remaining bits, then one uniform permutation of all n bits.
template <UniformSource Rng>
std::vector<Bit> share_pixel_traditional(Bit s, const SchemeParams& params, Rng& rng) {
    params.validate();
    if (params.variant == Variant::grouped)
        throw std::invalid_argument("share_pixel_traditional: variant must be a traditional scheme");
    const std::vector<Bit> base = share_pixel_kk(s, params.k, rng);
    std::vector<Bit> bits = assign_remaining_bits(std::span<const Bit>(base), params.variant,
                                                  params.n, rng);
    shuffle_values(bits, rng);
    return bits;
}

// Grouped sharing result plus the 1-based position in the initial group each
// output bit was copied from (position i for i <= n'). Tests use the trace to
// check the per-group without-replacement structure.
struct GroupedPixelShare {
    std::vector<Bit> bits;
    std::vector<int> source_pos;
};

// Grouped (k,n) sharing of one secret bit. The initial group of n' bits comes
// from the (s,k,n') scheme (plain k-out-of-k when n' == k, else the `inner`
// traditional variant); every later group refills from the initial group
// without replacement, resetting at each group boundary. No final shuffle.
template <UniformSource Rng>
GroupedPixelShare share_pixel_grouped_traced(Bit s, const SchemeParams& params, Rng& rng,
                                             Variant inner = Variant::yan) {
    params.validate();
    if (params.variant != Variant::grouped)
        throw std::invalid_argument("share_pixel_grouped: params.variant must be grouped");
    if (inner == Variant::grouped)
        throw std::invalid_argument("share_pixel_grouped: inner scheme must be a traditional variant");
    const int n_prime = params.n_prime;
    GroupedPixelShare out;
    out.bits = (n_prime == params.k)
                   ? share_pixel_kk(s, params.k, rng)
                   : share_pixel_traditional(
                         s, SchemeParams::traditional(inner, params.k, n_prime), rng);
    out.bits.resize(static_cast<std::size_t>(params.n));
    out.source_pos.resize(static_cast<std::size_t>(params.n));
    std::iota(out.source_pos.begin(), out.source_pos.begin() + n_prime, 1);

    std::vector<int> pool;
    for (int t = n_prime + 1; t <= params.n; ++t) {
        if ((t - 1) % n_prime == 0) {
            pool.resize(static_cast<std::size_t>(n_prime));
            std::iota(pool.begin(), pool.end(), 1);
        }
        const std::uint32_t pick = rng.uniform_below(static_cast<std::uint32_t>(pool.size()));
        const int p = pool[pick];
        pool.erase(pool.begin() + pick);
        out.bits[static_cast<std::size_t>(t - 1)] = out.bits[static_cast<std::size_t>(p - 1)];
        out.source_pos[static_cast<std::size_t>(t - 1)] = p;
    }
    return out;
}

template <UniformSource Rng>
std::vector<Bit> share_pixel_grouped(Bit s, const SchemeParams& params, Rng& rng,
                                     Variant inner = Variant::yan) {
    return share_pixel_grouped_traced(s, params, rng, inner).bits;
}

// Dispatch on the configured variant.
template <UniformSource Rng>
std::vector<Bit> share_pixel(Bit s, const SchemeParams& params, Rng& rng) {
    return params.variant == Variant::grouped ? share_pixel_grouped(s, params, rng)
                                              : share_pixel_traditional(s, params, rng);
}

}  // namespace rgvcs
