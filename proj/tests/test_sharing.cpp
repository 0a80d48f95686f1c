#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "rgvcs/random_source.hpp"
#include "rgvcs/sharing.hpp"
#include "scripted_source.hpp"

using namespace rgvcs;
using rgvcs::testing::ScriptedSource;

namespace {

std::vector<Bit> kk_for_pattern(Bit s, int k, unsigned pattern) {
    ScriptedSource rng;
    for (int i = 0; i + 1 < k; ++i) rng.bits.push_back((pattern >> i) & 1U);
    return share_pixel_kk(s, k, rng);
}

// Identity permutation for a Fisher-Yates shuffle of `size` values.
std::vector<std::uint32_t> identity_shuffle_picks(int size) {
    std::vector<std::uint32_t> picks;
    for (int i = size; i >= 2; --i) picks.push_back(static_cast<std::uint32_t>(i - 1));
    return picks;
}

}  // namespace

TEST_CASE("share_pixel_kk forced patterns") {
    ScriptedSource rng({1}, {});
    CHECK(share_pixel_kk(0, 2, rng) == std::vector<Bit>{1, 1});

    ScriptedSource rng2({0, 1}, {});
    CHECK(share_pixel_kk(1, 3, rng2) == std::vector<Bit>{0, 1, 0});

    RandomSource r(1);
    CHECK_THROWS_AS(share_pixel_kk(0, 1, r), std::invalid_argument);
    CHECK_THROWS_AS(share_pixel_kk(2, 2, r), std::invalid_argument);
}

TEST_CASE("share_pixel_kk xor invariant, exhaustive over forced patterns") {
    for (int k = 2; k <= 6; ++k) {
        for (Bit s : {Bit{0}, Bit{1}}) {
            for (unsigned pattern = 0; pattern < (1U << (k - 1)); ++pattern) {
                const std::vector<Bit> bits = kk_for_pattern(s, k, pattern);
                Bit parity = 0;
                for (Bit b : bits) parity ^= b;
                CHECK(parity == s);
            }
        }
    }
}

TEST_CASE("share_pixel_kk leaks nothing through fewer than k positions") {
    for (int k = 2; k <= 6; ++k) {
        // Every proper subset of positions: identical joint distribution for both secrets.
        for (unsigned subset = 1; subset < (1U << k) - 1; ++subset) {
            std::map<std::vector<Bit>, int> count0, count1;
            for (unsigned pattern = 0; pattern < (1U << (k - 1)); ++pattern) {
                for (Bit s : {Bit{0}, Bit{1}}) {
                    const std::vector<Bit> bits = kk_for_pattern(s, k, pattern);
                    std::vector<Bit> projected;
                    for (int i = 0; i < k; ++i)
                        if (subset & (1U << i)) projected.push_back(bits[static_cast<std::size_t>(i)]);
                    (s == 0 ? count0 : count1)[projected]++;
                }
            }
            CHECK(count0 == count1);
        }
    }
}

TEST_CASE("stacking all k bits reveals the secret, q bits transmit 1/2^q") {
    // s=1: stacking everything is always opaque.
    for (int k = 2; k <= 5; ++k) {
        for (unsigned pattern = 0; pattern < (1U << (k - 1)); ++pattern) {
            const std::vector<Bit> bits = kk_for_pattern(1, k, pattern);
            CHECK(stack_bits(bits) == 1);
        }
    }
    // s=0, k=2: the stack is transparent half the time.
    int transparent = 0;
    const int trials = 100000;
    for (int trial = 0; trial < trials; ++trial) {
        RandomSource rng(42, static_cast<std::uint64_t>(trial));
        transparent += stack_bits(share_pixel_kk(0, 2, rng)) == 0;
    }
    CHECK(static_cast<double>(transparent) / trials == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("stack_bits basics") {
    CHECK(stack_bits(std::vector<Bit>{0, 0, 0}) == 0);
    CHECK(stack_bits(std::vector<Bit>{0, 1, 0}) == 1);
    CHECK_THROWS_AS(stack_bits(std::vector<Bit>{}), std::invalid_argument);
}

TEST_CASE("variant bit assignment before the final permutation") {
    const std::vector<Bit> base{0, 1, 1};  // b1, b2, b3

    SUBCASE("yan cycles the base bits") {
        ScriptedSource rng;
        CHECK(assign_remaining_bits(base, Variant::yan, 5, rng) ==
              std::vector<Bit>{0, 1, 1, 0, 1});
        CHECK(rng.exhausted());
    }
    SUBCASE("wu-sun repeats the last base bit") {
        const std::vector<Bit> base2{0, 1};
        ScriptedSource rng;
        CHECK(assign_remaining_bits(base2, Variant::wu_sun, 4, rng) ==
              std::vector<Bit>{0, 1, 1, 1});
    }
    SUBCASE("chen-tsao draws fresh bits") {
        ScriptedSource rng({1, 0}, {});
        CHECK(assign_remaining_bits(base, Variant::chen_tsao, 5, rng) ==
              std::vector<Bit>{0, 1, 1, 1, 0});
        CHECK(rng.exhausted());
    }
    SUBCASE("shyu: cyclic up to floor(n/k)k, then distinct tail draws") {
        // k=3, n=7: positions 4..6 cycle b1..b3; position 7 draws from the full base.
        ScriptedSource rng({}, {2});
        CHECK(assign_remaining_bits(base, Variant::shyu, 7, rng) ==
              std::vector<Bit>{0, 1, 1, 0, 1, 1, 1});  // position 7 = b3
        CHECK(rng.exhausted());
    }
    SUBCASE("shyu tail never repeats a base index") {
        // k=3, n=5: positions 4 and 5 are distinct draws from {b1,b2,b3}.
        ScriptedSource rng({}, {1, 1});  // b2, then b3 from the remaining {b1,b3}
        CHECK(assign_remaining_bits(base, Variant::shyu, 5, rng) ==
              std::vector<Bit>{0, 1, 1, 1, 1});
        CHECK(rng.exhausted());
    }
    SUBCASE("grouped is not a bit-assignment rule") {
        ScriptedSource rng;
        CHECK_THROWS_AS(assign_remaining_bits(base, Variant::grouped, 5, rng),
                        std::invalid_argument);
    }
}

TEST_CASE("share_pixel_traditional applies a final permutation") {
    // Force base (1,0) for s=1; pre-permutation Yan bits are (1,0,1,0).
    // Shuffle trace: swap(v[3],v[2]) -> (1,0,0,1); swap(v[2],v[0]) -> (0,0,1,1); swap(v[1],v[1]).
    ScriptedSource rng({1}, {2, 0, 1});
    const SchemeParams params = SchemeParams::traditional(Variant::yan, 2, 4);
    CHECK(share_pixel_traditional(1, params, rng) == std::vector<Bit>{0, 0, 1, 1});
    CHECK(rng.exhausted());

    ScriptedSource id({1}, {});
    for (auto p : identity_shuffle_picks(4)) id.picks.push_back(p);
    CHECK(share_pixel_traditional(1, params, id) == std::vector<Bit>{1, 0, 1, 0});
}

TEST_CASE("grouped sharing walks groups without replacement") {
    // k=2, n'=3, n=8, s=1, inner Yan. Base: b1=0, b2=1, b3=b1=0.
    // Shuffle to G1=(b2,b1,b3); G2 picks positions 2,3,1; G3 picks 1,2.
    ScriptedSource rng({0}, {2, 0, /*G2*/ 1, 1, /*G3*/ 0, 0});
    const SchemeParams params = SchemeParams::grouped(2, 3, 8);
    const GroupedPixelShare share = share_pixel_grouped_traced(1, params, rng);
    CHECK(rng.exhausted());
    CHECK(share.bits == std::vector<Bit>{1, 0, 0, /*G2*/ 0, 0, 1, /*G3*/ 1, 0});
    CHECK(share.source_pos == std::vector<int>{1, 2, 3, 2, 3, 1, 1, 2});
}

TEST_CASE("grouped n'=n degenerates to the traditional scheme") {
    const SchemeParams grouped = SchemeParams::grouped(3, 5, 5);
    const SchemeParams yan = SchemeParams::traditional(Variant::yan, 3, 5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RandomSource a(seed), b(seed);
        CHECK(share_pixel_grouped(0, grouped, a) == share_pixel_traditional(0, yan, b));
    }
}

TEST_CASE("grouped groups select each initial position exactly once") {
    const SchemeParams k3 = SchemeParams::grouped(3, 3, 7);
    const SchemeParams k2 = SchemeParams::grouped(2, 3, 8);
    for (int trial = 0; trial < 10000; ++trial) {
        const Bit s = static_cast<Bit>(trial & 1);
        {
            RandomSource rng(7, static_cast<std::uint64_t>(trial));
            const GroupedPixelShare share = share_pixel_grouped_traced(s, k3, rng);
            // complete group 2 covers {1,2,3} exactly; the trailing group holds one index
            std::multiset<int> group2(share.source_pos.begin() + 3, share.source_pos.begin() + 6);
            CHECK(group2 == std::multiset<int>{1, 2, 3});
            CHECK(share.source_pos[6] >= 1);
            CHECK(share.source_pos[6] <= 3);
        }
        {
            RandomSource rng(8, static_cast<std::uint64_t>(trial));
            const GroupedPixelShare share = share_pixel_grouped_traced(s, k2, rng);
            std::multiset<int> group2(share.source_pos.begin() + 3, share.source_pos.begin() + 6);
            CHECK(group2 == std::multiset<int>{1, 2, 3});
            CHECK(share.source_pos[6] != share.source_pos[7]);  // incomplete group: distinct
        }
    }
}

TEST_CASE("grouped share bits transmit 1/2 individually") {
    const SchemeParams params = SchemeParams::grouped(3, 3, 7);
    const int trials = 100000;
    for (int position : {0, 3, 6}) {
        for (Bit s : {Bit{0}, Bit{1}}) {
            int transparent = 0;
            for (int trial = 0; trial < trials; ++trial) {
                RandomSource rng(99, static_cast<std::uint64_t>(trial));
                transparent += share_pixel_grouped(s, params, rng)[static_cast<std::size_t>(
                                   position)] == 0;
            }
            CHECK(static_cast<double>(transparent) / trials ==
                  doctest::Approx(0.5).epsilon(0.02));
        }
    }
}

TEST_CASE("scheme params and layout") {
    CHECK_THROWS_AS(SchemeParams::grouped(1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(SchemeParams::grouped(3, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(SchemeParams::grouped(3, 6, 5), std::invalid_argument);
    CHECK_THROWS_AS(SchemeParams::traditional(Variant::yan, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(SchemeParams::traditional(Variant::grouped, 2, 4), std::invalid_argument);

    const BitGroupLayout layout = BitGroupLayout::of(SchemeParams::grouped(3, 5, 12));
    CHECK(layout.group_count == 3);
    CHECK(layout.sizes == std::vector<int>{5, 5, 2});
    CHECK(layout.group_of(1) == 1);
    CHECK(layout.group_of(5) == 1);
    CHECK(layout.group_of(6) == 2);
    CHECK(layout.group_of(11) == 3);
    CHECK(layout.group_of(12) == 3);

    const BitGroupLayout flat = BitGroupLayout::of(SchemeParams::traditional(Variant::yan, 3, 12));
    CHECK(flat.group_count == 1);
    CHECK(flat.sizes == std::vector<int>{12});

    CHECK(variant_from_name("grouped") == Variant::grouped);
    CHECK(variant_from_name(variant_name(Variant::wu_sun)) == Variant::wu_sun);
    CHECK_THROWS_AS(variant_from_name("nope"), std::invalid_argument);
}
