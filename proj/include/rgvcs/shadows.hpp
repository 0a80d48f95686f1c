#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rgvcs/image.hpp"
#include "rgvcs/sharing.hpp"

namespace rgvcs {

// The n shadow images produced by sharing one secret, plus their group layout.
struct ShadowSet {
    SchemeParams params;
    BitGroupLayout layout;
    std::vector<BinaryImage> shadows;
};

// Encrypts every pixel independently and distributes the resulting bits to
// the shadow images. Each pixel draws from its own (seed, row, col) stream,
// so the output is bit-identical for any thread count. threads <= 0 picks
// the hardware concurrency.
ShadowSet share_image(const BinaryImage& secret, const SchemeParams& params,
                      std::uint64_t seed, int threads = 1);

// Pixel-wise OR of the given shadows.
BinaryImage recover_image(std::span<const BinaryImage> shadows);
// Same, selecting shadows of a set by their 1-based indices.
BinaryImage recover_image(const ShadowSet& set, std::span<const int> indices);

// Plain-text record binding shadow files to parameters, seed, and layout.
// Line-oriented key=value; list values are comma-separated.
struct ShareManifest {
    int version = 1;
    SchemeParams params;
    std::uint64_t seed = 0;
    int height = 0;
    int width = 0;
    std::vector<std::string> shadow_files;
    std::vector<int> groups;  // 1-based group per shadow, in shadow order

    static ShareManifest describe(const ShadowSet& set, std::uint64_t seed);

    std::string to_text() const;
    static ShareManifest parse(std::string_view text);  // throws io_error

    bool operator==(const ShareManifest&) const = default;
};

// Conventional shadow filename: sc_<index>.pbm.
std::string shadow_filename(int index);

}  // namespace rgvcs
